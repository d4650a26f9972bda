// Copyright 2026 The edge-drs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edrs/closed_form.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "edrs/error.hpp"

namespace edrs {
namespace {

using Rows = std::vector<ReferenceRow>;

long long as_signed(std::size_t x) { return static_cast<long long>(x); }

void require_supported(Family family, std::size_t n) {
  if (n < min_supported_n(family)) {
    throw Error(ErrorCode::kUnsupportedParameter,
                std::string(to_string(family)) + " closed forms need n >= " +
                    std::to_string(min_supported_n(family)) + ", got " +
                    std::to_string(n));
  }
}

void require_valid(const BaseDistanceTable& table, EdgeLabel label) {
  if (label.index >= table.n ||
      (table.family == Family::kSunlet && label.cls == EdgeClass::kG)) {
    throw Error(ErrorCode::kInvalidLabel,
                label.to_string() + " is not an edge of " +
                    std::string(to_string(table.family)) + ":" +
                    std::to_string(table.n));
  }
}

// Base-table lookup at class `cls`, offset |j - i|.
Distance base(const BaseDistanceTable& t, EdgeClass cls, std::size_t m) {
  return t.at(EdgeLabel{cls, m});
}

Distance sunlet_distance(const BaseDistanceTable& t, EdgeLabel a,
                         EdgeLabel b) {
  if (a.cls == EdgeClass::kF && b.cls == EdgeClass::kE) std::swap(a, b);
  const std::size_t k = t.n / 2;
  const bool even = t.n % 2 == 0;
  const std::size_t i = a.index;
  const std::size_t j = b.index;
  const std::size_t m = i > j ? i - j : j - i;
  if (a.cls == EdgeClass::kE && b.cls == EdgeClass::kE) {
    return base(t, EdgeClass::kE, m);
  }
  const Distance df = base(t, EdgeClass::kF, m);
  if (a.cls == EdgeClass::kF) {  // f_i, f_j
    if (m == 0) return df - 1;
    const bool near = even ? m < k : m <= k;
    return near ? df : df + 1;
  }
  // e_i, f_j
  if (i <= j) return df;
  if (even) {
    if (m < k) return df - 1;
    if (m == k) return df;
    return df + 1;
  }
  return m <= k ? df - 1 : df + 1;
}

int prism_rank(EdgeClass cls) {
  switch (cls) {
    case EdgeClass::kF: return 0;
    case EdgeClass::kE: return 1;
    case EdgeClass::kG: return 2;
  }
  return 3;
}

Distance prism_distance(const BaseDistanceTable& t, EdgeLabel a,
                        EdgeLabel b) {
  if (prism_rank(a.cls) > prism_rank(b.cls)) std::swap(a, b);
  const std::size_t k = t.n / 2;
  const bool even = t.n % 2 == 0;
  const std::size_t i = a.index;
  const std::size_t j = b.index;
  const std::size_t m = i > j ? i - j : j - i;
  if (a.cls == EdgeClass::kF && b.cls == EdgeClass::kF) {
    return base(t, EdgeClass::kF, m);
  }
  const Distance de = base(t, EdgeClass::kE, m);
  const bool near = even ? m < k : m <= k;
  if (a.cls == b.cls) return near ? de - 1 : de;  // e,e or g,g
  if (a.cls == EdgeClass::kF) {                     // f_i with e_j or g_j
    if (i <= j) return de;
    if (even && m == k) return de;
    return near ? de - 1 : de + 1;
  }
  // e_i, g_j
  if (m == 0) return de + 1;
  return near ? de : de + 1;
}

void add_row(Rows& rows, std::size_t fiber, EdgeClass cls, long long index,
             std::size_t n, Coordinates coords, std::string erratum = {}) {
  rows.push_back(ReferenceRow{fiber, EdgeLabel::of(cls, index, n),
                              std::move(coords), std::move(erratum)});
}

Rows sunlet_even_rows(std::size_t n) {
  const auto k = static_cast<Distance>(n / 2);
  constexpr auto E = EdgeClass::kE;
  constexpr auto F = EdgeClass::kF;
  Rows rows;
  add_row(rows, 0, E, 0, n, {0, 1, k});
  for (Distance i = 1; i < k; ++i) {
    const auto fi = static_cast<std::size_t>(i);
    const long long nn = as_signed(n);
    if (i == 1) {
      add_row(rows, fi, F, i - 1, n, {1, 1, k},
              "printed (i, i-1, k+1-i) = (1, 0, k) at i = 1; f0 meets e1, so "
              "the second coordinate is 1");
    } else {
      add_row(rows, fi, F, i - 1, n, {i, i - 1, k + 1 - i});
    }
    add_row(rows, fi, E, i, n, {i, i - 1, k - i});
    add_row(rows, fi, F, nn - i, n, {i, i + 1, k + 1 - i});
    add_row(rows, fi, E, nn - i, n, {i, i + 1, k - i});
  }
  const auto fk = static_cast<std::size_t>(k);
  add_row(rows, fk, F, k - 1, n, {k, k - 1, 1});
  add_row(rows, fk, F, k, n, {k, k, 1});
  add_row(rows, fk, E, k, n, {k, k - 1, 0});
  return rows;
}

Rows sunlet_odd_rows(std::size_t n) {
  const auto k = static_cast<Distance>(n / 2);
  constexpr auto E = EdgeClass::kE;
  constexpr auto F = EdgeClass::kF;
  const long long nn = as_signed(n);
  Rows rows;
  add_row(rows, 0, E, 0, n, {0, 1, k},
          "printed (o, 1, k); the letter o is the digit 0");
  for (Distance i = 1; i < k; ++i) {
    const auto fi = static_cast<std::size_t>(i);
    if (i == 1) {
      add_row(rows, fi, F, i - 1, n, {1, 1, k + 1},
              "printed (i, i-1, k+2-i) = (1, 0, k+1) at i = 1; f0 meets e1, "
              "so the second coordinate is 1");
    } else {
      add_row(rows, fi, F, i - 1, n, {i, i - 1, k + 2 - i});
    }
    add_row(rows, fi, E, i, n, {i, i - 1, k + 1 - i});
    add_row(rows, fi, F, nn - i, n, {i, i + 1, k + 1 - i});
    add_row(rows, fi, E, nn - i, n, {i, i + 1, k - i},
            i == 1 ? std::string()
                   : "labeled e_{n-1} in print; the row belongs to e_{n-i}");
  }
  const auto fk = static_cast<std::size_t>(k);
  add_row(rows, fk, F, k - 1, n, {k, k - 1, 2});
  add_row(rows, fk, E, k, n, {k, k - 1, 1});
  add_row(rows, fk, F, k + 1, n, {k, k + 1, 1});
  add_row(rows, fk, E, k + 1, n, {k, k, 0});
  add_row(rows, fk + 1, F, k, n, {k + 1, k, 1});
  return rows;
}

Rows prism_even_rows(std::size_t n) {
  const auto k = static_cast<Distance>(n / 2);
  constexpr auto E = EdgeClass::kE;
  constexpr auto F = EdgeClass::kF;
  constexpr auto G = EdgeClass::kG;
  const long long nn = as_signed(n);
  Rows rows;
  add_row(rows, 0, F, 0, n, {1, k, k});
  add_row(rows, 1, E, 0, n, {0, k - 1, k});
  add_row(rows, 1, G, 0, n, {2, k, k});
  add_row(rows, 1, E, nn - 1, n, {1, k, k - 1});
  add_row(rows, 1, G, nn - 1, n, {2, k + 1, k - 1});
  add_row(rows, 2, F, 1, n, {1, k - 1, k + 1});
  add_row(rows, 2, E, 1, n, {1, k - 2, k});
  add_row(rows, 2, G, 1, n, {2, k - 1, k});
  add_row(rows, 2, F, nn - 1, n, {2, k, k - 1});
  add_row(rows, 2, E, nn - 2, n, {2, k - 1, k - 2});
  add_row(rows, 2, G, nn - 2, n, {3, k, k - 2});
  for (Distance i = 3; i <= k; ++i) {
    const auto fi = static_cast<std::size_t>(i);
    const bool last = i == k;
    add_row(rows, fi, F, i - 1, n, {i - 1, k + 1 - i, k + 3 - i});
    add_row(rows, fi, E, i - 1, n, {i - 1, k - i, k + 2 - i});
    add_row(rows, fi, G, i - 1, n,
            last ? Coordinates{k, 2, 2} : Coordinates{i, k + 1 - i, k + 2 - i});
    add_row(rows, fi, F, nn + 1 - i, n,
            last ? Coordinates{k, 2, 0} : Coordinates{i, k + 2 - i, k + 1 - i});
    add_row(rows, fi, E, nn - i, n,
            last ? Coordinates{k, 1, 1} : Coordinates{i, k + 1 - i, k - i});
    if (last) {
      add_row(rows, fi, G, nn - i, n, {k + 1, 2, 1});
    } else {
      add_row(rows, fi, G, nn - i, n, {i + 1, k + 2 - i, k - i},
              "printed (i, k+2-i, k-i) for i < k; g_{n-i} is one step "
              "farther from e0 than e_{n-i}, so the first coordinate is i+1");
    }
  }
  add_row(rows, static_cast<std::size_t>(k) + 1, F, k, n, {k, 1, 2});
  return rows;
}

Rows prism_odd_rows(std::size_t n) {
  const auto k = static_cast<Distance>(n / 2);
  constexpr auto E = EdgeClass::kE;
  constexpr auto F = EdgeClass::kF;
  constexpr auto G = EdgeClass::kG;
  const long long nn = as_signed(n);
  Rows rows;
  add_row(rows, 0, F, 0, n, {1, k + 1, k - 1});
  add_row(rows, 1, E, 0, n, {0, k, k});
  add_row(rows, 1, G, 0, n, {2, k + 1, k - 1});
  add_row(rows, 1, E, nn - 1, n, {1, k, k - 1});
  add_row(rows, 1, G, nn - 1, n, {2, k + 1, k - 2});
  add_row(rows, 2, F, 1, n, {1, k, k});
  add_row(rows, 2, E, 1, n, {1, k - 1, k + 1});
  add_row(rows, 2, G, 1, n, {2, k, k});
  add_row(rows, 2, F, nn - 1, n, {2, k, k - 2});
  if (k == 3) {
    add_row(rows, 2, E, nn - 2, n, {2, 2, 2});
  } else {
    add_row(rows, 2, E, nn - 2, n, {2, k - 1, k - 2},
            "printed \"(2, k-i, k-2) if k < 3\" with i unbound; resolved to "
            "(2, k-1, k-2) for k > 3");
  }
  add_row(rows, 2, G, nn - 2, n, {3, k, k - 3});
  for (Distance i = 3; i <= k; ++i) {
    const auto fi = static_cast<std::size_t>(i);
    add_row(rows, fi, F, i - 1, n, {i - 1, k + 2 - i, k + 4 - i});
    add_row(rows, fi, E, i - 1, n, {i - 1, k + 1 - i, k + 4 - i});
    add_row(rows, fi, G, i - 1, n, {i, k + 2 - i, k + 3 - i});
    if (i == k) {
      add_row(rows, fi, F, nn + 1 - i, n, {k, 2, 1});
      add_row(rows, fi, E, nn - i, n, {k, 1, 2});
      add_row(rows, fi, G, nn - i, n, {k + 1, 2, 1});
    } else {
      add_row(rows, fi, F, nn + 1 - i, n, {i, k + 2 - i, k - i});
      add_row(rows, fi, E, nn - i, n,
              i + 1 == k ? Coordinates{i, 2, 2}
                         : Coordinates{i, k + 1 - i, k - i});
      add_row(rows, fi, G, nn - i, n, {i + 1, k + 2 - i, k - 1 - i});
    }
  }
  const auto last = static_cast<std::size_t>(k) + 1;
  add_row(rows, last, F, k, n, {k, 1, 3});
  add_row(rows, last, E, k, n, {k, 0, 3});
  add_row(rows, last, G, k, n, {k + 1, 2, 2});
  add_row(rows, last, F, k + 1, n, {k + 1, 1, 2});
  return rows;
}

}  // namespace

std::string_view to_string(Family family) {
  return family == Family::kSunlet ? "sunlet" : "prism";
}

Family parse_family(std::string_view name) {
  if (name == "sunlet") return Family::kSunlet;
  if (name == "prism") return Family::kPrism;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown family '" + std::string(name) +
                  "' (expected sunlet or prism)");
}

EdgeLabel EdgeLabel::of(EdgeClass cls, long long index, std::size_t n) {
  const long long nn = as_signed(n);
  return EdgeLabel{cls, static_cast<std::size_t>(((index % nn) + nn) % nn)};
}

EdgeLabel EdgeLabel::parse(std::string_view text) {
  if (text.size() < 2) {
    throw Error(ErrorCode::kInvalidLabel, "bad label '" + std::string(text) + "'");
  }
  EdgeLabel label;
  switch (text.front()) {
    case 'e': label.cls = EdgeClass::kE; break;
    case 'f': label.cls = EdgeClass::kF; break;
    case 'g': label.cls = EdgeClass::kG; break;
    default:
      throw Error(ErrorCode::kInvalidLabel,
                  "bad label class in '" + std::string(text) + "'");
  }
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, label.index);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kInvalidLabel,
                "bad label index in '" + std::string(text) + "'");
  }
  return label;
}

std::string EdgeLabel::to_string() const {
  const char prefix = cls == EdgeClass::kE ? 'e' : cls == EdgeClass::kF ? 'f' : 'g';
  return std::string(1, prefix) + std::to_string(index);
}

std::size_t min_supported_n(Family family) {
  return family == Family::kSunlet ? 4 : 6;
}

LabeledFamilyGraph family_graph(Family family, std::size_t n) {
  return family == Family::kSunlet ? make_sunlet(n) : make_prism(n);
}

std::vector<EdgeLabel> all_labels(Family family, std::size_t n) {
  std::vector<EdgeLabel> labels;
  std::vector<EdgeClass> classes{EdgeClass::kE, EdgeClass::kF};
  if (family == Family::kPrism) classes.push_back(EdgeClass::kG);
  for (EdgeClass cls : classes) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(EdgeLabel{cls, i});
  }
  return labels;
}

Distance BaseDistanceTable::at(EdgeLabel label) const {
  auto it = dist_to_base.find(label);
  if (it == dist_to_base.end()) {
    throw Error(ErrorCode::kInvalidLabel,
                label.to_string() + " missing from base table");
  }
  return it->second;
}

std::vector<std::vector<EdgeLabel>> BaseDistanceTable::fibers() const {
  std::vector<std::vector<EdgeLabel>> out;
  for (const auto& [label, d] : dist_to_base) {
    const auto i = static_cast<std::size_t>(d);
    if (out.size() <= i) out.resize(i + 1);
    out[i].push_back(label);
  }
  return out;
}

BaseDistanceTable base_table(Family family, std::size_t n) {
  require_supported(family, n);
  const long long nn = as_signed(n);
  const long long k = nn / 2;
  const bool even = n % 2 == 0;
  constexpr auto E = EdgeClass::kE;
  constexpr auto F = EdgeClass::kF;
  constexpr auto G = EdgeClass::kG;

  BaseDistanceTable table;
  table.family = family;
  table.n = n;
  auto put = [&](long long fiber, EdgeClass cls, long long index) {
    const EdgeLabel label = EdgeLabel::of(cls, index, n);
    auto [it, inserted] = table.dist_to_base.emplace(label, Distance(fiber));
    if (!inserted && it->second != fiber) {
      throw Error(ErrorCode::kInvalidArgument,
                  label.to_string() + " placed in two fibers");
    }
  };

  if (family == Family::kSunlet) {
    table.base = EdgeLabel{E, 0};
    put(0, E, 0);
    for (long long i = 1; i <= k; ++i) {
      put(i, F, i - 1);
      put(i, E, i);
      put(i, F, nn - i);
      put(i, E, nn - i);
    }
    if (even) {
      put(k, F, k - 1);
      put(k, F, k);
      put(k, E, k);
    } else {
      put(k, F, k - 1);
      put(k, E, k);
      put(k, F, k + 1);
      put(k, E, k + 1);
      put(k + 1, F, k);
    }
  } else {
    table.base = EdgeLabel{F, 0};
    put(0, F, 0);
    put(1, E, 0);
    put(1, G, 0);
    put(1, E, nn - 1);
    put(1, G, nn - 1);
    for (long long i = 2; i <= k; ++i) {
      put(i, F, i - 1);
      put(i, E, i - 1);
      put(i, G, i - 1);
      put(i, F, nn + 1 - i);
      put(i, E, nn - i);
      put(i, G, nn - i);
    }
    if (even) {
      put(k + 1, F, k);
    } else {
      put(k + 1, F, k);
      put(k + 1, E, k);
      put(k + 1, G, k);
      put(k + 1, F, k + 1);
    }
  }
  if (table.dist_to_base.size() != all_labels(family, n).size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "base table does not cover every edge");
  }
  return table;
}

Distance closed_edge_distance(const BaseDistanceTable& table, EdgeLabel a,
                              EdgeLabel b) {
  require_valid(table, a);
  require_valid(table, b);
  return table.family == Family::kSunlet ? sunlet_distance(table, a, b)
                                         : prism_distance(table, a, b);
}

Distance closed_edge_distance(Family family, std::size_t n, EdgeLabel a,
                              EdgeLabel b) {
  return closed_edge_distance(base_table(family, n), a, b);
}

FamilyVerification verify_table(const BaseDistanceTable& table) {
  const auto g = family_graph(table.family, table.n);
  const DistanceMatrix& dm = g.graph.line_distances();
  const auto labels = all_labels(table.family, table.n);
  std::vector<std::size_t> index;
  for (const auto& label : labels) index.push_back(g.labels.index_of(label.to_string()));

  FamilyVerification out{table.family, table.n, 0, {}};
  for (std::size_t p = 0; p < labels.size(); ++p) {
    for (std::size_t q = p; q < labels.size(); ++q) {
      const Distance formula = closed_edge_distance(table, labels[p], labels[q]);
      const Distance bfs = dm(index[p], index[q]);
      if (p != q) ++out.pairs_checked;
      if (formula != bfs) {
        out.deviations.push_back(FormulaDeviation{table.family, table.n,
                                                  labels[p], labels[q],
                                                  formula, bfs});
      }
    }
  }
  return out;
}

std::vector<FamilyVerification> verify_family(Family family, std::size_t n_lo,
                                              std::size_t n_hi) {
  std::vector<FamilyVerification> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    out.push_back(verify_table(base_table(family, n)));
  }
  return out;
}

std::vector<EdgeLabel> doubly_resolving_basis(Family family, std::size_t n) {
  require_supported(family, n);
  const long long k = as_signed(n / 2);
  constexpr auto E = EdgeClass::kE;
  if (family == Family::kSunlet) {
    const long long third = n % 2 == 0 ? k : k + 1;
    return {EdgeLabel::of(E, 0, n), EdgeLabel::of(E, 1, n),
            EdgeLabel::of(E, third, n)};
  }
  if (n % 2 == 0) {
    return {EdgeLabel::of(E, 0, n), EdgeLabel::of(E, k - 1, n),
            EdgeLabel::of(EdgeClass::kF, k + 1, n)};
  }
  return {EdgeLabel::of(E, 0, n), EdgeLabel::of(E, k, n),
          EdgeLabel::of(EdgeClass::kG, k + 2, n)};
}

std::vector<ReferenceRow> reference_coordinate_rows(Family family,
                                                    std::size_t n) {
  require_supported(family, n);
  // The odd sunlet rows assume k >= 2, the prism rows k >= 3.
  if (family == Family::kSunlet) {
    return n % 2 == 0 ? sunlet_even_rows(n) : sunlet_odd_rows(n);
  }
  if (n < 7 && n % 2 == 1) {
    throw Error(ErrorCode::kUnsupportedParameter, "odd prisms need n >= 7");
  }
  return n % 2 == 0 ? prism_even_rows(n) : prism_odd_rows(n);
}

CoordinateTable reproduce_coordinate_table(Family family, std::size_t n) {
  CoordinateTable table;
  table.family = family;
  table.n = n;
  table.basis = doubly_resolving_basis(family, n);
  const auto reference = reference_coordinate_rows(family, n);

  const auto g = family_graph(family, n);
  const DistanceMatrix& dm = g.graph.line_distances();
  const EdgeLabel base_label =
      family == Family::kSunlet ? EdgeLabel{EdgeClass::kE, 0} : EdgeLabel{EdgeClass::kF, 0};
  const std::size_t base = g.labels.index_of(base_label.to_string());
  std::vector<std::size_t> basis;
  for (const auto& label : table.basis) basis.push_back(g.labels.index_of(label.to_string()));

  for (const auto& label : all_labels(family, n)) {
    const std::size_t h = g.labels.index_of(label.to_string());
    CoordinateRow row{static_cast<std::size_t>(dm(base, h)), label, {}};
    for (std::size_t x : basis) row.coords.push_back(dm(h, x));
    table.rows.push_back(std::move(row));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const CoordinateRow& a, const CoordinateRow& b) {
                     return a.fiber < b.fiber;
                   });

  std::map<EdgeLabel, const ReferenceRow*> expected;
  for (const auto& row : reference) {
    if (!expected.emplace(row.edge, &row).second) {
      table.mismatches.push_back({row.edge, row, std::nullopt});
    }
    if (!row.erratum.empty()) table.errata.push_back(row);
  }
  for (const auto& row : table.rows) {
    auto it = expected.find(row.edge);
    if (it == expected.end()) {
      table.mismatches.push_back({row.edge, std::nullopt, row});
      continue;
    }
    if (it->second->fiber != row.fiber || it->second->coords != row.coords) {
      table.mismatches.push_back({row.edge, *it->second, row});
    }
    expected.erase(it);
  }
  for (const auto& [label, row] : expected) {
    table.mismatches.push_back({label, *row, std::nullopt});
  }
  return table;
}

DistinctnessReport check_distinctness(const CoordinateTable& table) {
  DistinctnessReport report;
  const auto& rows = table.rows;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    for (std::size_t q = p + 1; q < rows.size(); ++q) {
      const auto& a = rows[p].coords;
      const auto& b = rows[q].coords;
      std::set<Distance> offsets;
      for (std::size_t j = 0; j < a.size(); ++j) offsets.insert(a[j] - b[j]);
      if (offsets.size() != 1) continue;
      const Distance offset = *offsets.begin();
      report.no_constant_offsets = false;
      if (offset == 0) report.rows_distinct = false;
      if (offset == static_cast<Distance>(rows[p].fiber) -
                        static_cast<Distance>(rows[q].fiber)) {
        report.no_fiber_offsets = false;
      }
    }
  }
  return report;
}

std::vector<PairTableRow> sunlet_pair_table(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorCode::kUnsupportedParameter,
                "the pair table covers even sunlets with n >= 4");
  }
  const long long nn = as_signed(n);
  const long long k = nn / 2;
  constexpr auto E = EdgeClass::kE;
  constexpr auto F = EdgeClass::kF;
  auto L = [n](EdgeClass cls, long long i) { return EdgeLabel::of(cls, i, n); };
  auto family = [&](EdgeClass c0, long long i0, EdgeClass c1, long long lo,
                    long long hi) {
    std::vector<std::vector<EdgeLabel>> sets;
    for (long long i = lo; i <= hi; ++i) sets.push_back({L(c0, i0), L(c1, i)});
    return sets;
  };
  return {
      {"{e0, ei}, 0 < i < k", family(E, 0, E, 1, k - 1), {L(E, 0), L(E, nn - 1)}},
      {"{e0, ei}, k < i <= n-1", family(E, 0, E, k + 1, nn - 1), {L(E, k), L(E, k + 1)}},
      {"{e0, fi}, 0 <= i < k", family(E, 0, F, 0, k - 1), {L(E, 0), L(F, nn - 1)}},
      {"{e0, fi}, k <= i <= n-1", family(E, 0, F, k, nn - 1), {L(E, 0), L(F, 0)}},
      {"{f0, fi}, 1 <= i < k", family(F, 0, F, 1, k - 1), {L(E, k), L(F, k)}},
      {"{f0, fk}", family(F, 0, F, k, k), {L(E, 0), L(E, 1)}},
      {"{f0, fi}, k < i <= n-1", family(F, 0, F, k + 1, nn - 1), {L(E, 1), L(F, 1)}},
  };
}

}  // namespace edrs
