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
#include <set>
#include <string>

#include "doctest.h"
#include "edrs/error.hpp"
#include "edrs/metric.hpp"
#include "support/oracles.hpp"

namespace edrs {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an edrs::Error");
  return ErrorCode::kInvalidArgument;
}

EdgeLabel L(std::string_view s) { return EdgeLabel::parse(s); }

Distance bfs(Family f, std::size_t n, std::string_view a, std::string_view b) {
  const auto g = family_graph(f, n);
  return g.graph.line_distances()(g.labels.index_of(a), g.labels.index_of(b));
}

TEST_CASE("edge labels") {
  CHECK(L("e3") == EdgeLabel{EdgeClass::kE, 3});
  CHECK(L("g12").to_string() == "g12");
  CHECK(EdgeLabel::of(EdgeClass::kF, -1, 8) == L("f7"));
  CHECK(EdgeLabel::of(EdgeClass::kF, 9, 8) == L("f1"));
  for (auto bad : {"", "e", "x1", "e-1", "e1x", "E1"})
    CHECK(code_of([&] { EdgeLabel::parse(bad); }) == ErrorCode::kInvalidLabel);
  CHECK(parse_family("prism") == Family::kPrism);
  CHECK(to_string(Family::kSunlet) == "sunlet");
  CHECK(code_of([] { parse_family("wheel"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("base tables") {
  CHECK(base_table(Family::kSunlet, 8).at(L("f4")) == 4);
  CHECK(base_table(Family::kSunlet, 9).at(L("f4")) == 5);
  CHECK(base_table(Family::kPrism, 7).at(L("g3")) == 4);
  CHECK(base_table(Family::kSunlet, 8).base == L("e0"));
  CHECK(base_table(Family::kPrism, 8).base == L("f0"));
  CHECK(code_of([] { base_table(Family::kSunlet, 3); }) == ErrorCode::kUnsupportedParameter);
  CHECK(code_of([] { base_table(Family::kPrism, 5); }) == ErrorCode::kUnsupportedParameter);
  CHECK(code_of([] { base_table(Family::kSunlet, 8).at(L("g0")); }) == ErrorCode::kInvalidLabel);
  CHECK(code_of([] { base_table(Family::kSunlet, 8).at(L("e8")); }) == ErrorCode::kInvalidLabel);
}

TEST_CASE("fibers equal the BFS partition from the base edge") {
  for (Family f : {Family::kSunlet, Family::kPrism}) {
    for (std::size_t n = min_supported_n(f); n <= 20; ++n) {
      const auto table = base_table(f, n);
      const auto g = family_graph(f, n);
      const auto& dm = g.graph.line_distances();
      const std::size_t b = g.labels.index_of(table.base.to_string());
      const auto fibers = table.fibers();
      std::size_t covered = 0;
      for (std::size_t i = 0; i < fibers.size(); ++i) {
        CHECK_FALSE(fibers[i].empty());
        for (const auto& label : fibers[i]) {
          CHECK(dm(b, g.labels.index_of(label.to_string())) == Distance(i));
          ++covered;
        }
      }
      CHECK(covered == g.graph.size());
      const std::size_t k = n / 2;
      const std::size_t empty_from =
          f == Family::kSunlet && n % 2 == 0 ? k + 1 : k + 2;
      CHECK(fibers.size() == empty_from);
    }
  }
}

TEST_CASE("closed-form distances") {
  CHECK(closed_edge_distance(Family::kSunlet, 8, L("f0"), L("f4")) ==
        bfs(Family::kSunlet, 8, "f0", "f4"));
  CHECK(closed_edge_distance(Family::kSunlet, 8, L("f0"), L("f4")) == 5);
  CHECK(closed_edge_distance(Family::kPrism, 8, L("e0"), L("g0")) ==
        bfs(Family::kPrism, 8, "e0", "g0"));
  CHECK(closed_edge_distance(Family::kPrism, 8, L("e0"), L("g0")) == 2);
  CHECK(closed_edge_distance(Family::kSunlet, 9, L("e0"), L("e5")) == 4);
  CHECK(closed_edge_distance(Family::kSunlet, 9, L("e0"), L("e5")) ==
        bfs(Family::kSunlet, 9, "e0", "e5"));
  CHECK(code_of([] { closed_edge_distance(Family::kSunlet, 8, L("g0"), L("e0")); }) ==
        ErrorCode::kInvalidLabel);
}

TEST_CASE("closed-form distance is symmetric with zero self-distance") {
  for (Family f : {Family::kSunlet, Family::kPrism}) {
    for (std::size_t n = min_supported_n(f); n <= 20; ++n) {
      const auto table = base_table(f, n);
      const auto labels = all_labels(f, n);
      bool ok = true;
      for (const auto& a : labels) {
        ok = ok && closed_edge_distance(table, a, a) == 0;
        for (const auto& b : labels)
          ok = ok && closed_edge_distance(table, a, b) == closed_edge_distance(table, b, a);
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("formulas agree with BFS") {
  for (const auto& v : verify_family(Family::kSunlet, 4, 20)) {
    CHECK(v.deviations.empty());
    CHECK(v.pairs_checked == v.n * 2 * (v.n * 2 - 1) / 2);
  }
  for (const auto& v : verify_family(Family::kPrism, 6, 20)) {
    CHECK(v.deviations.empty());
    CHECK(v.pairs_checked == v.n * 3 * (v.n * 3 - 1) / 2);
  }
  CHECK(verify_family(Family::kSunlet, 9, 8).empty());
  CHECK(code_of([] { verify_family(Family::kPrism, 5, 7); }) ==
        ErrorCode::kUnsupportedParameter);
}

TEST_CASE("corrupted base table is caught") {
  auto table = base_table(Family::kSunlet, 10);
  table.dist_to_base[L("f3")] += 1;
  const auto v = verify_table(table);
  REQUIRE_FALSE(v.deviations.empty());
  const bool names_entry = std::any_of(v.deviations.begin(), v.deviations.end(), [](const auto& d) {
    return (d.a == L("e0") && d.b == L("f3")) || (d.a == L("f3") && d.b == L("e0"));
  });
  CHECK(names_entry);
  for (const auto& d : v.deviations) CHECK(d.formula_value != d.bfs_value);

  auto prism = base_table(Family::kPrism, 9);
  prism.dist_to_base[L("e2")] -= 1;
  CHECK_FALSE(verify_table(prism).deviations.empty());
}

TEST_CASE("coordinate tables") {
  auto row = [](const CoordinateTable& t, std::string_view label) {
    const auto it = std::find_if(t.rows.begin(), t.rows.end(),
                                 [&](const auto& r) { return r.edge == L(label); });
    REQUIRE(it != t.rows.end());
    return it->coords;
  };
  const auto s8 = reproduce_coordinate_table(Family::kSunlet, 8);
  CHECK(s8.matches());
  CHECK(row(s8, "e0") == Coordinates{0, 1, 4});
  CHECK(row(s8, "f3") == Coordinates{4, 3, 1});
  CHECK(s8.basis == std::vector<EdgeLabel>{L("e0"), L("e1"), L("e4")});
  const auto y8 = reproduce_coordinate_table(Family::kPrism, 8);
  CHECK(y8.matches());
  CHECK(row(y8, "f4") == Coordinates{4, 1, 2});
  CHECK(row(y8, "f0") == Coordinates{1, 4, 4});
  const auto y9 = reproduce_coordinate_table(Family::kPrism, 9);
  CHECK(y9.matches());
  CHECK(row(y9, "e4") == Coordinates{4, 0, 3});
  CHECK(y9.basis == std::vector<EdgeLabel>{L("e0"), L("e4"), L("g6")});

  for (const auto* t : {&s8, &y8, &y9})
    CHECK(std::is_sorted(t->rows.begin(), t->rows.end(),
                         [](const auto& a, const auto& b) { return a.fiber < b.fiber; }));
}

TEST_CASE("coordinate tables match for every supported size") {
  for (std::size_t n = 4; n <= 20; ++n) {
    const auto t = reproduce_coordinate_table(Family::kSunlet, n);
    CAPTURE(n);
    CHECK(t.matches());
    CHECK(check_distinctness(t).ok());
  }
  for (std::size_t n = 6; n <= 20; ++n) {
    const auto t = reproduce_coordinate_table(Family::kPrism, n);
    CAPTURE(n);
    CHECK(t.matches());
    CHECK(check_distinctness(t).ok());
  }
}

TEST_CASE("errata are reported with their resolutions") {
  const auto s8 = reproduce_coordinate_table(Family::kSunlet, 8);
  REQUIRE(s8.errata.size() == 1);
  CHECK(s8.errata[0].edge == L("f0"));
  CHECK(s8.errata[0].coords == Coordinates{1, 1, 4});
  const auto s9 = reproduce_coordinate_table(Family::kSunlet, 9);
  std::set<std::string> labels;
  for (const auto& r : s9.errata) labels.insert(r.edge.to_string());
  CHECK(labels == std::set<std::string>{"e0", "f0", "e7", "e6"});
  const auto y9 = reproduce_coordinate_table(Family::kPrism, 9);
  CHECK_FALSE(y9.errata.empty());
  for (const auto& r : y9.errata) CHECK_FALSE(r.erratum.empty());
  CHECK(code_of([] { reference_coordinate_rows(Family::kSunlet, 3); }) ==
        ErrorCode::kUnsupportedParameter);
}

TEST_CASE("distinctness detects colliding rows") {
  auto t = reproduce_coordinate_table(Family::kSunlet, 8);
  CHECK(check_distinctness(t).ok());
  t.rows[1].coords = t.rows[2].coords;
  auto r = check_distinctness(t);
  CHECK_FALSE(r.rows_distinct);
  CHECK_FALSE(r.ok());

  auto u = reproduce_coordinate_table(Family::kSunlet, 8);
  for (auto& c : u.rows[3].coords) c = 0;
  u.rows[4].coords = u.rows[3].coords;
  for (auto& c : u.rows[4].coords) c += Distance(u.rows[4].fiber) - Distance(u.rows[3].fiber) + 0;
  r = check_distinctness(u);
  CHECK_FALSE(r.no_constant_offsets);
}

TEST_CASE("doubly resolving bases pass and are minimal") {
  for (Family f : {Family::kSunlet, Family::kPrism}) {
    for (std::size_t n = min_supported_n(f); n <= 14; ++n) {
      const auto g = family_graph(f, n);
      const auto& dm = g.graph.line_distances();
      std::vector<std::size_t> basis;
      for (const auto& l : doubly_resolving_basis(f, n))
        basis.push_back(g.labels.index_of(l.to_string()));
      CAPTURE(n);
      CHECK(is_doubly_resolving(dm, basis).ok);
      CHECK(testing::oracle_doubly_resolving(testing::line_graph_distances(g.graph), basis));
      for (std::size_t i = 0; i < 3; ++i) {
        auto rest = basis;
        rest.erase(rest.begin() + std::ptrdiff_t(i));
        CHECK_FALSE(is_doubly_resolving(dm, rest).ok);
      }
    }
  }
}

TEST_CASE("pair table rows fail with their listed witnesses") {
  for (std::size_t n = 4; n <= 14; n += 2) {
    const auto g = family_graph(Family::kSunlet, n);
    const auto rows = sunlet_pair_table(n);
    CHECK(rows.size() == 7);
    for (const auto& row : rows) {
      for (const auto& cand : row.candidates) {
        std::vector<std::string> labels;
        for (const auto& l : cand) labels.push_back(l.to_string());
        CAPTURE(row.description);
        CHECK_FALSE(labeled_doubly_resolving_check(g, labels).ok);
        CHECK(is_labeled_witness(g, labels, row.witness.first.to_string(),
                                 row.witness.second.to_string()));
      }
    }
  }
  CHECK(code_of([] { sunlet_pair_table(9); }) == ErrorCode::kUnsupportedParameter);
}

}  // namespace
}  // namespace edrs
