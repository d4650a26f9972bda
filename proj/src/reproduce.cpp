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

#include "edrs/reproduce.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "edrs/closed_form.hpp"
#include "edrs/error.hpp"

namespace edrs {
namespace {

std::string join(const std::vector<std::string>& parts,
                 std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string labels_of(const std::vector<EdgeLabel>& labels) {
  std::vector<std::string> parts;
  for (const auto& l : labels) parts.push_back(l.to_string());
  return join(parts);
}

std::string coords_of(const Coordinates& c) {
  std::vector<std::string> parts;
  for (Distance d : c) parts.push_back(std::to_string(d));
  return "(" + join(parts) + ")";
}

std::vector<std::string> label_names(const LabeledFamilyGraph& g,
                                     const Landmarks& lm) {
  std::vector<std::string> names;
  for (std::size_t x : lm.elements) names.push_back(g.edge_name(x));
  return names;
}

class Reporter {
 public:
  explicit Reporter(ReproductionBundle& bundle) : bundle_(bundle) {}

  void section(const std::string& title) {
    section_ = title;
    md_ << "\n## " << title << "\n\n";
  }
  std::ostringstream& md() { return md_; }

  bool record(const std::string& name, bool passed, std::string detail = {}) {
    bundle_.checks.push_back({section_, name, passed, std::move(detail)});
    return passed;
  }

  std::string finish() {
    std::ostringstream head;
    head << "# Edge doubly resolving sets: reproduction report\n\n"
         << fmt::format("{} checks, {} failed.\n", bundle_.checks.size(),
                        bundle_.failures());
    if (bundle_.failures() > 0) {
      head << "\nFailed checks:\n\n";
      for (const auto& c : bundle_.checks) {
        if (!c.passed) {
          head << fmt::format("- [{}] {}: {}\n", c.section, c.name, c.detail);
        }
      }
    }
    return head.str() + md_.str();
  }

 private:
  ReproductionBundle& bundle_;
  std::string section_;
  std::ostringstream md_;
};

const char* mark(bool ok) { return ok ? "yes" : "**NO**"; }

void partitions(Reporter& r, Family family, std::size_t lo, std::size_t hi) {
  const std::string base = family == Family::kSunlet ? "e0" : "f0";
  r.section(fmt::format("Distance partition S_i({}) of {} graphs",
                        base, to_string(family)));
  r.md() << "| n | fibers (BFS on L(G)) | matches table |\n|---|---|---|\n";
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto table = base_table(family, n);
    const auto g = family_graph(family, n);
    const DistanceMatrix& dm = g.graph.line_distances();
    const std::size_t b = g.labels.index_of(base);
    std::vector<std::vector<EdgeLabel>> bfs;
    for (const auto& label : all_labels(family, n)) {
      const auto d = static_cast<std::size_t>(
          dm(b, g.labels.index_of(label.to_string())));
      if (bfs.size() <= d) bfs.resize(d + 1);
      bfs[d].push_back(label);
    }
    const bool ok = bfs == table.fibers();
    std::vector<std::string> rendered;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      rendered.push_back(fmt::format("S{}={{{}}}", i, labels_of(bfs[i])));
    }
    r.md() << fmt::format("| {} | {} | {} |\n", n, join(rendered, "; "), mark(ok));
    r.record(fmt::format("{}:{} partition", to_string(family), n), ok);
  }
}

void pair_table(Reporter& r, const std::vector<std::size_t>& ns) {
  r.section("Two-edge subsets of even sunlets that are not doubly resolving");
  r.md() << "| n | candidate sets | all fail | listed pair | pair confirmed |\n"
         << "|---|---|---|---|---|\n";
  for (std::size_t n : ns) {
    const auto g = make_sunlet(n);
    for (const auto& row : sunlet_pair_table(n)) {
      bool all_fail = true;
      bool confirmed = true;
      for (const auto& set : row.candidates) {
        std::vector<std::string> names;
        for (const auto& l : set) names.push_back(l.to_string());
        all_fail = all_fail && !labeled_doubly_resolving_check(g, names).ok;
        confirmed = confirmed &&
                    is_labeled_witness(g, names, row.witness.first.to_string(),
                                       row.witness.second.to_string());
      }
      const std::string pair = "{" + row.witness.first.to_string() + ", " +
                               row.witness.second.to_string() + "}";
      r.md() << fmt::format("| {} | {} ({} sets) | {} | {} | {} |\n", n,
                            row.description, row.candidates.size(),
                            mark(all_fail), pair, mark(confirmed));
      r.record(fmt::format("sunlet:{} {} fails", n, row.description), all_fail);
      r.record(fmt::format("sunlet:{} {} witness {}", n, row.description, pair),
               confirmed);
    }
  }
}

void coordinate_tables(Reporter& r, const std::vector<std::size_t>& ns) {
  for (Family family : {Family::kSunlet, Family::kPrism}) {
    for (std::size_t n : ns) {
      if (n < min_supported_n(family)) continue;
      const auto table = reproduce_coordinate_table(family, n);
      const auto distinct = check_distinctness(table);
      r.section(fmt::format("Edge metric coordinates of {}:{} w.r.t. {{{}}}",
                            to_string(family), n, labels_of(table.basis)));
      r.md() << "| i | edge | r_E(edge, D) |\n|---|---|---|\n";
      for (const auto& row : table.rows) {
        r.md() << fmt::format("| {} | {} | {} |\n", row.fiber,
                              row.edge.to_string(), coords_of(row.coords));
      }
      r.md() << "\n";
      for (const auto& e : table.errata) {
        r.md() << fmt::format("- erratum, row {}: {}\n", e.edge.to_string(),
                              e.erratum);
      }
      std::vector<std::string> mismatches;
      for (const auto& m : table.mismatches) {
        mismatches.push_back(fmt::format(
            "{} expected {} got {}", m.edge.to_string(),
            m.expected ? coords_of(m.expected->coords) : "-",
            m.computed ? coords_of(m.computed->coords) : "-"));
      }
      r.md() << fmt::format("\nmatches reference rows: {}; rows distinct and "
                            "free of constant offsets: {}\n",
                            mark(table.matches()), mark(distinct.ok()));
      const auto name = fmt::format("{}:{}", to_string(family), n);
      r.record(name + " coordinate rows", table.matches(), join(mismatches, "; "));
      r.record(name + " coordinate distinctness", distinct.ok());
    }
  }
}

void formula_check(Reporter& r, Family family, std::size_t hi) {
  r.section(fmt::format("Closed-form edge distances of {} graphs vs BFS",
                        to_string(family)));
  r.md() << "| n | pairs | deviations |\n|---|---|---|\n";
  for (const auto& v : verify_family(family, min_supported_n(family), hi)) {
    r.md() << fmt::format("| {} | {} | {} |\n", v.n, v.pairs_checked,
                          v.deviations.size());
    r.record(fmt::format("{}:{} closed forms", to_string(family), v.n),
             v.deviations.empty(),
             fmt::format("{} deviations", v.deviations.size()));
  }
}

struct SweepSpec {
  std::string family;
  std::size_t lo, hi;
  bool psi;
  std::size_t (*expected)(std::size_t n);
};

void sweep(Reporter& r, const SweepSpec& spec, unsigned threads) {
  const char* what = spec.psi ? "psi_E" : "dim_E";
  r.section(fmt::format("{} of {} graphs", what, spec.family));
  r.md() << fmt::format("| n | {} | expected | lexicographically first set |\n",
                        what)
         << "|---|---|---|---|\n";
  SearchOptions options;
  options.threads = threads;
  for (std::size_t n = spec.lo; n <= spec.hi; ++n) {
    const auto g = make_family(spec.family + ":" + std::to_string(n));
    const auto result = spec.psi ? psi_edge(g.graph, options)
                                 : edge_metric_dimension(g.graph, options);
    const std::size_t expected = spec.expected(n);
    const bool ok = result.cardinality == expected;
    r.md() << fmt::format("| {} | {} | {} | {{{}}} |\n", n, result.cardinality,
                          expected, join(label_names(g, result.best_set)));
    r.record(fmt::format("{}({}:{}) = {}", what, spec.family, n, expected), ok,
             fmt::format("got {}", result.cardinality));
  }
}

}  // namespace

bool ReproductionBundle::all_passed() const { return failures() == 0; }

std::size_t ReproductionBundle::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

ReproductionBundle reproduce_reference_results(const ReproduceOptions& options) {
  ReproductionBundle bundle;
  Reporter r(bundle);
  partitions(r, Family::kSunlet, min_supported_n(Family::kSunlet),
             options.formula_hi);
  partitions(r, Family::kPrism, min_supported_n(Family::kPrism),
             options.formula_hi);
  formula_check(r, Family::kSunlet, options.formula_hi);
  formula_check(r, Family::kPrism, options.formula_hi);
  pair_table(r, options.pair_table_n);
  coordinate_tables(r, options.coordinate_n);
  sweep(r, {"sunlet", options.sunlet_lo, options.sunlet_hi, false,
            [](std::size_t n) -> std::size_t { return n % 2 == 0 ? 2 : 3; }},
        options.threads);
  sweep(r, {"sunlet", options.sunlet_lo, options.sunlet_hi, true,
            [](std::size_t) -> std::size_t { return 3; }},
        options.threads);
  sweep(r, {"prism", options.prism_dim_lo, options.prism_dim_hi, false,
            [](std::size_t) -> std::size_t { return 3; }},
        options.threads);
  sweep(r, {"prism", options.prism_psi_lo, options.prism_psi_hi, true,
            [](std::size_t) -> std::size_t { return 3; }},
        options.threads);
  bundle.markdown = r.finish();
  return bundle;
}

PetersenKRule PetersenKRule::parse(const std::string& text) {
  PetersenKRule rule;
  if (text == "all") return rule;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(item, &used);
      if (used != item.size() || value == 0) throw std::invalid_argument(item);
      rule.ks.push_back(value);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad k rule '" + text + "' (expected all or k1,k2,...)");
    }
  }
  if (rule.ks.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty k rule");
  }
  return rule;
}

std::vector<std::size_t> PetersenKRule::values(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; 2 * k < n; ++k) {
    if (ks.empty() || std::find(ks.begin(), ks.end(), k) != ks.end()) {
      out.push_back(k);
    }
  }
  return out;
}

std::vector<ExperimentRow> experiment_gp(std::size_t n_lo, std::size_t n_hi,
                                         const PetersenKRule& rule,
                                         const SearchOptions& options) {
  std::vector<ExperimentRow> rows;
  for (std::size_t n = std::max<std::size_t>(n_lo, 3); n <= n_hi; ++n) {
    for (std::size_t k : rule.values(n)) {
      const auto started = std::chrono::steady_clock::now();
      const auto g = make_generalized_petersen(n, k);
      ExperimentRow row;
      row.n = n;
      row.k = k;
      row.order = g.graph.order();
      row.size = g.graph.size();
      try {
        const auto dim = edge_metric_dimension(g.graph, options);
        row.dim_edge = dim.cardinality;
        row.dim_set = label_names(g, dim.best_set);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) throw;
      }
      try {
        SearchOptions psi_options = options;
        if (row.dim_edge) psi_options.start_k = std::max<std::size_t>(2, *row.dim_edge);
        const auto psi = psi_edge(g.graph, psi_options);
        row.psi_edge = psi.cardinality;
        row.psi_set = label_names(g, psi.best_set);
        row.subsets_examined = psi.subsets_examined;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) throw;
        const auto greedy = greedy_doubly_resolving(g.graph.line_distances());
        row.psi_edge = greedy.size();
        row.psi_exact = false;
        row.psi_set = label_names(g, greedy);
      }
      row.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace edrs
