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

#include "edrs/cli.hpp"

#include <fmt/format.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <vector>

#include "CLI11.hpp"
#include "edrs/closed_form.hpp"
#include "edrs/error.hpp"
#include "edrs/graph_io.hpp"
#include "edrs/metric.hpp"
#include "edrs/reproduce.hpp"
#include "json.hpp"

namespace edrs::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Args {
  std::string graph;
  std::string mode = "edge";
  bool json = false;
  bool all_optima = false;
  unsigned threads = 1;
  std::uint64_t budget = kDefaultBudget;
  std::string out;
  bool no_timing = false;
  bool dim_first = false;
  std::string dot;
  std::string line_dot;
  std::string family;
  std::string n_range;
  std::string k_rule = "all";
};

// Thrown for bad argument values detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double ms(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

bool edge_mode(const Args& a) { return a.mode == "edge"; }

LabeledFamilyGraph load(const Args& a) {
  try {
    return load_graph_spec(a.graph);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDisconnected) throw;
    throw UsageError(e.what());
  }
}

ordered_json graph_summary(const Args& a, const LabeledFamilyGraph& g) {
  ordered_json s;
  s["spec"] = a.graph;
  s["order"] = g.graph.order();
  s["size"] = g.graph.size();
  return s;
}

// Element names for output: edge labels in edge mode when available,
// otherwise raw indices.
ordered_json element_json(const Args& a, const LabeledFamilyGraph& g,
                          std::size_t x) {
  if (edge_mode(a) && !g.labels.empty()) return g.labels.label(x);
  return x;
}

std::string element_text(const Args& a, const LabeledFamilyGraph& g,
                         std::size_t x) {
  if (edge_mode(a)) return g.edge_name(x);
  return std::to_string(x);
}

ordered_json set_json(const Args& a, const LabeledFamilyGraph& g,
                      const Landmarks& lm) {
  ordered_json set = ordered_json::array();
  for (std::size_t x : lm.elements) set.push_back(element_json(a, g, x));
  return set;
}

std::string set_text(const Args& a, const LabeledFamilyGraph& g,
                     const Landmarks& lm) {
  std::string out = "{";
  for (std::size_t i = 0; i < lm.elements.size(); ++i) {
    if (i) out += ", ";
    out += element_text(a, g, lm.elements[i]);
  }
  return out + "}";
}

void emit(std::ostream& out, const ordered_json& doc) {
  out << doc.dump(2) << '\n';
}

int cmd_generate(const Args& a, std::ostream& out) {
  const auto g = load(a);
  if (!a.dot.empty()) {
    std::ofstream(a.dot) << to_dot(g);
  }
  if (!a.line_dot.empty()) {
    std::ofstream(a.line_dot) << line_graph_to_dot(g);
  }
  if (a.out.empty()) {
    out << graph_to_json(g) << '\n';
    return kExitOk;
  }
  write_graph_file(g, a.out);
  if (a.json) {
    ordered_json doc;
    doc["command"] = "generate";
    doc["graph"] = graph_summary(a, g);
    doc["out"] = a.out;
    emit(out, doc);
  } else {
    out << fmt::format("wrote {} ({} vertices, {} edges)\n", a.out,
                       g.graph.order(), g.graph.size());
  }
  return kExitOk;
}

int cmd_distances(const Args& a, std::ostream& out) {
  const auto g = load(a);
  const DistanceMatrix& dm =
      edge_mode(a) ? g.graph.line_distances() : g.graph.distances();
  if (a.json) {
    ordered_json doc;
    doc["command"] = "distances";
    doc["graph"] = graph_summary(a, g);
    doc["mode"] = a.mode;
    ordered_json names = ordered_json::array();
    ordered_json matrix = ordered_json::array();
    for (std::size_t i = 0; i < dm.size(); ++i) {
      names.push_back(element_json(a, g, i));
      const auto row = dm.row(i);
      matrix.push_back(std::vector<Distance>(row.begin(), row.end()));
    }
    doc["elements"] = std::move(names);
    doc["matrix"] = std::move(matrix);
    emit(out, doc);
    return kExitOk;
  }
  std::size_t width = 3;
  for (std::size_t i = 0; i < dm.size(); ++i) {
    width = std::max(width, element_text(a, g, i).size() + 1);
  }
  out << fmt::format("{:>{}}", "", width);
  for (std::size_t j = 0; j < dm.size(); ++j) {
    out << fmt::format("{:>{}}", element_text(a, g, j), width);
  }
  out << '\n';
  for (std::size_t i = 0; i < dm.size(); ++i) {
    out << fmt::format("{:>{}}", element_text(a, g, i), width);
    for (std::size_t j = 0; j < dm.size(); ++j) {
      out << fmt::format("{:>{}}", dm(i, j), width);
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_search(const Args& a, bool doubly, std::ostream& out) {
  const auto g = load(a);
  SearchOptions options;
  options.threads = a.threads;
  options.budget = a.budget;
  options.all_optima = a.all_optima;
  options.dim_first = a.dim_first;
  SearchResult result;
  if (edge_mode(a)) {
    result = doubly ? psi_edge(g.graph, options)
                    : edge_metric_dimension(g.graph, options);
  } else {
    result = doubly ? psi(g.graph, options) : metric_dimension(g.graph, options);
  }
  const std::string name = doubly ? "psi" : "dim";
  if (a.json) {
    ordered_json res;
    res["cardinality"] = result.cardinality;
    res["set"] = set_json(a, g, result.best_set);
    res["subsets_examined"] = result.subsets_examined;
    if (!a.no_timing) res["elapsed_ms"] = ms(result.elapsed);
    if (result.all_optima) {
      ordered_json all = ordered_json::array();
      for (const auto& lm : *result.all_optima) all.push_back(set_json(a, g, lm));
      res["all_optima"] = std::move(all);
    }
    ordered_json doc;
    doc["command"] = name;
    doc["graph"] = graph_summary(a, g);
    doc["mode"] = a.mode;
    doc["result"] = std::move(res);
    emit(out, doc);
    return kExitOk;
  }
  out << fmt::format("{}{}({}) = {}\n", name, edge_mode(a) ? "_E" : "",
                     a.graph, result.cardinality);
  out << "  set:              " << set_text(a, g, result.best_set) << '\n';
  out << "  subsets examined: " << result.subsets_examined << '\n';
  if (result.all_optima) {
    out << "  optimal sets:     " << result.all_optima->size() << '\n';
    for (const auto& lm : *result.all_optima) {
      out << "    " << set_text(a, g, lm) << '\n';
    }
  }
  if (!a.no_timing) out << fmt::format("  elapsed:          {:.3f} ms\n", ms(result.elapsed));
  return kExitOk;
}

std::pair<std::size_t, std::size_t> range_arg(const std::string& text) {
  try {
    return parse_range(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int cmd_verify(const Args& a, std::ostream& out) {
  Family family;
  try {
    family = parse_family(a.family);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto [lo, hi] = range_arg(a.n_range);
  if (lo <= hi && lo < min_supported_n(family)) {
    throw UsageError(fmt::format("{} closed forms need n >= {}",
                                 to_string(family), min_supported_n(family)));
  }
  const auto results = lo <= hi ? verify_family(family, lo, hi)
                                : std::vector<FamilyVerification>{};
  std::size_t deviations = 0;
  for (const auto& r : results) deviations += r.deviations.size();
  if (a.json) {
    ordered_json list = ordered_json::array();
    for (const auto& r : results) {
      ordered_json item;
      item["family"] = std::string(to_string(r.family));
      item["n"] = r.n;
      item["pairs_checked"] = r.pairs_checked;
      ordered_json devs = ordered_json::array();
      for (const auto& d : r.deviations) {
        devs.push_back({{"a", d.a.to_string()},
                        {"b", d.b.to_string()},
                        {"formula", d.formula_value},
                        {"bfs", d.bfs_value}});
      }
      item["deviations"] = std::move(devs);
      list.push_back(std::move(item));
    }
    ordered_json doc;
    doc["command"] = "verify";
    doc["results"] = std::move(list);
    emit(out, doc);
  } else {
    out << fmt::format("{:>4} {:>8} {:>11}\n", "n", "pairs", "deviations");
    for (const auto& r : results) {
      out << fmt::format("{:>4} {:>8} {:>11}\n", r.n, r.pairs_checked,
                         r.deviations.size());
      for (const auto& d : r.deviations) {
        out << fmt::format("     d_E({}, {}): formula {} bfs {}\n",
                           d.a.to_string(), d.b.to_string(), d.formula_value,
                           d.bfs_value);
      }
    }
  }
  return deviations == 0 ? kExitOk : kExitDeviations;
}

int cmd_reproduce(const Args& a, std::ostream& out) {
  ReproduceOptions options;
  options.threads = a.threads;
  const auto bundle = reproduce_reference_results(options);
  if (!a.out.empty()) {
    std::ofstream file(a.out);
    if (!file) throw UsageError("cannot write " + a.out);
    file << bundle.markdown;
  }
  if (a.json) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : bundle.checks) {
      checks.push_back({{"section", c.section},
                        {"name", c.name},
                        {"passed", c.passed},
                        {"detail", c.detail}});
    }
    ordered_json doc;
    doc["command"] = "reproduce";
    doc["checks"] = std::move(checks);
    doc["failed"] = bundle.failures();
    emit(out, doc);
  } else {
    std::string section;
    for (const auto& c : bundle.checks) {
      if (c.section != section) {
        section = c.section;
        out << section << '\n';
      }
      out << fmt::format("  [{}] {}{}\n", c.passed ? "PASS" : "FAIL", c.name,
                         c.passed || c.detail.empty() ? "" : " (" + c.detail + ")");
    }
    out << fmt::format("{} checks, {} failed\n", bundle.checks.size(),
                       bundle.failures());
  }
  return bundle.all_passed() ? kExitOk : kExitDeviations;
}

int cmd_experiment(const Args& a, std::ostream& out) {
  const auto [lo, hi] = range_arg(a.n_range);
  PetersenKRule rule;
  try {
    rule = PetersenKRule::parse(a.k_rule);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  SearchOptions options;
  options.threads = a.threads;
  options.budget = a.budget;
  const auto rows = experiment_gp(lo, hi, rule, options);
  if (a.json) {
    ordered_json list = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json item;
      item["n"] = r.n;
      item["k"] = r.k;
      item["order"] = r.order;
      item["size"] = r.size;
      item["dim_e"] = r.dim_edge ? ordered_json(*r.dim_edge) : ordered_json();
      item["dim_set"] = r.dim_set;
      item["psi_e"] = r.psi_edge;
      item["psi_exact"] = r.psi_exact;
      item["psi_set"] = r.psi_set;
      item["subsets_examined"] = r.subsets_examined;
      if (!a.no_timing) item["elapsed_ms"] = r.elapsed_ms;
      list.push_back(std::move(item));
    }
    ordered_json doc;
    doc["command"] = "experiment";
    doc["rows"] = std::move(list);
    emit(out, doc);
    return kExitOk;
  }
  out << fmt::format("{:>4} {:>3} {:>6} {:>5} {:>6} {:>8}  {}\n", "n", "k",
                     "|V|", "|E|", "dim_E", "psi_E", "psi_E set");
  for (const auto& r : rows) {
    std::string set;
    for (const auto& s : r.psi_set) set += (set.empty() ? "" : ", ") + s;
    out << fmt::format("{:>4} {:>3} {:>6} {:>5} {:>6} {:>8}  {{{}}}\n", r.n,
                       r.k, r.order, r.size,
                       r.dim_edge ? std::to_string(*r.dim_edge) : "?",
                       r.psi_exact ? std::to_string(r.psi_edge)
                                   : "<=" + std::to_string(r.psi_edge),
                       set);
  }
  if (std::any_of(rows.begin(), rows.end(),
                  [](const auto& r) { return !r.psi_exact; })) {
    out << "<= marks a greedy upper bound (exact search exceeded the budget)\n";
  }
  return kExitOk;
}

void add_graph_options(CLI::App* cmd, Args& a, bool search) {
  cmd->add_option("--graph", a.graph,
                  "sunlet:<n>, prism:<n>, cycle:<n>, path:<n>, gp:<n>:<k> or "
                  "file:<path>")
      ->required();
  cmd->add_option("--mode", a.mode, "vertex or edge (line graph)")
      ->check(CLI::IsMember({"vertex", "edge"}))
      ->capture_default_str();
  cmd->add_flag("--json", a.json, "machine-readable output");
  if (search) {
    cmd->add_flag("--all-optima", a.all_optima, "list every optimal set");
    cmd->add_option("--threads", a.threads, "worker threads")->capture_default_str();
    cmd->add_option("--budget", a.budget, "maximum subsets examined")
        ->capture_default_str();
    cmd->add_flag("--no-timing", a.no_timing, "omit elapsed times");
  }
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(s, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || s.front() == '-') {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad range '" + text + "' (expected a..b)");
    }
    return static_cast<std::size_t>(value);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t v = number(text);
    return {v, v};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Resolving and doubly resolving sets, vertex and edge versions",
               "edge-drs"};
  app.require_subcommand(1);
  Args a;

  auto* generate = app.add_subcommand("generate", "write a graph as JSON / DOT");
  add_graph_options(generate, a, false);
  generate->add_option("--out", a.out, "graph JSON path (stdout if omitted)");
  generate->add_option("--dot", a.dot, "DOT export of the graph");
  generate->add_option("--line-dot", a.line_dot, "DOT export of the line graph");

  auto* distances = app.add_subcommand("distances", "print the distance matrix");
  add_graph_options(distances, a, false);

  auto* dim = app.add_subcommand("dim", "metric dimension (exact search)");
  add_graph_options(dim, a, true);
  auto* psi_cmd = app.add_subcommand("psi", "minimum doubly resolving set");
  add_graph_options(psi_cmd, a, true);
  psi_cmd->add_flag("--dim-first", a.dim_first,
                    "start the search at max(2, dim)");

  auto* verify = app.add_subcommand(
      "verify", "check closed-form edge distances against BFS");
  verify->add_option("--family", a.family, "sunlet or prism")->required();
  verify->add_option("--n", a.n_range, "inclusive range a..b")->required();
  verify->add_flag("--json", a.json, "machine-readable output");

  auto* reproduce = app.add_subcommand(
      "reproduce", "run every reference check and write a Markdown report");
  reproduce->add_option("--out", a.out, "Markdown report path");
  reproduce->add_flag("--json", a.json, "machine-readable output");
  reproduce->add_option("--threads", a.threads, "worker threads");

  auto* experiment = app.add_subcommand(
      "experiment", "dim_E and psi_E of generalized Petersen graphs");
  experiment->add_option("--n", a.n_range, "inclusive range a..b")->required();
  experiment->add_option("--k", a.k_rule, "all or a list k1,k2,...")
      ->capture_default_str();
  experiment->add_flag("--json", a.json, "machine-readable output");
  experiment->add_option("--threads", a.threads, "worker threads");
  experiment->add_option("--budget", a.budget, "maximum subsets per search");
  experiment->add_flag("--no-timing", a.no_timing, "omit elapsed times");

  std::vector<const char*> argv{"edge-drs"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(a, out);
    if (distances->parsed()) return cmd_distances(a, out);
    if (dim->parsed()) return cmd_search(a, false, out);
    if (psi_cmd->parsed()) return cmd_search(a, true, out);
    if (verify->parsed()) return cmd_verify(a, out);
    if (reproduce->parsed()) return cmd_reproduce(a, out);
    if (experiment->parsed()) return cmd_experiment(a, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace edrs::cli
