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

// Labeled instances of the graph families studied here: cycles, paths,
// sunlets, prisms, generalized Petersen graphs and cartesian products.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "edrs/graph.hpp"

namespace edrs {

struct CycleFamily { std::size_t n; };
struct PathFamily { std::size_t n; };
struct SunletFamily { std::size_t n; };
struct PrismFamily { std::size_t n; };
struct PetersenFamily { std::size_t n, k; };
struct ProductFamily;
// A graph read from a file or built by hand.
struct CustomFamily { std::string source; };

using FamilyTag = std::variant<CycleFamily, PathFamily, SunletFamily,
                               PrismFamily, PetersenFamily, ProductFamily,
                               CustomFamily>;

struct ProductFamily {
  std::shared_ptr<const FamilyTag> left;
  std::shared_ptr<const FamilyTag> right;
};

// "sunlet:8", "gp:5:2", "product(cycle:3,path:2)", ...
std::string to_string(const FamilyTag& tag);

// Bidirectional map between label strings and edge indices of one graph.
// Either empty (unlabeled graph) or covering every edge exactly once.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  // Throws UnknownLabel / EdgeNotInGraph / InvalidLabel when the entries do
  // not form a bijection onto g.edges().
  EdgeLabeling(const Graph& g,
               const std::vector<std::pair<std::string, Edge>>& entries);

  bool empty() const { return by_index_.empty(); }
  std::size_t size() const { return by_index_.size(); }

  const std::string& label(std::size_t edge_index) const {
    return by_index_.at(edge_index);
  }
  std::optional<std::size_t> find(std::string_view label) const;
  // Throws UnknownLabel.
  std::size_t index_of(std::string_view label) const;

 private:
  std::vector<std::string> by_index_;
  std::map<std::string, std::size_t, std::less<>> by_label_;
};

struct LabeledFamilyGraph {
  Graph graph;
  FamilyTag tag;
  EdgeLabeling labels;

  Edge edge(std::string_view label) const {
    return graph.edges()[labels.index_of(label)];
  }
  // Label of edge i, or its decimal index for unlabeled graphs.
  std::string edge_name(std::size_t i) const;
};

// Cycle C_n: vertices 0..n-1, edge c_i joins i and i+1 (mod n).
LabeledFamilyGraph make_cycle(std::size_t n);
// Path P_n on n vertices, edge p_i joins i and i+1.
LabeledFamilyGraph make_path(std::size_t n);

/// n-sunlet: cycle vertices 0..n-1 with a pendant vertex n+i hanging off
/// cycle vertex i. Cycle edge e_i joins i-1 and i (mod n); pendant f_i is
/// attached to vertex i, the common endpoint of e_i and e_{i+1}. With this
/// orientation S_1(e_0) = {f_0, e_1, f_{n-1}, e_{n-1}}.
LabeledFamilyGraph make_sunlet(std::size_t n);

/// Prism C_n x P_2: inner vertices 0..n-1, outer n..2n-1. Inner edge e_i
/// joins i and i+1, outer edge g_i joins n+i and n+i+1, spoke f_i joins i
/// and n+i, i.e. the common endpoints of e_{i-1},e_i and g_{i-1},g_i.
LabeledFamilyGraph make_prism(std::size_t n);

/// GP(n,k): outer cycle u_i = (i, i+1), spokes s_i = (i, n+i), inner star
/// polygon v_i = (n+i, n+i+k). Requires n >= 3 and 1 <= k < n/2.
LabeledFamilyGraph make_generalized_petersen(std::size_t n, std::size_t k);

// Vertex (x, y) is numbered x * b.order() + y.
Graph cartesian_product(const Graph& a, const Graph& b);
LabeledFamilyGraph cartesian_product(const LabeledFamilyGraph& a,
                                     const LabeledFamilyGraph& b);

// Parses `sunlet:<n>`, `prism:<n>`, `cycle:<n>`, `path:<n>`, `gp:<n>:<k>`.
// `file:<path>` specifiers are handled by load_graph_spec in graph_io.
LabeledFamilyGraph make_family(std::string_view spec);

}  // namespace edrs
