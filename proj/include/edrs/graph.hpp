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

// Simple undirected graphs, line graphs and unweighted all-pairs distances.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace edrs {

using VertexId = std::uint32_t;
using Distance = std::int32_t;
using VertexPair = std::pair<VertexId, VertexId>;

// An undirected edge stored as (min endpoint, max endpoint). Edges compare
// lexicographically, which is the canonical edge order of a Graph.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge canonical(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  bool touches(VertexId x) const { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const {
    return touches(o.u) || touches(o.v);
  }

  auto operator<=>(const Edge&) const = default;
};

// Dense symmetric matrix of shortest-path lengths.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t size() const { return n_; }

  Distance operator()(std::size_t i, std::size_t j) const {
    return d_[i * n_ + j];
  }

  std::span<const Distance> row(std::size_t i) const {
    return {d_.data() + i * n_, n_};
  }
  std::span<Distance> row(std::size_t i) { return {d_.data() + i * n_, n_}; }

  Distance diameter() const;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

enum class Connectivity { kAny, kRequired };

struct LineGraphMap;

// Immutable simple undirected graph. Copies share the lazily computed
// distance caches, which is safe because the graph never changes.
class Graph {
 public:
  Graph();

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool adjacent(VertexId a, VertexId b) const;

  // Canonical (sorted) edge sequence.
  std::span<const Edge> edges() const { return edges_; }
  std::optional<std::size_t> edge_index(Edge e) const;

  bool is_connected() const;

  // Vertex distances, computed once. Throws Disconnected.
  const DistanceMatrix& distances() const;
  // Line graph and its distance matrix (edge distances), computed once.
  const LineGraphMap& line_graph() const;
  const DistanceMatrix& line_distances() const;

 private:
  friend Graph build_graph(std::size_t order,
                           std::span<const VertexPair> edge_list,
                           Connectivity connectivity);
  struct Cache;

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::shared_ptr<Cache> cache_;
};

// Vertex i of `line_graph` is base_edges[i].
struct LineGraphMap {
  std::vector<Edge> base_edges;
  Graph line_graph;
};

// Validates and canonicalizes an edge list. Throws LoopEdge, DuplicateEdge,
// VertexOutOfRange, and Disconnected when connectivity is required.
Graph build_graph(std::size_t order, std::span<const VertexPair> edge_list,
                  Connectivity connectivity = Connectivity::kAny);

inline Graph build_graph(std::size_t order,
                         std::initializer_list<VertexPair> edge_list,
                         Connectivity connectivity = Connectivity::kAny) {
  return build_graph(order, std::span<const VertexPair>(edge_list.begin(),
                                                        edge_list.size()),
                     connectivity);
}

LineGraphMap line_graph(const Graph& g);

// Distances from one source; unreachable vertices get -1.
std::vector<Distance> bfs_distances(const Graph& g, VertexId source);

DistanceMatrix all_pairs_distances(const Graph& g);

// Distance between f and h in the line graph of g (memoized per graph).
Distance edge_distance(const Graph& g, Edge f, Edge h);

}  // namespace edrs
