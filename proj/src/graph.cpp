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

#include "edrs/graph.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>

#include "edrs/error.hpp"

namespace edrs {

struct Graph::Cache {
  std::once_flag distances_once;
  DistanceMatrix distances;
  std::once_flag line_once;
  std::unique_ptr<LineGraphMap> line;
  DistanceMatrix line_distances;
};

Distance DistanceMatrix::diameter() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

Graph::Graph() : cache_(std::make_shared<Cache>()) {}

bool Graph::adjacent(VertexId a, VertexId b) const {
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  e = Edge::canonical(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::is_connected() const {
  if (order() == 0) return true;
  const auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](Distance d) { return d < 0; });
}

const DistanceMatrix& Graph::distances() const {
  std::call_once(cache_->distances_once,
                 [&] { cache_->distances = all_pairs_distances(*this); });
  return cache_->distances;
}

const LineGraphMap& Graph::line_graph() const {
  std::call_once(cache_->line_once, [&] {
    auto map = std::make_unique<LineGraphMap>(edrs::line_graph(*this));
    cache_->line_distances = all_pairs_distances(map->line_graph);
    cache_->line = std::move(map);
  });
  return *cache_->line;
}

const DistanceMatrix& Graph::line_distances() const {
  line_graph();
  return cache_->line_distances;
}

Graph build_graph(std::size_t order, std::span<const VertexPair> edge_list,
                  Connectivity connectivity) {
  Graph g;
  g.adjacency_.resize(order);
  g.edges_.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (a >= order || b >= order) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") outside [0," + std::to_string(order) + ")");
    }
    if (a == b) {
      throw Error(ErrorCode::kLoopEdge,
                  "loop at vertex " + std::to_string(a));
    }
    g.edges_.push_back(Edge::canonical(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(ErrorCode::kDuplicateEdge,
                "edge (" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + ") listed twice");
  }
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  if (connectivity == Connectivity::kRequired && !g.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  return g;
}

LineGraphMap line_graph(const Graph& g) {
  if (g.size() == 0) {
    throw Error(ErrorCode::kEmptyEdgeSet, "line graph of an edgeless graph");
  }
  const auto edges = g.edges();
  // Edges incident to each vertex, in canonical order.
  std::vector<std::vector<VertexId>> incident(g.order());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back(static_cast<VertexId>(i));
    incident[edges[i].v].push_back(static_cast<VertexId>(i));
  }
  // In a simple graph two distinct edges share at most one endpoint, so
  // each adjacent pair is produced exactly once.
  std::vector<VertexPair> pairs;
  for (const auto& star : incident) {
    for (std::size_t a = 0; a < star.size(); ++a) {
      for (std::size_t b = a + 1; b < star.size(); ++b) {
        pairs.emplace_back(star[a], star[b]);
      }
    }
  }
  return LineGraphMap{std::vector<Edge>(edges.begin(), edges.end()),
                      build_graph(edges.size(), pairs)};
}

std::vector<Distance> bfs_distances(const Graph& g, VertexId source) {
  std::vector<Distance> dist(g.order(), -1);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm(g.order());
  for (VertexId s = 0; s < g.order(); ++s) {
    const auto dist = bfs_distances(g, s);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
      throw Error(ErrorCode::kDisconnected, "graph is not connected");
    }
    std::copy(dist.begin(), dist.end(), dm.row(s).begin());
  }
  return dm;
}

Distance edge_distance(const Graph& g, Edge f, Edge h) {
  const auto fi = g.edge_index(f);
  const auto hi = g.edge_index(h);
  if (!fi || !hi) {
    throw Error(ErrorCode::kEdgeNotInGraph,
                "edge distance queried for an edge outside the graph");
  }
  return g.line_distances()(*fi, *hi);
}

}  // namespace edrs
