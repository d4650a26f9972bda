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

#include "edrs/generators.hpp"

#include <charconv>
#include <string>

#include "edrs/error.hpp"

namespace edrs {
namespace {

using LabelEntries = std::vector<std::pair<std::string, Edge>>;

std::string indexed(char prefix, std::size_t i) {
  return std::string(1, prefix) + std::to_string(i);
}

LabeledFamilyGraph assemble(std::size_t order, const LabelEntries& entries,
                            FamilyTag tag) {
  std::vector<VertexPair> pairs;
  pairs.reserve(entries.size());
  for (const auto& [label, e] : entries) pairs.emplace_back(e.u, e.v);
  Graph g = build_graph(order, pairs, Connectivity::kRequired);
  EdgeLabeling labels(g, entries);
  return {std::move(g), std::move(tag), std::move(labels)};
}

void require_at_least(std::string_view family, std::size_t n,
                      std::size_t min) {
  if (n < min) {
    throw Error(ErrorCode::kParameterTooSmall,
                std::string(family) + " needs n >= " + std::to_string(min) +
                    ", got " + std::to_string(n));
  }
}

std::size_t parse_count(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kInvalidFormat,
                "bad number '" + std::string(text) + "' in graph spec '" +
                    std::string(spec) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string to_string(const FamilyTag& tag) {
  struct Visitor {
    std::string operator()(const CycleFamily& f) const {
      return "cycle:" + std::to_string(f.n);
    }
    std::string operator()(const PathFamily& f) const {
      return "path:" + std::to_string(f.n);
    }
    std::string operator()(const SunletFamily& f) const {
      return "sunlet:" + std::to_string(f.n);
    }
    std::string operator()(const PrismFamily& f) const {
      return "prism:" + std::to_string(f.n);
    }
    std::string operator()(const PetersenFamily& f) const {
      return "gp:" + std::to_string(f.n) + ":" + std::to_string(f.k);
    }
    std::string operator()(const ProductFamily& f) const {
      return "product(" + to_string(*f.left) + "," + to_string(*f.right) +
             ")";
    }
    std::string operator()(const CustomFamily& f) const { return f.source; }
  };
  return std::visit(Visitor{}, tag);
}

EdgeLabeling::EdgeLabeling(const Graph& g, const LabelEntries& entries) {
  if (entries.empty()) return;
  if (entries.size() != g.size()) {
    throw Error(ErrorCode::kInvalidLabel,
                "labels must cover every edge exactly once (" +
                    std::to_string(entries.size()) + " labels, " +
                    std::to_string(g.size()) + " edges)");
  }
  by_index_.resize(g.size());
  for (const auto& [label, e] : entries) {
    if (label.empty()) {
      throw Error(ErrorCode::kInvalidLabel, "empty edge label");
    }
    const auto index = g.edge_index(e);
    if (!index) {
      throw Error(ErrorCode::kEdgeNotInGraph,
                  "label '" + label + "' names a non-edge");
    }
    if (!by_index_[*index].empty()) {
      throw Error(ErrorCode::kInvalidLabel,
                  "edge labeled twice: '" + by_index_[*index] + "' and '" +
                      label + "'");
    }
    if (!by_label_.emplace(label, *index).second) {
      throw Error(ErrorCode::kInvalidLabel,
                  "label '" + label + "' used twice");
    }
    by_index_[*index] = label;
  }
}

std::optional<std::size_t> EdgeLabeling::find(std::string_view label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::size_t EdgeLabeling::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::kUnknownLabel,
              "no edge labeled '" + std::string(label) + "'");
}

std::string LabeledFamilyGraph::edge_name(std::size_t i) const {
  return labels.empty() ? std::to_string(i) : labels.label(i);
}

LabeledFamilyGraph make_cycle(std::size_t n) {
  require_at_least("cycle", n, 3);
  LabelEntries entries;
  for (std::size_t i = 0; i < n; ++i) {
    entries.emplace_back(indexed('c', i),
                         Edge::canonical(VertexId(i), VertexId((i + 1) % n)));
  }
  return assemble(n, entries, CycleFamily{n});
}

LabeledFamilyGraph make_path(std::size_t n) {
  require_at_least("path", n, 2);
  LabelEntries entries;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    entries.emplace_back(indexed('p', i), Edge{VertexId(i), VertexId(i + 1)});
  }
  return assemble(n, entries, PathFamily{n});
}

LabeledFamilyGraph make_sunlet(std::size_t n) {
  require_at_least("sunlet", n, 3);
  LabelEntries entries;
  for (std::size_t i = 0; i < n; ++i) {
    entries.emplace_back(indexed('e', i),
                         Edge::canonical(VertexId((i + n - 1) % n),
                                         VertexId(i)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    entries.emplace_back(indexed('f', i), Edge{VertexId(i), VertexId(n + i)});
  }
  return assemble(2 * n, entries, SunletFamily{n});
}

LabeledFamilyGraph make_prism(std::size_t n) {
  require_at_least("prism", n, 3);
  LabelEntries entries;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    entries.emplace_back(indexed('e', i),
                         Edge::canonical(VertexId(i), VertexId(next)));
    entries.emplace_back(indexed('f', i), Edge{VertexId(i), VertexId(n + i)});
    entries.emplace_back(indexed('g', i), Edge::canonical(VertexId(n + i),
                                                          VertexId(n + next)));
  }
  return assemble(2 * n, entries, PrismFamily{n});
}

LabeledFamilyGraph make_generalized_petersen(std::size_t n, std::size_t k) {
  if (n < 3 || k < 1 || 2 * k >= n) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "GP(n,k) needs n >= 3 and 1 <= k < n/2, got GP(" +
                    std::to_string(n) + "," + std::to_string(k) + ")");
  }
  LabelEntries entries;
  for (std::size_t i = 0; i < n; ++i) {
    entries.emplace_back(indexed('u', i),
                         Edge::canonical(VertexId(i), VertexId((i + 1) % n)));
    entries.emplace_back(indexed('s', i), Edge{VertexId(i), VertexId(n + i)});
    entries.emplace_back(indexed('v', i),
                         Edge::canonical(VertexId(n + i),
                                         VertexId(n + (i + k) % n)));
  }
  return assemble(2 * n, entries, PetersenFamily{n, k});
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const std::size_t nb = b.order();
  auto id = [nb](std::size_t x, std::size_t y) {
    return static_cast<VertexId>(x * nb + y);
  };
  std::vector<VertexPair> pairs;
  for (std::size_t x = 0; x < a.order(); ++x) {
    for (const Edge& e : b.edges()) pairs.emplace_back(id(x, e.u), id(x, e.v));
  }
  for (const Edge& e : a.edges()) {
    for (std::size_t y = 0; y < nb; ++y) {
      pairs.emplace_back(id(e.u, y), id(e.v, y));
    }
  }
  return build_graph(a.order() * nb, pairs);
}

LabeledFamilyGraph cartesian_product(const LabeledFamilyGraph& a,
                                     const LabeledFamilyGraph& b) {
  ProductFamily tag{std::make_shared<const FamilyTag>(a.tag),
                    std::make_shared<const FamilyTag>(b.tag)};
  return {cartesian_product(a.graph, b.graph), tag, {}};
}

LabeledFamilyGraph make_family(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view kind = parts.front();
  if (kind == "gp") {
    if (parts.size() != 3) {
      throw Error(ErrorCode::kInvalidFormat,
                  "expected gp:<n>:<k>, got '" + std::string(spec) + "'");
    }
    return make_generalized_petersen(parse_count(parts[1], spec),
                                     parse_count(parts[2], spec));
  }
  if (parts.size() != 2) {
    throw Error(ErrorCode::kInvalidFormat,
                "unrecognized graph spec '" + std::string(spec) + "'");
  }
  const std::size_t n = parse_count(parts[1], spec);
  if (kind == "cycle") return make_cycle(n);
  if (kind == "path") return make_path(n);
  if (kind == "sunlet") return make_sunlet(n);
  if (kind == "prism") return make_prism(n);
  throw Error(ErrorCode::kInvalidFormat,
              "unknown family '" + std::string(kind) + "'");
}

}  // namespace edrs
