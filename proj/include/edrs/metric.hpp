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

// Resolving and doubly resolving sets over a distance matrix, with exact
// minimum-cardinality search. Edge versions run the same code on the
// distance matrix of the line graph.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edrs/generators.hpp"
#include "edrs/graph.hpp"

namespace edrs {

enum class LandmarkMode { kVertex, kEdgeViaLineGraph };

// Ordered landmark elements: vertices of the working graph, which for the
// edge versions are vertices of L(G), i.e. canonical edge indices of G.
struct Landmarks {
  std::vector<std::size_t> elements;
  LandmarkMode mode = LandmarkMode::kVertex;

  std::size_t size() const { return elements.size(); }
  bool operator==(const Landmarks&) const = default;
};

using Representation = std::vector<Distance>;
using ElementPair = std::pair<std::size_t, std::size_t>;

struct ResolveReport {
  bool ok = true;
  // Lexicographically first offending pair (first < second); set iff !ok.
  std::optional<ElementPair> witness;
};

enum class Predicate { kResolving, kDoublyResolving };

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SearchOptions {
  // 0 selects the smallest meaningful size (1 resolving, 2 doubly).
  std::size_t start_k = 0;
  // Cap on subsets examined, counted in sequential lexicographic order.
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  bool all_optima = false;
  // psi only: start at max(2, dim) after a metric-dimension search.
  bool dim_first = false;
};

struct SearchResult {
  std::size_t cardinality = 0;
  Landmarks best_set;
  std::optional<std::vector<Landmarks>> all_optima;
  // Subsets a sequential lexicographic search examines up to the optimum
  // (through the whole optimal level with all_optima). Independent of the
  // thread count.
  std::uint64_t subsets_examined = 0;
  std::chrono::nanoseconds elapsed{0};
};

// coords[j] = dm(element, landmark_j). Throws IndexOutOfRange.
Representation representation(const DistanceMatrix& dm, std::size_t element,
                              const Landmarks& lm);

// Throws EmptyLandmarks, IndexOutOfRange, DuplicateLandmark.
ResolveReport is_resolving(const DistanceMatrix& dm,
                           std::span<const std::size_t> landmarks);
inline ResolveReport is_resolving(const DistanceMatrix& dm,
                                  const Landmarks& lm) {
  return is_resolving(dm, lm.elements);
}

// Whether landmarks x, y doubly resolve elements u, v.
bool doubly_resolves(const DistanceMatrix& dm, std::size_t x, std::size_t y,
                     std::size_t u, std::size_t v);

// Whether some landmark pair doubly resolves u, v; checked pairwise.
bool pair_doubly_resolved(const DistanceMatrix& dm,
                          std::span<const std::size_t> landmarks,
                          std::size_t u, std::size_t v);

/// A set D doubly resolves every pair {u,v} iff the difference vector
/// (dm(u,x) - dm(v,x)) over x in D is non-constant: two landmarks x, y with
/// dm(u,x) - dm(u,y) != dm(v,x) - dm(v,y) exist exactly when the
/// differences at x and y disagree. The check therefore groups elements by
/// (dm(u,x) - dm(u,x_0)) over x in D and reports the first collision.
/// Throws LandmarksTooSmall, IndexOutOfRange, DuplicateLandmark.
ResolveReport is_doubly_resolving(const DistanceMatrix& dm,
                                  std::span<const std::size_t> landmarks);
inline ResolveReport is_doubly_resolving(const DistanceMatrix& dm,
                                         const Landmarks& lm) {
  return is_doubly_resolving(dm, lm.elements);
}

ResolveReport check(const DistanceMatrix& dm, Predicate predicate,
                    std::span<const std::size_t> landmarks);

// Iterates k = start_k, start_k + 1, ... over k-subsets in lexicographic
// order and stops at the first size with a passing set. Throws
// BudgetExceeded, InvalidArgument.
SearchResult min_cardinality_search(const DistanceMatrix& dm,
                                    Predicate predicate,
                                    const SearchOptions& options = {});

SearchResult metric_dimension(const Graph& g, const SearchOptions& options = {});
SearchResult edge_metric_dimension(const Graph& g,
                                   const SearchOptions& options = {});
SearchResult psi(const Graph& g, const SearchOptions& options = {});
SearchResult psi_edge(const Graph& g, const SearchOptions& options = {});

// Set-cover style greedy upper bound for psi, pruned to a minimal set.
Landmarks greedy_doubly_resolving(const DistanceMatrix& dm);

// Runs is_doubly_resolving on the line graph for a labeled edge set.
// Throws UnknownLabel.
ResolveReport labeled_doubly_resolving_check(
    const LabeledFamilyGraph& family, std::span<const std::string> labels);

// Whether the labeled pair {a, b} is doubly resolved by no two edges of
// `candidate`, i.e. is a valid witness that the candidate fails.
bool is_labeled_witness(const LabeledFamilyGraph& family,
                        std::span<const std::string> candidate,
                        std::string_view a, std::string_view b);

}  // namespace edrs
