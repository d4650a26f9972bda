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

#include "edrs/metric.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "edrs/error.hpp"

namespace edrs {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(result);
}

void validate(const DistanceMatrix& dm, std::span<const std::size_t> lm) {
  std::vector<bool> seen(dm.size(), false);
  for (std::size_t x : lm) {
    if (x >= dm.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "landmark " + std::to_string(x) + " outside [0," +
                      std::to_string(dm.size()) + ")");
    }
    if (seen[x]) {
      throw Error(ErrorCode::kDuplicateLandmark,
                  "landmark " + std::to_string(x) + " repeated");
    }
    seen[x] = true;
  }
}

// Groups elements by a per-element key vector and finds the first
// collision. Reused across calls to avoid reallocating in the search loop.
class CollisionFinder {
 public:
  CollisionFinder(const DistanceMatrix& dm, Predicate predicate)
      : dm_(dm), predicate_(predicate), order_(dm.size()) {}

  std::optional<ElementPair> find(std::span<const std::size_t> lm,
                                  bool want_first) {
    const std::size_t n = dm_.size();
    const std::size_t width =
        predicate_ == Predicate::kResolving ? lm.size() : lm.size() - 1;
    keys_.resize(n * width);
    for (std::size_t u = 0; u < n; ++u) {
      const auto row = dm_.row(u);
      Distance* key = keys_.data() + u * width;
      if (predicate_ == Predicate::kResolving) {
        for (std::size_t j = 0; j < width; ++j) key[j] = row[lm[j]];
      } else {
        const Distance anchor = row[lm[0]];
        for (std::size_t j = 0; j < width; ++j) key[j] = row[lm[j + 1]] - anchor;
      }
    }
    auto key_of = [&](std::uint32_t u) { return keys_.data() + u * width; };
    std::iota(order_.begin(), order_.end(), 0u);
    std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
      const Distance* ka = key_of(a);
      const Distance* kb = key_of(b);
      for (std::size_t j = 0; j < width; ++j) {
        if (ka[j] != kb[j]) return ka[j] < kb[j];
      }
      return a < b;
    });
    std::optional<ElementPair> best;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!std::equal(key_of(order_[i]), key_of(order_[i]) + width,
                      key_of(order_[i + 1]))) {
        continue;
      }
      // order_[i] starts (or continues) a run; within a run indices are
      // ascending, so the run's first two entries are its smallest pair.
      if (i > 0 && std::equal(key_of(order_[i - 1]),
                              key_of(order_[i - 1]) + width,
                              key_of(order_[i]))) {
        continue;
      }
      ElementPair pair{order_[i], order_[i + 1]};
      if (!want_first) return pair;
      if (!best || pair < *best) best = pair;
    }
    return best;
  }

 private:
  const DistanceMatrix& dm_;
  Predicate predicate_;
  std::vector<Distance> keys_;
  std::vector<std::uint32_t> order_;
};

// Advances positions [from, k) of a lexicographic k-subset of [0, n).
bool next_combination(std::vector<std::size_t>& c, std::size_t n,
                      std::size_t from) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > from) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct ChunkOutcome {
  bool done = false;
  bool truncated = false;
  std::optional<std::uint64_t> first_rank;  // 0-based within the chunk
  std::vector<std::size_t> first_set;
  std::vector<std::vector<std::size_t>> hits;
};

// All k-subsets whose smallest element is `first`.
ChunkOutcome run_chunk(const DistanceMatrix& dm, CollisionFinder& finder, std::size_t k,
                       std::size_t first, std::uint64_t allowance,
                       bool all_optima) {
  ChunkOutcome out;
  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), first);
  std::uint64_t examined = 0;
  do {
    if (examined >= allowance) {
      out.truncated = true;
      break;
    }
    const bool pass = !finder.find(subset, false).has_value();
    if (pass) {
      if (!out.first_rank) {
        out.first_rank = examined;
        out.first_set = subset;
      }
      if (!all_optima) break;
      out.hits.push_back(subset);
    }
    ++examined;
  } while (next_combination(subset, dm.size(), 1));
  out.done = true;
  return out;
}

}  // namespace

Representation representation(const DistanceMatrix& dm, std::size_t element,
                              const Landmarks& lm) {
  if (element >= dm.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "element " + std::to_string(element) + " out of range");
  }
  validate(dm, lm.elements);
  Representation coords;
  coords.reserve(lm.size());
  for (std::size_t x : lm.elements) coords.push_back(dm(element, x));
  return coords;
}

ResolveReport is_resolving(const DistanceMatrix& dm,
                           std::span<const std::size_t> landmarks) {
  if (landmarks.empty()) {
    throw Error(ErrorCode::kEmptyLandmarks, "resolving check needs landmarks");
  }
  return check(dm, Predicate::kResolving, landmarks);
}

bool doubly_resolves(const DistanceMatrix& dm, std::size_t x, std::size_t y,
                     std::size_t u, std::size_t v) {
  const std::size_t n = dm.size();
  if (x >= n || y >= n || u >= n || v >= n) {
    throw Error(ErrorCode::kIndexOutOfRange, "index outside distance matrix");
  }
  if (x == y) {
    throw Error(ErrorCode::kInvalidArgument,
                "doubly resolving needs two distinct landmarks");
  }
  return dm(u, x) - dm(u, y) != dm(v, x) - dm(v, y);
}

bool pair_doubly_resolved(const DistanceMatrix& dm,
                          std::span<const std::size_t> landmarks,
                          std::size_t u, std::size_t v) {
  for (std::size_t a = 0; a < landmarks.size(); ++a) {
    for (std::size_t b = a + 1; b < landmarks.size(); ++b) {
      if (doubly_resolves(dm, landmarks[a], landmarks[b], u, v)) return true;
    }
  }
  return false;
}

ResolveReport is_doubly_resolving(const DistanceMatrix& dm,
                                  std::span<const std::size_t> landmarks) {
  if (landmarks.size() < 2) {
    throw Error(ErrorCode::kLandmarksTooSmall,
                "doubly resolving check needs at least two landmarks");
  }
  return check(dm, Predicate::kDoublyResolving, landmarks);
}

ResolveReport check(const DistanceMatrix& dm, Predicate predicate,
                    std::span<const std::size_t> landmarks) {
  const std::size_t min_size = predicate == Predicate::kResolving ? 1 : 2;
  if (landmarks.size() < min_size) {
    throw Error(predicate == Predicate::kResolving
                    ? ErrorCode::kEmptyLandmarks
                    : ErrorCode::kLandmarksTooSmall,
                "too few landmarks");
  }
  validate(dm, landmarks);
  CollisionFinder finder(dm, predicate);
  ResolveReport report;
  report.witness = finder.find(landmarks, true);
  report.ok = !report.witness.has_value();
  return report;
}

SearchResult min_cardinality_search(const DistanceMatrix& dm,
                                    Predicate predicate,
                                    const SearchOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = dm.size();
  const std::size_t min_k = predicate == Predicate::kResolving ? 1 : 2;
  const std::size_t start_k = options.start_k == 0 ? min_k : options.start_k;
  if (start_k < min_k) {
    throw Error(ErrorCode::kInvalidArgument,
                "search must start at k >= " + std::to_string(min_k));
  }
  if (start_k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "no " + std::to_string(start_k) + "-subsets among " +
                    std::to_string(n) + " elements");
  }
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::uint64_t prior = 0;
  for (std::size_t k = start_k; k <= n; ++k) {
    const std::size_t chunks = n - k + 1;
    // offsets[a]: sequential rank of the first subset starting with a.
    std::vector<std::uint64_t> offsets(chunks + 1, 0);
    for (std::size_t a = 0; a < chunks; ++a) {
      offsets[a + 1] = saturating_add(offsets[a], binomial(n - 1 - a, k - 1));
    }
    std::vector<ChunkOutcome> outcomes(chunks);
    std::atomic<std::size_t> next_chunk{0};
    std::atomic<std::size_t> best_chunk{chunks};

    auto worker = [&] {
      CollisionFinder finder(dm, predicate);
      while (true) {
        const std::size_t a = next_chunk.fetch_add(1);
        if (a >= chunks) return;
        if (!options.all_optima && a > best_chunk.load()) continue;
        const std::uint64_t start = saturating_add(prior, offsets[a]);
        const std::uint64_t allowance =
            start >= options.budget ? 0 : options.budget - start;
        outcomes[a] = run_chunk(dm, finder, k, a, allowance,
                                options.all_optima);
        if (outcomes[a].first_rank) {
          std::size_t current = best_chunk.load();
          while (a < current && !best_chunk.compare_exchange_weak(current, a)) {
          }
        }
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    const std::size_t hit = best_chunk.load();
    bool truncated = false;
    for (std::size_t a = 0; a < chunks; ++a) {
      if (!options.all_optima && a > hit) break;
      truncated = truncated || outcomes[a].truncated;
    }
    if (hit == chunks || (options.all_optima && truncated)) {
      if (truncated) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "more than " + std::to_string(options.budget) +
                        " subsets needed (k = " + std::to_string(k) + ")");
      }
      prior = saturating_add(prior, offsets[chunks]);
      continue;
    }

    const LandmarkMode mode = LandmarkMode::kVertex;
    SearchResult result;
    result.cardinality = k;
    result.best_set = Landmarks{outcomes[hit].first_set, mode};
    if (options.all_optima) {
      std::vector<Landmarks> all;
      for (auto& outcome : outcomes) {
        for (auto& set : outcome.hits) all.push_back(Landmarks{std::move(set), mode});
      }
      result.all_optima = std::move(all);
      result.subsets_examined = saturating_add(prior, offsets[chunks]);
    } else {
      result.subsets_examined = saturating_add(
          prior, saturating_add(offsets[hit], *outcomes[hit].first_rank + 1));
    }
    result.elapsed = std::chrono::steady_clock::now() - started;
    return result;
  }
  // The full element set always passes, so this is unreachable for valid
  // distance matrices.
  throw Error(ErrorCode::kInvalidArgument, "no passing set exists");
}

namespace {

SearchResult with_mode(SearchResult result, LandmarkMode mode) {
  result.best_set.mode = mode;
  if (result.all_optima) {
    for (auto& lm : *result.all_optima) lm.mode = mode;
  }
  return result;
}

SearchResult psi_on(const DistanceMatrix& dm, const SearchOptions& options) {
  if (dm.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "psi needs at least two elements");
  }
  SearchOptions psi_options = options;
  if (options.dim_first) {
    SearchOptions dim_options = options;
    dim_options.start_k = 0;
    dim_options.all_optima = false;
    const auto dim = min_cardinality_search(dm, Predicate::kResolving,
                                            dim_options);
    psi_options.start_k = std::max<std::size_t>(
        {std::size_t{2}, dim.cardinality, options.start_k});
  }
  return min_cardinality_search(dm, Predicate::kDoublyResolving, psi_options);
}

}  // namespace

SearchResult metric_dimension(const Graph& g, const SearchOptions& options) {
  return with_mode(
      min_cardinality_search(g.distances(), Predicate::kResolving, options),
      LandmarkMode::kVertex);
}

SearchResult edge_metric_dimension(const Graph& g,
                                   const SearchOptions& options) {
  return with_mode(min_cardinality_search(g.line_distances(),
                                          Predicate::kResolving, options),
                   LandmarkMode::kEdgeViaLineGraph);
}

SearchResult psi(const Graph& g, const SearchOptions& options) {
  return with_mode(psi_on(g.distances(), options), LandmarkMode::kVertex);
}

SearchResult psi_edge(const Graph& g, const SearchOptions& options) {
  if (g.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge version of psi needs at least two edges");
  }
  return with_mode(psi_on(g.line_distances(), options),
                   LandmarkMode::kEdgeViaLineGraph);
}

Landmarks greedy_doubly_resolving(const DistanceMatrix& dm) {
  const std::size_t n = dm.size();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "greedy doubly resolving set needs at least two elements");
  }
  // Elements sharing a class id still have a constant difference vector
  // over the chosen landmarks; pairs inside one class are unresolved.
  std::vector<std::uint32_t> cls(n, 0);
  std::vector<std::size_t> chosen{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  auto unresolved_pairs = [](std::vector<std::pair<std::uint32_t, Distance>>& keys) {
    std::sort(keys.begin(), keys.end());
    std::uint64_t pairs = 0;
    std::uint64_t run = 1;
    for (std::size_t i = 1; i <= keys.size(); ++i) {
      if (i < keys.size() && keys[i] == keys[i - 1]) {
        ++run;
      } else {
        pairs += run * (run - 1) / 2;
        run = 1;
      }
    }
    return pairs;
  };

  std::uint64_t unresolved = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<std::pair<std::uint32_t, Distance>> keys(n);
  while (unresolved > 0) {
    std::size_t best = n;
    std::uint64_t best_unresolved = unresolved + 1;
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x]) continue;
      for (std::size_t u = 0; u < n; ++u) {
        keys[u] = {cls[u], dm(u, x) - dm(u, chosen.front())};
      }
      const std::uint64_t remaining = unresolved_pairs(keys);
      if (remaining < best_unresolved) {
        best_unresolved = remaining;
        best = x;
      }
    }
    used[best] = true;
    chosen.push_back(best);
    // Relabel classes by (old class, new difference).
    std::vector<std::pair<std::pair<std::uint32_t, Distance>, std::uint32_t>>
        tagged(n);
    for (std::size_t u = 0; u < n; ++u) {
      tagged[u] = {{cls[u], dm(u, best) - dm(u, chosen.front())},
                   static_cast<std::uint32_t>(u)};
    }
    std::sort(tagged.begin(), tagged.end());
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && tagged[i].first != tagged[i - 1].first) ++next;
      cls[tagged[i].second] = next;
    }
    unresolved = best_unresolved;
  }

  // Prune to a minimal set.
  for (std::size_t i = 0; i < chosen.size() && chosen.size() > 2;) {
    std::vector<std::size_t> rest = chosen;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (check(dm, Predicate::kDoublyResolving, rest).ok) {
      chosen = std::move(rest);
    } else {
      ++i;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return Landmarks{std::move(chosen), LandmarkMode::kVertex};
}

namespace {

std::vector<std::size_t> resolve_labels(const LabeledFamilyGraph& family,
                                        std::span<const std::string> labels) {
  std::vector<std::size_t> indices;
  indices.reserve(labels.size());
  for (const auto& label : labels) {
    indices.push_back(family.labels.index_of(label));
  }
  return indices;
}

}  // namespace

ResolveReport labeled_doubly_resolving_check(
    const LabeledFamilyGraph& family, std::span<const std::string> labels) {
  const auto indices = resolve_labels(family, labels);
  return is_doubly_resolving(family.graph.line_distances(), indices);
}

bool is_labeled_witness(const LabeledFamilyGraph& family,
                        std::span<const std::string> candidate,
                        std::string_view a, std::string_view b) {
  const auto indices = resolve_labels(family, candidate);
  const std::size_t u = family.labels.index_of(a);
  const std::size_t v = family.labels.index_of(b);
  return u != v &&
         !pair_doubly_resolved(family.graph.line_distances(), indices, u, v);
}

}  // namespace edrs
