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

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "edrs/metric.hpp"
#include "support/oracles.hpp"

namespace edrs::testing {

struct PropertyOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

// Random connected graph paired with either its vertex or its line-graph
// distance matrix, alternating per case.
struct Instance {
  Graph graph;
  bool edge_mode = false;

  const DistanceMatrix& dm() const {
    return edge_mode ? graph.line_distances() : graph.distances();
  }
  Matrix oracle() const {
    return edge_mode ? line_graph_distances(graph) : floyd_warshall(graph);
  }
};

inline Instance random_instance(std::mt19937& rng, std::size_t i,
                                std::size_t max_order = 12) {
  const std::size_t order =
      std::uniform_int_distribution<std::size_t>(3, max_order)(rng);
  const std::size_t extra =
      std::uniform_int_distribution<std::size_t>(0, order)(rng);
  return {random_connected_graph(rng, order, extra), i % 2 == 1};
}

inline std::vector<std::size_t> random_landmarks(std::mt19937& rng,
                                                 std::size_t n,
                                                 std::size_t min_size) {
  const std::size_t size =
      std::uniform_int_distribution<std::size_t>(min_size, n)(rng);
  return random_subset(rng, n, size);
}

inline PropertyOutcome distance_axioms(std::mt19937& rng, std::size_t cases) {
  PropertyOutcome out{"distance matrix axioms"};
  while (out.cases < cases) {
    const Instance inst = random_instance(rng, out.cases, 24);
    const auto& d = inst.dm();
    const std::size_t n = d.size();
    bool ok = same_as(d, inst.oracle());
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = d(i, i) == 0;
      for (std::size_t j = 0; j < n && ok; ++j) {
        ok = d(i, j) == d(j, i) && (i == j || d(i, j) > 0);
        for (std::size_t k = 0; k < n && ok; ++k) ok = d(i, k) <= d(i, j) + d(j, k);
      }
    }
    out.failures += !ok;
    ++out.cases;
  }
  return out;
}

inline PropertyOutcome doubly_implies_resolving(std::mt19937& rng,
                                                std::size_t cases) {
  PropertyOutcome out{"doubly resolving implies resolving"};
  while (out.cases < cases) {
    const Instance inst = random_instance(rng, out.cases);
    const auto& dm = inst.dm();
    const auto lm = random_landmarks(rng, dm.size(), 2);
    if (!is_doubly_resolving(dm, lm).ok) {
      // Too few passing sets come from uniform sampling; widen instead.
      auto grown = lm;
      for (std::size_t x = 0; x < dm.size() && !is_doubly_resolving(dm, grown).ok; ++x)
        if (std::find(grown.begin(), grown.end(), x) == grown.end()) grown.push_back(x);
      out.failures += !is_resolving(dm, grown).ok;
    } else {
      out.failures += !is_resolving(dm, lm).ok;
    }
    ++out.cases;
  }
  return out;
}

inline PropertyOutcome superset_monotonicity(std::mt19937& rng,
                                             std::size_t cases) {
  PropertyOutcome out{"superset monotonicity"};
  while (out.cases < cases) {
    const Instance inst = random_instance(rng, out.cases);
    const auto& dm = inst.dm();
    const Predicate p = out.cases % 4 < 2 ? Predicate::kResolving
                                          : Predicate::kDoublyResolving;
    // Grow a random prefix of a random order until it passes.
    const auto order = random_subset(rng, dm.size(), dm.size());
    std::vector<std::size_t> base(order.begin(), order.begin() + 2);
    std::size_t next = 2;
    while (!check(dm, p, base).ok) base.push_back(order[next++]);
    auto super = base;
    super.insert(super.end(), order.begin() + static_cast<std::ptrdiff_t>(next),
                 order.begin() + static_cast<std::ptrdiff_t>(
                     next + (dm.size() - next) / 2));
    std::shuffle(super.begin(), super.end(), rng);
    out.failures += !check(dm, p, super).ok;
    ++out.cases;
  }
  return out;
}

inline PropertyOutcome permutation_invariance(std::mt19937& rng,
                                              std::size_t cases) {
  PropertyOutcome out{"permutation invariance"};
  while (out.cases < cases) {
    const Instance inst = random_instance(rng, out.cases);
    const auto& dm = inst.dm();
    auto lm = random_landmarks(rng, dm.size(), 2);
    const bool r = is_resolving(dm, lm).ok;
    const bool d = is_doubly_resolving(dm, lm).ok;
    const Landmarks before{lm};
    std::vector<Representation> reps;
    for (std::size_t e = 0; e < dm.size(); ++e) reps.push_back(representation(dm, e, before));
    std::vector<std::size_t> perm(lm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> shuffled;
    for (std::size_t i : perm) shuffled.push_back(lm[i]);
    bool ok = is_resolving(dm, shuffled).ok == r && is_doubly_resolving(dm, shuffled).ok == d;
    for (std::size_t e = 0; e < dm.size(); ++e) {
      const auto rep = representation(dm, e, Landmarks{shuffled});
      for (std::size_t j = 0; j < perm.size(); ++j) ok = ok && rep[j] == reps[e][perm[j]];
    }
    out.failures += !ok;
    ++out.cases;
  }
  return out;
}

inline PropertyOutcome full_set_passes(std::mt19937& rng, std::size_t cases) {
  PropertyOutcome out{"full element set passes both checks"};
  while (out.cases < cases) {
    const Instance inst = random_instance(rng, out.cases);
    const auto& dm = inst.dm();
    if (dm.size() < 2) continue;
    std::vector<std::size_t> all(dm.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    out.failures += !is_resolving(dm, all).ok || !is_doubly_resolving(dm, all).ok;
    ++out.cases;
  }
  return out;
}

// Witnesses must be re-verifiable and lexicographically first.
inline PropertyOutcome witness_validity(std::mt19937& rng, std::size_t cases) {
  PropertyOutcome out{"witness validity"};
  while (out.cases < cases) {
    const Instance inst = random_instance(rng, out.cases);
    const auto& dm = inst.dm();
    const Matrix oracle = inst.oracle();
    const auto lm = random_landmarks(rng, dm.size(), 2);
    bool ok = true;
    const auto r = is_resolving(dm, lm);
    const auto d = is_doubly_resolving(dm, lm);
    ok = ok && r.ok == oracle_resolving(oracle, lm) && d.ok == oracle_doubly_resolving(oracle, lm);
    if (!r.ok) {
      const auto [u, v] = *r.witness;
      ok = ok && u < v && representation(dm, u, {lm}) == representation(dm, v, {lm});
      for (std::size_t a = 0; a < dm.size() && ok; ++a)
        for (std::size_t b = a + 1; b < dm.size(); ++b) {
          if (std::pair(a, b) >= std::pair(u, v)) break;
          ok = ok && representation(dm, a, {lm}) != representation(dm, b, {lm});
        }
    }
    if (!d.ok) {
      const auto [u, v] = *d.witness;
      ok = ok && u < v;
      for (std::size_t x = 0; x < lm.size(); ++x)
        for (std::size_t y = 0; y < lm.size(); ++y)
          if (x != y) ok = ok && !doubly_resolves(dm, lm[x], lm[y], u, v);
      for (std::size_t a = 0; a < dm.size() && ok; ++a)
        for (std::size_t b = a + 1; b < dm.size(); ++b) {
          if (std::pair(a, b) >= std::pair(u, v)) break;
          ok = ok && oracle_pair_doubly_resolved(oracle, lm, a, b);
        }
    }
    out.failures += !ok;
    ++out.cases;
  }
  return out;
}

inline bool every_smaller_subset_fails(const DistanceMatrix& dm, Predicate p,
                                       const std::vector<std::size_t>& set) {
  const std::size_t min_size = p == Predicate::kResolving ? 1 : 2;
  if (set.size() <= min_size) return true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto rest = set;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (check(dm, p, rest).ok) return false;
  }
  return true;
}

// Exact search against a bitmask oracle, plus dim <= psi and minimality.
inline PropertyOutcome search_matches_oracle(std::mt19937& rng,
                                             std::size_t cases) {
  PropertyOutcome out{"search optimum, dim <= psi, minimality"};
  while (out.cases < cases) {
    const bool edge_mode = out.cases % 2 == 1;
    const Graph g = small_random_graph(rng, edge_mode ? 8 : 7);
    const Instance inst{g, edge_mode};
    const auto& dm = inst.dm();
    if (dm.size() < 2) continue;
    const Matrix oracle = inst.oracle();
    const auto dim = min_cardinality_search(dm, Predicate::kResolving);
    const auto psi = min_cardinality_search(dm, Predicate::kDoublyResolving);
    bool ok = dim.cardinality == oracle_dim(oracle) &&
              psi.cardinality == oracle_psi(oracle) &&
              dim.cardinality <= psi.cardinality &&
              is_resolving(dm, dim.best_set).ok &&
              is_doubly_resolving(dm, psi.best_set).ok &&
              every_smaller_subset_fails(dm, Predicate::kResolving, dim.best_set.elements) &&
              every_smaller_subset_fails(dm, Predicate::kDoublyResolving, psi.best_set.elements);
    const auto greedy = greedy_doubly_resolving(dm);
    ok = ok && is_doubly_resolving(dm, greedy).ok && greedy.size() >= psi.cardinality &&
         every_smaller_subset_fails(dm, Predicate::kDoublyResolving, greedy.elements);
    out.failures += !ok;
    ++out.cases;
  }
  return out;
}

inline std::vector<PropertyOutcome> run_property_suite(unsigned seed,
                                                       std::size_t cases) {
  std::mt19937 rng(seed);
  return {distance_axioms(rng, cases),          doubly_implies_resolving(rng, cases),
          superset_monotonicity(rng, cases),
          permutation_invariance(rng, cases),   full_set_passes(rng, cases),
          witness_validity(rng, cases),         search_matches_oracle(rng, cases)};
}

}  // namespace edrs::testing
