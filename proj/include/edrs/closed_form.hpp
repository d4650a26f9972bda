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

// Closed-form edge distances for sunlet and prism graphs, checked against
// breadth-first search on the line graph.
//
// Distances from a base edge (e_0 for sunlets, f_0 for prisms) are read off
// the published distance-partition tables; distances between arbitrary
// edges then follow from rotational symmetry plus a piecewise correction
// that depends on the parity of n, the edge classes and whether i <= j.
// BFS is the ground truth; this module is the model under test.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edrs/generators.hpp"
#include "edrs/graph.hpp"

namespace edrs {

enum class Family { kSunlet, kPrism };

std::string_view to_string(Family family);
// "sunlet" or "prism"; throws InvalidArgument otherwise.
Family parse_family(std::string_view name);

enum class EdgeClass { kE, kF, kG };

struct EdgeLabel {
  EdgeClass cls = EdgeClass::kE;
  std::size_t index = 0;

  // Reduces `index` mod n.
  static EdgeLabel of(EdgeClass cls, long long index, std::size_t n);
  // "e3", "f0", "g12". Throws InvalidLabel.
  static EdgeLabel parse(std::string_view text);

  std::string to_string() const;
  auto operator<=>(const EdgeLabel&) const = default;
};

// Smallest n the closed forms cover: 4 for sunlets, 6 for prisms.
std::size_t min_supported_n(Family family);
LabeledFamilyGraph family_graph(Family family, std::size_t n);
// Every edge label of the family at n, in class-then-index order.
std::vector<EdgeLabel> all_labels(Family family, std::size_t n);

struct BaseDistanceTable {
  Family family = Family::kSunlet;
  std::size_t n = 0;
  EdgeLabel base;
  std::map<EdgeLabel, Distance> dist_to_base;

  // Throws InvalidLabel for labels outside the table.
  Distance at(EdgeLabel label) const;
  // fibers()[i] = labels at distance i from the base.
  std::vector<std::vector<EdgeLabel>> fibers() const;
};

// Throws UnsupportedParameter below min_supported_n.
BaseDistanceTable base_table(Family family, std::size_t n);

Distance closed_edge_distance(const BaseDistanceTable& table, EdgeLabel a,
                              EdgeLabel b);
Distance closed_edge_distance(Family family, std::size_t n, EdgeLabel a,
                              EdgeLabel b);

struct FormulaDeviation {
  Family family = Family::kSunlet;
  std::size_t n = 0;
  EdgeLabel a;
  EdgeLabel b;
  Distance formula_value = 0;
  Distance bfs_value = 0;
};

struct FamilyVerification {
  Family family = Family::kSunlet;
  std::size_t n = 0;
  // Unordered pairs of distinct edges; self-distances are checked too.
  std::size_t pairs_checked = 0;
  std::vector<FormulaDeviation> deviations;
};

// Compares every pair (including a == b) against BFS for the table's n.
FamilyVerification verify_table(const BaseDistanceTable& table);
std::vector<FamilyVerification> verify_family(Family family, std::size_t n_lo,
                                              std::size_t n_hi);

// The three-edge doubly resolving sets whose coordinate tables are
// reproduced below: {e0, e1, ek} / {e0, e1, e(k+1)} for even / odd sunlets
// and {e0, e(k-1), f(k+1)} / {e0, ek, g(k+2)} for even / odd prisms.
std::vector<EdgeLabel> doubly_resolving_basis(Family family, std::size_t n);

using Coordinates = std::vector<Distance>;

struct ReferenceRow {
  std::size_t fiber = 0;
  EdgeLabel edge;
  Coordinates coords;
  // Non-empty when the published row differs from `coords`; describes the
  // printed form and the resolution.
  std::string erratum;
};

// Symbolic coordinate rows instantiated at n, with errata resolved.
std::vector<ReferenceRow> reference_coordinate_rows(Family family,
                                                    std::size_t n);

struct CoordinateRow {
  std::size_t fiber = 0;
  EdgeLabel edge;
  Coordinates coords;
};

struct CoordinateMismatch {
  EdgeLabel edge;
  std::optional<ReferenceRow> expected;
  std::optional<CoordinateRow> computed;
};

struct CoordinateTable {
  Family family = Family::kSunlet;
  std::size_t n = 0;
  std::vector<EdgeLabel> basis;
  std::vector<CoordinateRow> rows;  // grouped by fiber
  std::vector<CoordinateMismatch> mismatches;
  std::vector<ReferenceRow> errata;

  bool matches() const { return mismatches.empty(); }
};

CoordinateTable reproduce_coordinate_table(Family family, std::size_t n);

struct DistinctnessReport {
  bool rows_distinct = true;
  // No rows h1 in S_i, h2 in S_j with r(h1) - r(h2) = (i-j, ..., i-j).
  bool no_fiber_offsets = true;
  // No two rows differ by any constant vector (doubly resolving).
  bool no_constant_offsets = true;

  bool ok() const {
    return rows_distinct && no_fiber_offsets && no_constant_offsets;
  }
};

DistinctnessReport check_distinctness(const CoordinateTable& table);

// Rows of the reference table of 2-subsets of an even sunlet that are not
// doubly resolving, each with a pair of edges no two candidate edges
// doubly resolve.
struct PairTableRow {
  std::string description;
  std::vector<std::vector<EdgeLabel>> candidates;
  std::pair<EdgeLabel, EdgeLabel> witness;
};

// Throws UnsupportedParameter unless n is even and >= 4.
std::vector<PairTableRow> sunlet_pair_table(std::size_t n);

}  // namespace edrs
