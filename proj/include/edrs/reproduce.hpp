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

// Batch reproduction of the reference results (distance partitions, the
// even-sunlet pair table, coordinate tables, dim_E / psi_E sweeps) and the
// generalized Petersen experiment.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "edrs/metric.hpp"

namespace edrs {

struct CheckOutcome {
  std::string section;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReproduceOptions {
  std::size_t sunlet_lo = 4, sunlet_hi = 14;
  std::size_t prism_psi_lo = 6, prism_psi_hi = 12;
  std::size_t prism_dim_lo = 3, prism_dim_hi = 12;
  std::size_t formula_hi = 20;  // closed-form cross-check upper bound
  std::vector<std::size_t> pair_table_n{8, 12};
  std::vector<std::size_t> coordinate_n{8, 9};
  unsigned threads = 1;
};

struct ReproductionBundle {
  std::vector<CheckOutcome> checks;
  std::string markdown;

  bool all_passed() const;
  std::size_t failures() const;
};

ReproductionBundle reproduce_reference_results(
    const ReproduceOptions& options = {});

// Which k values to try for each n. Empty `ks` means every 1 <= k < n/2.
struct PetersenKRule {
  std::vector<std::size_t> ks;

  // "all", "2" or "1,2,3". Throws InvalidArgument.
  static PetersenKRule parse(const std::string& text);
  std::vector<std::size_t> values(std::size_t n) const;
};

struct ExperimentRow {
  std::size_t n = 0, k = 0;
  std::size_t order = 0, size = 0;
  std::optional<std::size_t> dim_edge;  // unset when the budget ran out
  std::vector<std::string> dim_set;
  std::size_t psi_edge = 0;
  bool psi_exact = true;  // false: greedy upper bound only
  std::vector<std::string> psi_set;
  std::uint64_t subsets_examined = 0;
  double elapsed_ms = 0;
};

std::vector<ExperimentRow> experiment_gp(std::size_t n_lo, std::size_t n_hi,
                                         const PetersenKRule& rule,
                                         const SearchOptions& options);

}  // namespace edrs
