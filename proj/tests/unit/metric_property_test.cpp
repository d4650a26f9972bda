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

#include <random>

#include "doctest.h"
#include "edrs/metric.hpp"
#include "support/properties.hpp"

namespace edrs {
namespace {

constexpr std::size_t kCases = 500;

TEST_CASE("metric properties on random graphs") {
  for (const auto& p : testing::run_property_suite(20261016, kCases)) {
    CAPTURE(p.name);
    CHECK(p.cases >= kCases);
    CHECK(p.failures == 0);
  }
}

TEST_CASE("search optimum matches the oracle on family graphs") {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& fg : {make_sunlet(n), make_cycle(n + 2), make_path(n + 3)}) {
      const auto oracle = testing::line_graph_distances(fg.graph);
      CHECK(psi_edge(fg.graph).cardinality == testing::oracle_psi(oracle));
      CHECK(edge_metric_dimension(fg.graph).cardinality == testing::oracle_dim(oracle));
    }
  }
}

}  // namespace
}  // namespace edrs
