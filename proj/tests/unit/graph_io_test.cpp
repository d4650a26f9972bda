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

#include "edrs/graph_io.hpp"

#include <filesystem>
#include <random>
#include <string>

#include "doctest.h"
#include "edrs/error.hpp"
#include "support/oracles.hpp"

namespace edrs {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an edrs::Error");
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("JSON round trip keeps edges and labels") {
  for (const auto& fg : {make_sunlet(7), make_prism(6), make_generalized_petersen(7, 2)}) {
    const auto back = graph_from_json(graph_to_json(fg));
    CHECK(back.graph.order() == fg.graph.order());
    REQUIRE(back.graph.size() == fg.graph.size());
    for (std::size_t i = 0; i < fg.graph.size(); ++i) {
      CHECK(back.graph.edges()[i] == fg.graph.edges()[i]);
      CHECK(back.labels.label(i) == fg.labels.label(i));
    }
    CHECK(to_string(back.tag) == "json");
  }
}

TEST_CASE("JSON round trip of random unlabeled graphs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    LabeledFamilyGraph fg{testing::random_connected_graph(rng, 12, 6), CustomFamily{"r"}, {}};
    const auto back = graph_from_json(graph_to_json(fg));
    CHECK(back.labels.empty());
    CHECK(std::equal(back.graph.edges().begin(), back.graph.edges().end(),
                     fg.graph.edges().begin(), fg.graph.edges().end()));
  }
}

TEST_CASE("malformed graph documents") {
  CHECK(code_of([] { graph_from_json("{"); }) == ErrorCode::kInvalidFormat);
  CHECK(code_of([] { graph_from_json("[]"); }) == ErrorCode::kInvalidFormat);
  CHECK(code_of([] { graph_from_json(R"({"order": -1, "edges": []})"); }) ==
        ErrorCode::kInvalidFormat);
  CHECK(code_of([] { graph_from_json(R"({"order": 2, "edges": [[0]]})"); }) ==
        ErrorCode::kInvalidFormat);
  CHECK(code_of([] { graph_from_json(R"({"order": 2, "edges": [[0, "1"]]})"); }) ==
        ErrorCode::kInvalidFormat);
  CHECK(code_of([] { graph_from_json(R"({"order": 2, "edges": [[0, 1]], "labels": []})"); }) ==
        ErrorCode::kInvalidFormat);
  CHECK(code_of([] { graph_from_json(R"({"order": 4, "edges": [[0, 1], [2, 3]]})"); }) ==
        ErrorCode::kDisconnected);
  CHECK(code_of([] { graph_from_json(R"({"order": 2, "edges": [[0, 1], [1, 0]]})"); }) ==
        ErrorCode::kDuplicateEdge);
  CHECK(code_of([] {
          graph_from_json(R"({"order": 3, "edges": [[0, 1], [1, 2]], "labels": {"a": [0, 1]}})");
        }) == ErrorCode::kInvalidLabel);
  CHECK(code_of([] {
          graph_from_json(
              R"({"order": 3, "edges": [[0, 1], [1, 2]], "labels": {"a": [1, 0], "b": [0, 2]}})");
        }) == ErrorCode::kEdgeNotInGraph);
}

TEST_CASE("graph files and specs") {
  const auto path = std::filesystem::temp_directory_path() / "edrs_graph_io_test.json";
  write_graph_file(make_sunlet(5), path);
  const auto loaded = load_graph_spec("file:" + path.string());
  CHECK(loaded.graph.size() == 10);
  CHECK(loaded.labels.index_of("f3") == make_sunlet(5).labels.index_of("f3"));
  CHECK(to_string(loaded.tag) == "file:" + path.string());
  std::filesystem::remove(path);

  CHECK(code_of([&] { load_graph_spec("file:" + path.string()); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(to_string(load_graph_spec("prism:5").tag) == "prism:5");
}

TEST_CASE("DOT output") {
  const auto c3 = make_cycle(3);
  const std::string dot = to_dot(c3);
  CHECK(dot.starts_with("graph \"cycle:3\" {"));
  CHECK(dot.find("0 -- 1 [label=\"c0\"];") != std::string::npos);
  CHECK(dot.find("0 -- 2 [label=\"c2\"];") != std::string::npos);

  const std::string ldot = line_graph_to_dot(make_path(3));
  CHECK(ldot.starts_with("graph \"L(path:3)\" {"));
  CHECK(ldot.find("\"p0\" -- \"p1\";") != std::string::npos);

  LabeledFamilyGraph quoted{build_graph(2, {{0, 1}}), CustomFamily{"a\"b"}, {}};
  CHECK(to_dot(quoted).starts_with("graph \"a\\\"b\" {"));
}

}  // namespace
}  // namespace edrs
