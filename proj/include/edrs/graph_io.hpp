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

// Graph JSON ({"order": n, "edges": [[u,v],...], "labels": {"e0": [u,v]}})
// and Graphviz DOT export.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "edrs/generators.hpp"

namespace edrs {

std::string graph_to_json(const LabeledFamilyGraph& g);
// Throws InvalidFormat on malformed documents, plus any build_graph error.
// Input graphs must be connected.
LabeledFamilyGraph graph_from_json(std::string_view text,
                                   std::string source = "json");

LabeledFamilyGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const LabeledFamilyGraph& g,
                      const std::filesystem::path& path);

// Family specifier or `file:<path>`.
LabeledFamilyGraph load_graph_spec(std::string_view spec);

// Undirected DOT; edges carry their labels when present.
std::string to_dot(const LabeledFamilyGraph& g);
// DOT of L(G) with nodes named by edge labels (or edge indices).
std::string line_graph_to_dot(const LabeledFamilyGraph& g);

}  // namespace edrs
