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

#include <fstream>
#include <sstream>

#include "edrs/error.hpp"
#include "json.hpp"

namespace edrs {
namespace {

using nlohmann::json;

Edge parse_pair(const json& pair) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
      !pair[1].is_number_unsigned()) {
    throw Error(ErrorCode::kInvalidFormat,
                "edge must be a pair of nonnegative integers, got " +
                    pair.dump());
  }
  return Edge{pair[0].get<VertexId>(), pair[1].get<VertexId>()};
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string graph_to_json(const LabeledFamilyGraph& g) {
  json doc;
  doc["order"] = g.graph.order();
  json edges = json::array();
  for (const Edge& e : g.graph.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (!g.labels.empty()) {
    json labels = json::object();
    const auto edge_list = g.graph.edges();
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
      labels[g.labels.label(i)] = {edge_list[i].u, edge_list[i].v};
    }
    doc["labels"] = std::move(labels);
  }
  return doc.dump(2);
}

LabeledFamilyGraph graph_from_json(std::string_view text, std::string source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidFormat, e.what());
  }
  if (!doc.is_object() || !doc.contains("order") ||
      !doc["order"].is_number_unsigned() || !doc.contains("edges") ||
      !doc["edges"].is_array()) {
    throw Error(ErrorCode::kInvalidFormat,
                "graph JSON needs an unsigned \"order\" and an \"edges\" array");
  }
  std::vector<VertexPair> pairs;
  for (const auto& item : doc["edges"]) {
    const Edge e = parse_pair(item);
    pairs.emplace_back(e.u, e.v);
  }
  Graph graph = build_graph(doc["order"].get<std::size_t>(), pairs,
                            Connectivity::kRequired);
  std::vector<std::pair<std::string, Edge>> entries;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_object()) {
      throw Error(ErrorCode::kInvalidFormat, "\"labels\" must be an object");
    }
    for (const auto& [label, pair] : doc["labels"].items()) {
      const Edge e = parse_pair(pair);
      entries.emplace_back(label, Edge::canonical(e.u, e.v));
    }
  }
  EdgeLabeling labels(graph, entries);
  return {std::move(graph), CustomFamily{std::move(source)},
          std::move(labels)};
}

LabeledFamilyGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot open graph file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return graph_from_json(buffer.str(), "file:" + path.string());
}

void write_graph_file(const LabeledFamilyGraph& g,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot write graph file " + path.string());
  }
  out << graph_to_json(g) << '\n';
}

LabeledFamilyGraph load_graph_spec(std::string_view spec) {
  constexpr std::string_view kFilePrefix = "file:";
  if (spec.starts_with(kFilePrefix)) {
    return read_graph_file(std::string(spec.substr(kFilePrefix.size())));
  }
  return make_family(spec);
}

std::string to_dot(const LabeledFamilyGraph& g) {
  std::ostringstream out;
  out << "graph " << dot_quote(to_string(g.tag)) << " {\n";
  for (std::size_t v = 0; v < g.graph.order(); ++v) out << "  " << v << ";\n";
  const auto edges = g.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << "  " << edges[i].u << " -- " << edges[i].v;
    if (!g.labels.empty()) out << " [label=" << dot_quote(g.labels.label(i)) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string line_graph_to_dot(const LabeledFamilyGraph& g) {
  const LineGraphMap& map = g.graph.line_graph();
  std::ostringstream out;
  out << "graph " << dot_quote("L(" + to_string(g.tag) + ")") << " {\n";
  for (std::size_t i = 0; i < map.base_edges.size(); ++i) {
    out << "  " << dot_quote(g.edge_name(i)) << ";\n";
  }
  for (const Edge& e : map.line_graph.edges()) {
    out << "  " << dot_quote(g.edge_name(e.u)) << " -- "
        << dot_quote(g.edge_name(e.v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace edrs
