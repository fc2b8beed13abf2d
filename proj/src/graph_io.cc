// Copyright 2026 The Stablegraphs Authors
//
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

#include "stablegraphs/graph_io.h"

#include <regex>

namespace stablegraphs {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string VertexId(int v) { return "v" + std::to_string(v); }

const json& Field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string("graph document: missing field \"") + key +
                     "\"");
  }
  return doc.at(key);
}

int ParseVertexId(const std::string& id, int num_vertices,
                  const std::string& where) {
  static const std::regex kVertex(R"(v(0|[1-9][0-9]*))");
  std::smatch match;
  if (!std::regex_match(id, match, kVertex)) {
    throw InputError(where + ": bad vertex id \"" + id + "\"");
  }
  const int v = std::stoi(match[1].str());
  if (v >= num_vertices) {
    throw InputError(where + ": unknown vertex \"" + id + "\"");
  }
  return v;
}

}  // namespace

ordered_json GraphToJson(const StableGraph& graph) {
  ordered_json doc;
  doc["format"] = "stable-graph";
  doc["version"] = kFormatVersion;
  ordered_json vertices = ordered_json::array();
  for (int v = 0; v < graph.num_vertices(); ++v) {
    ordered_json vertex;
    vertex["id"] = VertexId(v);
    vertex["genus"] = graph.vertex_genus(v);
    vertices.push_back(std::move(vertex));
  }
  doc["vertices"] = std::move(vertices);
  std::vector<int> local(graph.num_half_edges(), 0);
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const std::vector<int> hs = graph.half_edges_at(v);
    for (std::size_t k = 0; k < hs.size(); ++k) local[hs[k]] = static_cast<int>(k);
  }
  ordered_json edges = ordered_json::array();
  for (int e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edges()[e];
    edges.push_back(VertexId(edge.a) + ".h" + std::to_string(local[2 * e]) + "-" +
                    VertexId(edge.b) + ".h" + std::to_string(local[2 * e + 1]));
  }
  doc["edges"] = std::move(edges);
  ordered_json legs = ordered_json::array();
  for (int label = 1; label <= graph.num_legs(); ++label) {
    legs.push_back(std::to_string(label) + "@" + VertexId(graph.leg_vertex(label)));
  }
  doc["legs"] = std::move(legs);
  return doc;
}

StableGraph GraphFromJson(const json& doc) {
  const json& format = Field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != "stable-graph") {
    throw InputError("graph document: \"format\" must be \"stable-graph\"");
  }
  const json& version = Field(doc, "version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    throw InputError("graph document: unsupported version");
  }
  const json& vertices = Field(doc, "vertices");
  if (!vertices.is_array()) throw InputError("graph document: \"vertices\" must be an array");
  const int n = static_cast<int>(vertices.size());
  std::vector<int> genus(n);
  for (int v = 0; v < n; ++v) {
    const std::string where = "vertices[" + std::to_string(v) + "]";
    const json& vertex = vertices[v];
    if (!vertex.is_object() || !vertex.contains("id") || !vertex.contains("genus") ||
        !vertex["id"].is_string() || !vertex["genus"].is_number_integer()) {
      throw InputError(where + ": expected {\"id\": \"v" + std::to_string(v) +
                       "\", \"genus\": <int>}");
    }
    if (vertex["id"].get<std::string>() != VertexId(v)) {
      throw InputError(where + ": id must be \"" + VertexId(v) + "\"");
    }
    genus[v] = vertex["genus"].get<int>();
  }

  static const std::regex kEdge(
      R"(\s*(v[0-9]+)\.h([0-9]+)\s*-\s*(v[0-9]+)\.h([0-9]+)\s*)");
  const json& edge_list = Field(doc, "edges");
  if (!edge_list.is_array()) throw InputError("graph document: \"edges\" must be an array");
  std::vector<Edge> edges;
  std::vector<std::vector<int>> seen_local(n);
  for (std::size_t e = 0; e < edge_list.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    if (!edge_list[e].is_string()) throw InputError(where + ": expected a string");
    const std::string text = edge_list[e].get<std::string>();
    std::smatch match;
    if (!std::regex_match(text, match, kEdge)) {
      throw InputError(where + ": expected \"vI.hA-vJ.hB\", got \"" + text + "\"");
    }
    const int a = ParseVertexId(match[1].str(), n, where);
    const int b = ParseVertexId(match[3].str(), n, where);
    seen_local[a].push_back(std::stoi(match[2].str()));
    seen_local[b].push_back(std::stoi(match[4].str()));
    edges.push_back({a, b});
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> ids = seen_local[v];
    std::sort(ids.begin(), ids.end());
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (ids[k] != static_cast<int>(k)) {
        throw InputError("edges: half-edges at " + VertexId(v) +
                         " must be numbered h0..h" +
                         std::to_string(ids.size() - 1) + " without repeats");
      }
    }
  }

  static const std::regex kLeg(R"(\s*([1-9][0-9]*)\s*@\s*(v[0-9]+)\s*)");
  const json& leg_list = Field(doc, "legs");
  if (!leg_list.is_array()) throw InputError("graph document: \"legs\" must be an array");
  const int m = static_cast<int>(leg_list.size());
  std::vector<int> leg_vertex(m, -1);
  for (int k = 0; k < m; ++k) {
    const std::string where = "legs[" + std::to_string(k) + "]";
    if (!leg_list[k].is_string()) throw InputError(where + ": expected a string");
    const std::string text = leg_list[k].get<std::string>();
    std::smatch match;
    if (!std::regex_match(text, match, kLeg)) {
      throw InputError(where + ": expected \"label@vI\", got \"" + text + "\"");
    }
    const int label = std::stoi(match[1].str());
    if (label > m) {
      throw InputError(where + ": label " + std::to_string(label) +
                       " outside 1.." + std::to_string(m));
    }
    if (leg_vertex[label - 1] != -1) {
      throw InputError(where + ": label " + std::to_string(label) + " repeated");
    }
    leg_vertex[label - 1] = ParseVertexId(match[2].str(), n, where);
  }
  return StableGraph(std::move(genus), std::move(edges), std::move(leg_vertex));
}

std::string Dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string WriteGraph(const StableGraph& graph) { return Dump(GraphToJson(graph)); }

StableGraph ReadGraph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // what() reads "[json.exception...] parse error at line L, column C: ...".
    const std::string what = e.what();
    const auto at = what.find("line ");
    throw InputError("graph document: " +
                     (at == std::string::npos ? what : what.substr(at)));
  }
  return GraphFromJson(doc);
}

ordered_json GeneratorsToJson(const PermGroup& group) {
  ordered_json gens = ordered_json::array();
  for (const Permutation& g : group.generators()) gens.push_back(g.ToCycleString());
  return gens;
}

ordered_json CensusToJson(const StratumCensus& census) {
  ordered_json doc;
  doc["format"] = "stable-graph-census";
  doc["version"] = kFormatVersion;
  doc["g"] = census.g;
  doc["m"] = census.m;
  doc["total"] = census.total();
  ordered_json strata = ordered_json::array();
  for (std::size_t i = 0; i < census.by_nodes.size(); ++i) {
    ordered_json row;
    row["nodes"] = i;
    row["dimension"] = 3 * census.g - 3 + census.m - static_cast<int>(i);
    row["count"] = census.by_nodes[i].size();
    ordered_json graphs = ordered_json::array();
    for (const StableGraph& g : census.by_nodes[i]) graphs.push_back(GraphToJson(g));
    row["graphs"] = std::move(graphs);
    strata.push_back(std::move(row));
  }
  doc["strata"] = std::move(strata);
  return doc;
}

ordered_json GammaCensusToJson(const GammaCensus& census) {
  ordered_json doc;
  doc["format"] = "gamma-census";
  doc["version"] = kFormatVersion;
  doc["g"] = census.g;
  doc["m"] = census.m;
  doc["group"] = GeneratorsToJson(*census.group);
  doc["group_order"] = census.group->order();
  doc["labeled_total"] = census.labeled.total();
  doc["total"] = census.total();
  ordered_json strata = ordered_json::array();
  for (std::size_t i = 0; i < census.by_nodes.size(); ++i) {
    ordered_json row;
    row["nodes"] = i;
    row["labeled"] = census.labeled.by_nodes[i].size();
    row["count"] = census.by_nodes[i].size();
    ordered_json classes = ordered_json::array();
    for (const GammaClass& cls : census.by_nodes[i]) {
      ordered_json entry;
      entry["orbit_size"] = cls.orbit_size();
      entry["stabilizer_order"] = cls.stabilizer_order();
      entry["graph"] = GraphToJson(cls.representative);
      classes.push_back(std::move(entry));
    }
    row["classes"] = std::move(classes);
    strata.push_back(std::move(row));
  }
  doc["strata"] = std::move(strata);
  return doc;
}

ordered_json SplitToJson(const ComponentSplit& split) {
  ordered_json doc;
  doc["format"] = "component-split";
  doc["version"] = kFormatVersion;
  doc["vertex"] = VertexId(split.vertex);
  doc["genus"] = split.genus;
  doc["marks"] = split.component.num_legs();
  doc["original_labels"] = split.original_labels;
  doc["node_labels"] = split.node_labels;
  doc["group"] = split.group ? GeneratorsToJson(*split.group) : ordered_json::array();
  doc["stable"] = split.stability.valid;
  doc["graph"] = GraphToJson(split.component);
  return doc;
}

}  // namespace stablegraphs
