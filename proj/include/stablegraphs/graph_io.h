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

// JSON documents for graphs, censuses, component splits and quotient
// censuses. Keys are written in a fixed order and contain no floating point,
// so equal inputs serialize to identical bytes.
//
//   {
//     "format": "stable-graph",
//     "version": 1,
//     "vertices": [{"id": "v0", "genus": 1}, {"id": "v1", "genus": 0}],
//     "edges": ["v0.h0-v1.h0", "v1.h1-v1.h2"],
//     "legs": ["1@v1"]
//   }
//
// Vertex ids are v0, v1, ... in order. "vI.hA" is the A-th half-edge at vertex
// I; on output half-edges are numbered in edge order.

#ifndef STABLEGRAPHS_GRAPH_IO_H_
#define STABLEGRAPHS_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "stablegraphs/gamma.h"
#include "stablegraphs/graph.h"

namespace stablegraphs {

inline constexpr int kFormatVersion = 1;

nlohmann::ordered_json GraphToJson(const StableGraph& graph);
// Throws InputError naming the offending field.
StableGraph GraphFromJson(const nlohmann::json& doc);

// Pretty-printed with a trailing newline.
std::string WriteGraph(const StableGraph& graph);
StableGraph ReadGraph(std::string_view text);

nlohmann::ordered_json GeneratorsToJson(const PermGroup& group);
nlohmann::ordered_json CensusToJson(const StratumCensus& census);
nlohmann::ordered_json GammaCensusToJson(const GammaCensus& census);
nlohmann::ordered_json SplitToJson(const ComponentSplit& split);

std::string Dump(const nlohmann::ordered_json& doc);

}  // namespace stablegraphs

#endif  // STABLEGRAPHS_GRAPH_IO_H_
