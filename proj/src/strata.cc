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

#include "stablegraphs/strata.h"

#include <numeric>

namespace stablegraphs {

bool QuotientTable::Consistent() const {
  for (const QuotientRow& row : rows) {
    if (row.orbit_sizes.size() != row.gamma ||
        row.stabilizer_orders.size() != row.gamma) {
      return false;
    }
    const std::size_t sum = std::accumulate(row.orbit_sizes.begin(),
                                            row.orbit_sizes.end(),
                                            std::size_t{0});
    if (sum != row.labeled) return false;
    for (std::size_t k = 0; k < row.gamma; ++k) {
      if (row.orbit_sizes[k] * row.stabilizer_orders[k] != group->order()) {
        return false;
      }
    }
  }
  return true;
}

std::string QuotientTable::ToString() const {
  std::string out = "g=" + std::to_string(g) + " m=" + std::to_string(m) +
                    " group=" + FormatGenerators(group->generators()) +
                    " order=" + std::to_string(group->order()) + "\n";
  for (const QuotientRow& row : rows) {
    out += "i=" + std::to_string(row.nodes) +
           ": labeled=" + std::to_string(row.labeled) +
           " gamma=" + std::to_string(row.gamma) + " orbits=[";
    for (std::size_t k = 0; k < row.orbit_sizes.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(row.orbit_sizes[k]);
    }
    out += "]\n";
  }
  return out;
}

QuotientTable QuotientTableFromCensus(const GammaCensus& census) {
  QuotientTable table;
  table.g = census.g;
  table.m = census.m;
  table.group = census.group;
  for (std::size_t i = 0; i < census.by_nodes.size(); ++i) {
    QuotientRow row;
    row.nodes = static_cast<int>(i);
    row.labeled = census.labeled.by_nodes.at(i).size();
    row.gamma = census.by_nodes[i].size();
    for (const GammaClass& cls : census.by_nodes[i]) {
      row.orbit_sizes.push_back(cls.orbit_size());
      row.stabilizer_orders.push_back(cls.stabilizer_order());
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

QuotientTable BuildQuotientTable(int g, int m,
                                 std::shared_ptr<const PermGroup> group,
                                 const Bounds& bounds, Execution execution) {
  return QuotientTableFromCensus(
      EnumerateGammaStrata(g, m, std::move(group), bounds, execution));
}

std::vector<ComponentSplit> ComponentCensus(const StableGraph& graph,
                                            const Bounds& bounds) {
  std::vector<ComponentSplit> out;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    out.push_back(SplitComponent(graph, v, bounds));
  }
  return out;
}

}  // namespace stablegraphs
