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

// Labeled and quotient strata tables, and the per-vertex component census.

#ifndef STABLEGRAPHS_STRATA_H_
#define STABLEGRAPHS_STRATA_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "stablegraphs/gamma.h"
#include "stablegraphs/graph.h"

namespace stablegraphs {

struct QuotientRow {
  int nodes = 0;
  std::size_t labeled = 0;
  std::size_t gamma = 0;
  // Per Gamma-class, in class order.
  std::vector<std::size_t> orbit_sizes;
  std::vector<std::size_t> stabilizer_orders;
};

struct QuotientTable {
  int g = 0;
  int m = 0;
  std::shared_ptr<const PermGroup> group;
  std::vector<QuotientRow> rows;

  // Orbit sizes sum to the labeled count in every row, and every class
  // satisfies |orbit| * |stabilizer| = |Gamma|.
  bool Consistent() const;
  // Header "g=<g> m=<m> group=<generators> order=<|Gamma|>", then one line
  // "i=<k>: labeled=<a> gamma=<b> orbits=[...]" per node count.
  std::string ToString() const;
};

QuotientTable QuotientTableFromCensus(const GammaCensus& census);
QuotientTable BuildQuotientTable(int g, int m,
                                 std::shared_ptr<const PermGroup> group,
                                 const Bounds& bounds = Bounds{},
                                 Execution execution = Execution::kParallel);

// SplitComponent at every vertex.
std::vector<ComponentSplit> ComponentCensus(const StableGraph& graph,
                                            const Bounds& bounds = Bounds{});

}  // namespace stablegraphs

#endif  // STABLEGRAPHS_STRATA_H_
