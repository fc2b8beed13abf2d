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

// Census of stable graphs of genus g with m labeled legs, one list per node
// count.

#ifndef STABLEGRAPHS_ENUMERATE_H_
#define STABLEGRAPHS_ENUMERATE_H_

#include <cstddef>
#include <vector>

#include "stablegraphs/canonical.h"
#include "stablegraphs/graph.h"

namespace stablegraphs {

// Serial is the reference path; parallel splits the canonicalization work
// over OpenMP threads and merges by sorted encoding, so both give identical
// results.
enum class Execution { kSerial, kParallel };

struct StratumCensus {
  int g = 0;
  int m = 0;
  // by_nodes[i] holds the canonical graphs with exactly i edges, sorted by
  // encoding, for i = 0, ..., 3g - 3 + m.
  std::vector<std::vector<StableGraph>> by_nodes;

  std::size_t total() const;
  std::vector<StableGraph> Flatten() const;
};

// InputError unless 2g - 2 + m > 0; SizeError when m or 3g - 3 + m exceed
// the bounds.
void CheckCensusBounds(int g, int m, const Bounds& bounds);

StratumCensus EnumerateStableGraphs(int g, int m,
                                    const Bounds& bounds = Bounds{},
                                    Execution execution = Execution::kParallel);

// Leg-free multigraph skeletons (genus labels plus edges) that admit a stable
// leg distribution, deduplicated up to isomorphism. Exposed for benchmarks.
std::vector<StableGraph> EnumerateSkeletons(int g, int m);

// Canonical encodings of `graphs`, one per input.
std::vector<Encoding> CanonicalEncodings(const std::vector<StableGraph>& graphs,
                                         Execution execution);

}  // namespace stablegraphs

#endif  // STABLEGRAPHS_ENUMERATE_H_
