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

// Exhaustive reference for the enumeration and quotient code. Everything is
// recomputed from scratch by trying every vertex permutation, so the results
// do not depend on canonical labelings or refinement.

#ifndef STABLEGRAPHS_TESTS_ORACLE_BRUTE_FORCE_H_
#define STABLEGRAPHS_TESTS_ORACLE_BRUTE_FORCE_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "stablegraphs/graph.h"
#include "stablegraphs/perm.h"

namespace oracle {

struct RawGraph {
  std::vector<int> genus;
  std::vector<std::pair<int, int>> edges;
  // Vertex of leg i + 1.
  std::vector<int> legs;
};

// [V, E, genera..., edge endpoints..., leg vertices...], minimized over all
// vertex relabelings. Two graphs are isomorphic iff their keys agree.
using Key = std::vector<int>;

Key BruteKey(const RawGraph& graph);
Key BruteKey(const stablegraphs::StableGraph& graph);
RawGraph FromStable(const stablegraphs::StableGraph& graph);
stablegraphs::StableGraph ToStable(const RawGraph& graph);
int NodesOf(const Key& key);
RawGraph FromKey(const Key& key);

bool BruteStable(const RawGraph& graph);
bool BruteConnected(const RawGraph& graph);

// Keys of all isomorphism classes of stable graphs of type (g, m), sorted.
std::vector<Key> BruteCensus(int g, int m);

// Leg i moves to gamma(i).
RawGraph RelabelLegs(const RawGraph& graph,
                     const stablegraphs::Permutation& gamma);

// Least key over the group orbit of the graph.
Key BruteGammaKey(const RawGraph& graph, const stablegraphs::PermGroup& group);

// Number of classes of `census` up to relabeling by the group.
std::size_t BruteGammaCount(const std::vector<Key>& census,
                            const stablegraphs::PermGroup& group);

// Elements gamma with gamma . G isomorphic to G.
std::size_t BruteStabilizerOrder(const RawGraph& graph,
                                 const stablegraphs::PermGroup& group);

}  // namespace oracle

#endif  // STABLEGRAPHS_TESTS_ORACLE_BRUTE_FORCE_H_
