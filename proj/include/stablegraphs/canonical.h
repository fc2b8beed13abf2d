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

// Canonical forms and isomorphisms of stable graphs.
//
// The canonical form minimizes an integer encoding over all vertex orderings
// reachable by individualization and color refinement, where colors start
// from (genus, legs, loops, valence). Isomorphisms are found by a separate
// direct backtracking search so that the two can be checked against each
// other.

#ifndef STABLEGRAPHS_CANONICAL_H_
#define STABLEGRAPHS_CANONICAL_H_

#include <optional>
#include <vector>

#include "stablegraphs/graph.h"

namespace stablegraphs {

// [V, m, E, (genus, #legs, legs...) per vertex, (a, b) per edge with a <= b,
// edges sorted]. In kCountOnly mode the leg labels are omitted.
using Encoding = std::vector<int>;

enum class LegMode { kLabeled, kCountOnly };

// position[v] is the canonical index of vertex v.
struct CanonicalLabeling {
  std::vector<int> position;
  Encoding encoding;
};

CanonicalLabeling ComputeCanonicalLabeling(const StableGraph& graph,
                                           LegMode mode = LegMode::kLabeled);
Encoding CanonicalEncoding(const StableGraph& graph,
                           LegMode mode = LegMode::kLabeled);
StableGraph CanonicalForm(const StableGraph& graph);
// Inverse of the labeled encoding.
StableGraph GraphFromEncoding(const Encoding& encoding);

// Vertex and half-edge bijections from a source graph to a target graph.
struct Isomorphism {
  std::vector<int> vertex_map;
  std::vector<int> half_edge_map;

  static Isomorphism Identity(const StableGraph& graph);
  // (this * other)(x) = this(other(x)).
  Isomorphism Compose(const Isomorphism& other) const;
  Isomorphism Inverse() const;
  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
  friend auto operator<=>(const Isomorphism&, const Isomorphism&) = default;
};

// First isomorphism in lexicographic order of vertex maps, or nullopt. With
// respect_leg_labels the map must carry leg i to leg i; otherwise only the
// number of legs at each vertex must match.
std::optional<Isomorphism> FindIsomorphism(const StableGraph& a,
                                           const StableGraph& b,
                                           bool respect_leg_labels);

// Every isomorphism, including permutations of parallel edges and flips of
// loops, in lexicographic order.
std::vector<Isomorphism> AllIsomorphisms(const StableGraph& a,
                                         const StableGraph& b,
                                         bool respect_leg_labels);

// True when `iso` is a structure-preserving bijection a -> b.
bool IsIsomorphism(const StableGraph& a, const StableGraph& b,
                   const Isomorphism& iso, bool respect_leg_labels);

}  // namespace stablegraphs

#endif  // STABLEGRAPHS_CANONICAL_H_
