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

// Stable graphs whose leg labels matter only up to a permutation group.
//
// Gamma acts on a graph by relabeling legs (RelabelLegs). Two graphs are
// Gamma-equivalent when some gamma . a is isomorphic to b respecting labels;
// the quotient census groups the labeled census into Gamma-orbits.

#ifndef STABLEGRAPHS_GAMMA_H_
#define STABLEGRAPHS_GAMMA_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "stablegraphs/canonical.h"
#include "stablegraphs/enumerate.h"
#include "stablegraphs/perm.h"

namespace stablegraphs {

struct GammaWitness {
  Permutation gamma;
  // From a.RelabelLegs(gamma) to b, respecting labels.
  Isomorphism isomorphism;
};

// Throws StructuralError when the group degree differs from either leg count.
std::optional<GammaWitness> GammaEquivalent(const StableGraph& a,
                                            const StableGraph& b,
                                            const PermGroup& group);

// min over gamma of CanonicalEncoding(gamma . graph).
Encoding GammaCanonicalEncoding(const StableGraph& graph,
                                const PermGroup& group,
                                Execution execution = Execution::kSerial);
StableGraph GammaCanonicalForm(const StableGraph& graph,
                               const PermGroup& group);

// A pair (gamma, phi) where phi maps the graph onto itself carrying leg i to
// leg gamma(i). The pairs form a group under componentwise composition.
struct GammaAutomorphism {
  Permutation gamma;
  Isomorphism map;
  friend bool operator==(const GammaAutomorphism&,
                         const GammaAutomorphism&) = default;
};

std::vector<GammaAutomorphism> GammaAutomorphisms(const StableGraph& graph,
                                                  const PermGroup& group);

// Elements of `group` fixing the isomorphism class of `graph`.
std::vector<Permutation> GammaStabilizer(
    const StableGraph& graph, const PermGroup& group,
    Execution execution = Execution::kParallel);

class GammaMarkedGraph {
 public:
  GammaMarkedGraph(StableGraph graph, std::shared_ptr<const PermGroup> group);

  const StableGraph& graph() const { return graph_; }
  const PermGroup& group() const { return *group_; }
  const StableGraph& canonical() const { return canonical_; }
  // Orbit [i] of each leg label i, indexed by i - 1.
  std::vector<std::vector<int>> ClassLabels() const;

  friend bool SameClass(const GammaMarkedGraph& x, const GammaMarkedGraph& y) {
    return x.canonical_ == y.canonical_;
  }

 private:
  StableGraph graph_;
  std::shared_ptr<const PermGroup> group_;
  StableGraph canonical_;
};

// One Gamma-orbit of the labeled census.
struct GammaClass {
  StableGraph representative;
  // Indices into StratumCensus::Flatten() of the labeled classes in the orbit.
  std::vector<std::size_t> orbit;
  std::vector<Permutation> stabilizer;

  std::size_t orbit_size() const { return orbit.size(); }
  std::size_t stabilizer_order() const { return stabilizer.size(); }
};

struct GammaCensus {
  int g = 0;
  int m = 0;
  std::shared_ptr<const PermGroup> group;
  StratumCensus labeled;
  // by_nodes[i] lists the classes whose graphs have i edges, sorted by the
  // representative's encoding.
  std::vector<std::vector<GammaClass>> by_nodes;

  std::size_t total() const;
};

// Orbit fusion on the labeled census: classes are joined along the action of
// each generator, representatives are the minimal encodings, and
// stabilizers are found by scanning the group.
GammaCensus EnumerateGammaStrata(int g, int m,
                                 std::shared_ptr<const PermGroup> group,
                                 const Bounds& bounds = Bounds{},
                                 Execution execution = Execution::kParallel);

// The classes of EnumerateGammaStrata in node order.
std::vector<GammaClass> QuotientFibers(const GammaCensus& census);

}  // namespace stablegraphs

#endif  // STABLEGRAPHS_GAMMA_H_
