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

#include "stablegraphs/gamma.h"

#include <algorithm>
#include <map>
#include <numeric>

namespace stablegraphs {

namespace {

void CheckDegree(const StableGraph& graph, const PermGroup& group) {
  if (graph.num_legs() != group.degree()) {
    throw StructuralError("graph has " + std::to_string(graph.num_legs()) +
                          " legs but the group has degree " +
                          std::to_string(group.degree()));
  }
}

std::vector<Encoding> RelabeledEncodings(const StableGraph& graph,
                                         const std::vector<Permutation>& perms,
                                         Execution execution) {
  std::vector<Encoding> out(perms.size());
  const long long n = static_cast<long long>(perms.size());
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long k = 0; k < n; ++k) {
      out[k] = CanonicalEncoding(graph.RelabelLegs(perms[k]));
    }
  } else {
    for (long long k = 0; k < n; ++k) {
      out[k] = CanonicalEncoding(graph.RelabelLegs(perms[k]));
    }
  }
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Join(std::size_t x, std::size_t y) {
    x = Find(x);
    y = Find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::optional<GammaWitness> GammaEquivalent(const StableGraph& a,
                                            const StableGraph& b,
                                            const PermGroup& group) {
  CheckDegree(a, group);
  CheckDegree(b, group);
  for (const Permutation& gamma : group.elements()) {
    if (auto iso = FindIsomorphism(a.RelabelLegs(gamma), b, true)) {
      return GammaWitness{gamma, *std::move(iso)};
    }
  }
  return std::nullopt;
}

Encoding GammaCanonicalEncoding(const StableGraph& graph,
                                const PermGroup& group, Execution execution) {
  CheckDegree(graph, group);
  std::vector<Encoding> all =
      RelabeledEncodings(graph, group.elements(), execution);
  return *std::min_element(all.begin(), all.end());
}

StableGraph GammaCanonicalForm(const StableGraph& graph,
                               const PermGroup& group) {
  return GraphFromEncoding(GammaCanonicalEncoding(graph, group));
}

std::vector<GammaAutomorphism> GammaAutomorphisms(const StableGraph& graph,
                                                  const PermGroup& group) {
  CheckDegree(graph, group);
  std::vector<GammaAutomorphism> out;
  for (const Permutation& gamma : group.elements()) {
    // phi : gamma . graph -> graph respecting labels carries leg i of the
    // graph to leg gamma(i).
    for (Isomorphism& phi : AllIsomorphisms(graph.RelabelLegs(gamma), graph,
                                            /*respect_leg_labels=*/true)) {
      out.push_back({gamma, std::move(phi)});
    }
  }
  return out;
}

std::vector<Permutation> GammaStabilizer(const StableGraph& graph,
                                         const PermGroup& group,
                                         Execution execution) {
  CheckDegree(graph, group);
  const Encoding self = CanonicalEncoding(graph);
  const std::vector<Encoding> images =
      RelabeledEncodings(graph, group.elements(), execution);
  std::vector<Permutation> out;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (images[k] == self) out.push_back(group.elements()[k]);
  }
  return out;
}

GammaMarkedGraph::GammaMarkedGraph(StableGraph graph,
                                   std::shared_ptr<const PermGroup> group)
    : graph_(std::move(graph)),
      group_(std::move(group)),
      canonical_(GammaCanonicalForm(graph_, *group_)) {}

std::vector<std::vector<int>> GammaMarkedGraph::ClassLabels() const {
  std::vector<std::vector<int>> labels;
  for (int i = 1; i <= graph_.num_legs(); ++i) labels.push_back(group_->Orbit(i));
  return labels;
}

std::size_t GammaCensus::total() const {
  std::size_t n = 0;
  for (const auto& row : by_nodes) n += row.size();
  return n;
}

GammaCensus EnumerateGammaStrata(int g, int m,
                                 std::shared_ptr<const PermGroup> group,
                                 const Bounds& bounds, Execution execution) {
  if (group == nullptr) throw InputError("missing group");
  if (group->degree() != m) {
    throw StructuralError("group degree " + std::to_string(group->degree()) +
                          " does not match m = " + std::to_string(m));
  }
  if (group->order() > bounds.max_group_order) {
    throw SizeError("group order exceeds bound " +
                    std::to_string(bounds.max_group_order));
  }
  GammaCensus census;
  census.g = g;
  census.m = m;
  census.group = group;
  census.labeled = EnumerateStableGraphs(g, m, bounds, execution);
  const std::vector<StableGraph> flat = census.labeled.Flatten();
  std::map<Encoding, std::size_t> index;
  std::vector<Encoding> encodings(flat.size());
  for (std::size_t k = 0; k < flat.size(); ++k) {
    encodings[k] = CanonicalEncoding(flat[k]);
    index.emplace(encodings[k], k);
  }

  // The orbit of a class is its component under the generators.
  const std::vector<Permutation>& gens = group->generators();
  std::vector<std::vector<Encoding>> images(flat.size());
  const long long n = static_cast<long long>(flat.size());
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long k = 0; k < n; ++k) {
      images[k] = RelabeledEncodings(flat[k], gens, Execution::kSerial);
    }
  } else {
    for (long long k = 0; k < n; ++k) {
      images[k] = RelabeledEncodings(flat[k], gens, Execution::kSerial);
    }
  }
  DisjointSets sets(flat.size());
  for (std::size_t k = 0; k < flat.size(); ++k) {
    for (const Encoding& image : images[k]) sets.Join(k, index.at(image));
  }

  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t k = 0; k < flat.size(); ++k) orbits[sets.Find(k)].push_back(k);

  census.by_nodes.resize(census.labeled.by_nodes.size());
  for (auto& [root, members] : orbits) {
    std::size_t best = members.front();
    for (std::size_t k : members) {
      if (encodings[k] < encodings[best]) best = k;
    }
    GammaClass cls;
    cls.representative = flat[best];
    cls.orbit = members;
    cls.stabilizer = GammaStabilizer(flat[best], *group, execution);
    census.by_nodes.at(flat[best].num_edges()).push_back(std::move(cls));
  }
  for (auto& row : census.by_nodes) {
    std::sort(row.begin(), row.end(), [](const GammaClass& x, const GammaClass& y) {
      return CanonicalEncoding(x.representative) <
             CanonicalEncoding(y.representative);
    });
  }
  return census;
}

std::vector<GammaClass> QuotientFibers(const GammaCensus& census) {
  std::vector<GammaClass> out;
  for (const auto& row : census.by_nodes) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace stablegraphs
