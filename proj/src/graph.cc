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

#include "stablegraphs/graph.h"

#include <algorithm>
#include <numeric>

namespace stablegraphs {

StableGraph::StableGraph(std::vector<int> vertex_genus, std::vector<Edge> edges,
                         std::vector<int> leg_vertex)
    : vertex_genus_(std::move(vertex_genus)),
      edges_(std::move(edges)),
      leg_vertex_(std::move(leg_vertex)) {
  const int n = num_vertices();
  if (n == 0) throw InputError("graph has no vertices");
  for (int v = 0; v < n; ++v) {
    if (vertex_genus_[v] < 0) {
      throw InputError("vertex v" + std::to_string(v) + " has negative genus");
    }
  }
  valence_.assign(n, 0);
  legs_.assign(n, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.a < 0 || edge.a >= n || edge.b < 0 || edge.b >= n) {
      throw InputError("edge " + std::to_string(e) +
                       " references a missing vertex");
    }
    ++valence_[edge.a];
    ++valence_[edge.b];
  }
  for (int label = 1; label <= num_legs(); ++label) {
    const int v = leg_vertex_[label - 1];
    if (v < 0 || v >= n) {
      throw InputError("leg " + std::to_string(label) +
                       " references a missing vertex");
    }
    legs_[v].push_back(label);
  }
  if (!IsConnected(n, edges_)) throw InputError("graph is disconnected");
}

int StableGraph::genus() const {
  const int sum = std::accumulate(vertex_genus_.begin(), vertex_genus_.end(), 0);
  return sum + num_edges() - num_vertices() + 1;
}

int StableGraph::stratum_dim() const {
  return 3 * genus() - 3 + num_legs() - num_edges();
}

int StableGraph::num_loops(int v) const {
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(),
      [v](const Edge& e) { return e.a == v && e.b == v; }));
}

std::vector<int> StableGraph::legs_at(int v) const { return legs_.at(v); }

std::vector<int> StableGraph::half_edges_at(int v) const {
  std::vector<int> out;
  for (int h = 0; h < num_half_edges(); ++h) {
    if (half_edge_vertex(h) == v) out.push_back(h);
  }
  return out;
}

StableGraph StableGraph::RelabelLegs(const Permutation& gamma) const {
  if (gamma.degree() != num_legs()) {
    throw StructuralError("permutation degree " +
                          std::to_string(gamma.degree()) +
                          " does not match leg count " +
                          std::to_string(num_legs()));
  }
  return StableGraph(vertex_genus_, edges_,
                     Act(gamma, std::span<const int>(leg_vertex_)));
}

bool IsConnected(int num_vertices, std::span<const Edge> edges) {
  if (num_vertices <= 0) return false;
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = num_vertices;
  for (const Edge& e : edges) {
    const int ra = find(e.a);
    const int rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

StabilityReport CheckStability(const StableGraph& graph) {
  StabilityReport report;
  report.global_bound = 2 * graph.genus() - 2 + graph.num_legs() > 0;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (graph.vertex_genus(v) == 0 && graph.special_points(v) < 3) {
      report.violating_vertices.push_back(v);
    }
  }
  report.valid = report.global_bound && report.violating_vertices.empty();
  return report;
}

bool IsStable(const StableGraph& graph) { return CheckStability(graph).valid; }

std::string HilbertNumerology::PolynomialString() const {
  std::string out = "P(t)=" + std::to_string(t_coefficient) + "t";
  if (constant_term > 0) out += "+" + std::to_string(constant_term);
  if (constant_term < 0) out += std::to_string(constant_term);
  return out;
}

std::string HilbertNumerology::ToString() const {
  return PolynomialString() + " N=" + std::to_string(projective_dimension) +
         " rank=" + std::to_string(rank);
}

HilbertNumerology ComputeHilbertNumerology(int g, int n, int m) {
  if (g < 0 || m < 0) throw InputError("g and m must be non-negative");
  if (n < 3) throw InputError("n must be at least 3, got " + std::to_string(n));
  if (2 * g - 2 + m <= 0) {
    throw InputError("(g, m) = (" + std::to_string(g) + ", " +
                     std::to_string(m) + ") violates 2g - 2 + m > 0");
  }
  HilbertNumerology h;
  h.g = g;
  h.n = n;
  h.m = m;
  const long long degree = static_cast<long long>(2 * g - 2 + m) * n;
  h.t_coefficient = degree;
  h.constant_term = 1 - static_cast<long long>(g);
  h.projective_dimension = degree - g;
  h.rank = degree - g + 1;
  return h;
}

ComponentSplit SplitComponent(const StableGraph& graph, int vertex,
                              const Bounds& bounds) {
  if (vertex < 0 || vertex >= graph.num_vertices()) {
    throw InputError("vertex " + std::to_string(vertex) + " out of range");
  }
  ComponentSplit split;
  split.vertex = vertex;
  split.genus = graph.vertex_genus(vertex);
  split.original_labels = graph.legs_at(vertex);
  const int own = static_cast<int>(split.original_labels.size());
  const int total = own + graph.valence(vertex);
  for (int label = own + 1; label <= total; ++label) {
    split.node_labels.push_back(label);
  }
  split.component = StableGraph({split.genus}, {}, std::vector<int>(total, 0));
  if (total > 0) {
    split.group =
        PermGroup::SymmetricOn(total, split.node_labels, bounds.max_group_order);
  }
  split.stability = CheckStability(split.component);
  return split;
}

}  // namespace stablegraphs
