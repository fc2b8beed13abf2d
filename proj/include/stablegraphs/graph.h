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

// Dual graphs of nodal curves with labeled marked points.
//
// Vertices carry genus labels. Edge e joins edges()[e].a and edges()[e].b and
// owns the half-edges 2e (at a) and 2e + 1 (at b); a loop has a == b. Legs are
// the marked points: leg i (1-based) is attached to leg_vertex(i).

#ifndef STABLEGRAPHS_GRAPH_H_
#define STABLEGRAPHS_GRAPH_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stablegraphs/perm.h"

namespace stablegraphs {

struct Edge {
  int a = 0;
  int b = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class StableGraph {
 public:
  StableGraph() = default;
  // Throws InputError on negative genera, dangling edges or legs, or a
  // disconnected graph.
  StableGraph(std::vector<int> vertex_genus, std::vector<Edge> edges,
              std::vector<int> leg_vertex);

  int num_vertices() const { return static_cast<int>(vertex_genus_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_legs() const { return static_cast<int>(leg_vertex_.size()); }
  int num_half_edges() const { return 2 * num_edges(); }

  int vertex_genus(int v) const { return vertex_genus_[v]; }
  std::span<const int> vertex_genera() const { return vertex_genus_; }
  std::span<const Edge> edges() const { return edges_; }
  // Vertex carrying the 1-based leg label.
  int leg_vertex(int label) const { return leg_vertex_[label - 1]; }
  std::span<const int> leg_vertices() const { return leg_vertex_; }
  int half_edge_vertex(int h) const {
    return h % 2 == 0 ? edges_[h / 2].a : edges_[h / 2].b;
  }

  // Sum of vertex genera plus the first Betti number E - V + 1.
  int genus() const;
  int num_nodes() const { return num_edges(); }
  // 3g - 3 + m - #edges.
  int stratum_dim() const;

  // Incident half-edges; a loop counts twice.
  int valence(int v) const { return valence_[v]; }
  int num_loops(int v) const;
  std::vector<int> legs_at(int v) const;
  int special_points(int v) const {
    return valence(v) + static_cast<int>(legs_.at(v).size());
  }
  // Half-edges at v in increasing id order; the local index of a half-edge is
  // its position here.
  std::vector<int> half_edges_at(int v) const;

  // Leg gamma(i) goes where leg i was.
  StableGraph RelabelLegs(const Permutation& gamma) const;

  // Presentation equality, not isomorphism.
  friend bool operator==(const StableGraph& x, const StableGraph& y) {
    return x.vertex_genus_ == y.vertex_genus_ && x.edges_ == y.edges_ &&
           x.leg_vertex_ == y.leg_vertex_;
  }

 private:
  std::vector<int> vertex_genus_;
  std::vector<Edge> edges_;
  std::vector<int> leg_vertex_;
  std::vector<int> valence_;
  std::vector<std::vector<int>> legs_;
};

// True when the edges join all `num_vertices` vertices.
bool IsConnected(int num_vertices, std::span<const Edge> edges);

struct StabilityReport {
  bool valid = false;
  // 2g - 2 + m > 0.
  bool global_bound = false;
  // Genus-0 vertices with fewer than three special points.
  std::vector<int> violating_vertices;
};

StabilityReport CheckStability(const StableGraph& graph);

// Rational vertices need at least three special points; 2g - 2 + m > 0.
bool IsStable(const StableGraph& graph);

// Embedding numerology for pluricanonical degree n:
//   P(t) = (2g - 2 + m) n t - g + 1,  N = (2g - 2 + m) n - g,  rank = N + 1.
struct HilbertNumerology {
  int g = 0;
  int n = 0;
  int m = 0;
  long long t_coefficient = 0;
  long long constant_term = 0;
  long long projective_dimension = 0;  // N
  long long rank = 0;

  long long Evaluate(long long t) const {
    return t_coefficient * t + constant_term;
  }
  std::string PolynomialString() const;
  // "P(t)=6t-1 N=4 rank=5".
  std::string ToString() const;
};

// Throws InputError unless n >= 3 and 2g - 2 + m > 0.
HilbertNumerology ComputeHilbertNumerology(int g, int n, int m);

// Component of `graph` at `vertex`, viewed on its own: its own legs keep their
// relative order as labels 1..k, and every incident half-edge becomes a new leg
// with labels k+1..k+e that are interchangeable under the full symmetric group.
struct ComponentSplit {
  int vertex = 0;
  int genus = 0;
  StableGraph component;
  // Labels in the original graph of the component's first k legs.
  std::vector<int> original_labels;
  // The interchangeable labels k+1..k+e.
  std::vector<int> node_labels;
  // Symmetric group on node_labels; empty when the component has no legs.
  std::optional<PermGroup> group;
  StabilityReport stability;
};

ComponentSplit SplitComponent(const StableGraph& graph, int vertex,
                              const Bounds& bounds = Bounds{});

}  // namespace stablegraphs

#endif  // STABLEGRAPHS_GRAPH_H_
