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

#include "stablegraphs/canonical.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "brute_force.h"
#include "presentations.h"
#include "stablegraphs/enumerate.h"

namespace stablegraphs {
namespace {

// Legs {a, b} on one vertex and the others on a second vertex.
StableGraph OneNodeSplit(std::vector<int> first) {
  std::vector<int> legs(4, 1);
  for (int label : first) legs[label - 1] = 0;
  return StableGraph({0, 0}, {{0, 1}}, legs);
}

// Half-edge automorphisms counted by trying every permutation of the
// half-edges.
std::size_t BruteAutomorphismCount(const StableGraph& graph) {
  if (graph.num_vertices() == 1 && graph.num_edges() == 0) return 1;
  const int n = graph.num_half_edges();
  std::vector<int> tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    std::vector<int> f(graph.num_vertices(), -1);
    for (int h = 0; h < n && ok; ++h) {
      ok = tau[h ^ 1] == (tau[h] ^ 1);
      const int from = graph.half_edge_vertex(h);
      const int to = graph.half_edge_vertex(tau[h]);
      if (f[from] == -1) f[from] = to;
      ok = ok && f[from] == to;
    }
    if (!ok) continue;
    std::vector<int> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < graph.num_vertices() && ok; ++v) {
      ok = sorted[v] == v && graph.vertex_genus(v) == graph.vertex_genus(f[v]);
    }
    for (int label = 1; label <= graph.num_legs() && ok; ++label) {
      ok = f[graph.leg_vertex(label)] == graph.leg_vertex(label);
    }
    count += ok;
  } while (std::next_permutation(tau.begin(), tau.end()));
  return count;
}

TEST(IsomorphismTest, SelfGivesIdentity) {
  const StableGraph graph = OneNodeSplit({1, 2});
  const auto iso = FindIsomorphism(graph, graph, true);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(*iso, Isomorphism::Identity(graph));
}

TEST(IsomorphismTest, DifferentSplitsAreNotIsomorphic) {
  EXPECT_FALSE(FindIsomorphism(OneNodeSplit({1, 2}), OneNodeSplit({1, 3}), true));
  EXPECT_TRUE(FindIsomorphism(OneNodeSplit({1, 2}), OneNodeSplit({1, 3}), false));
}

TEST(IsomorphismTest, OppositeVertexOrderSwapsVertices) {
  const auto iso = FindIsomorphism(OneNodeSplit({1, 2}), OneNodeSplit({3, 4}), true);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(iso->vertex_map, (std::vector<int>{1, 0}));
  EXPECT_TRUE(IsIsomorphism(OneNodeSplit({1, 2}), OneNodeSplit({3, 4}), *iso, true));
}

TEST(IsomorphismTest, ComposeAndInverse) {
  std::mt19937 rng(3);
  const StratumCensus census = EnumerateStableGraphs(1, 2);
  for (const StableGraph& graph : census.Flatten()) {
    const StableGraph b = fixtures::RandomPresentation(rng, graph);
    const StableGraph c = fixtures::RandomPresentation(rng, graph);
    const auto f = FindIsomorphism(graph, b, true);
    const auto g = FindIsomorphism(b, c, true);
    ASSERT_TRUE(f && g);
    EXPECT_TRUE(IsIsomorphism(graph, c, g->Compose(*f), true));
    EXPECT_TRUE(IsIsomorphism(b, graph, f->Inverse(), true));
    EXPECT_EQ(f->Compose(f->Inverse()), Isomorphism::Identity(b));
  }
}

TEST(AutomorphismTest, CountsMatchExhaustiveHalfEdgeSearch) {
  for (auto [g, m] : std::vector<std::pair<int, int>>{{0, 4}, {0, 5}, {1, 1}, {1, 2}, {2, 0}}) {
    for (const StableGraph& graph : EnumerateStableGraphs(g, m).Flatten()) {
      const auto autos = AllIsomorphisms(graph, graph, true);
      EXPECT_EQ(autos.size(), BruteAutomorphismCount(graph));
      EXPECT_TRUE(std::is_sorted(autos.begin(), autos.end()));
      std::set<Isomorphism> group(autos.begin(), autos.end());
      for (const Isomorphism& a : autos) {
        ASSERT_TRUE(IsIsomorphism(graph, graph, a, true));
        for (const Isomorphism& b : autos) ASSERT_TRUE(group.count(a.Compose(b)));
      }
    }
  }
}

TEST(AutomorphismTest, GenusTwoThetaGraph) {
  // Three parallel edges: S3 on the edges times the swap of the two ends.
  const StableGraph theta({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {});
  EXPECT_EQ(AllIsomorphisms(theta, theta, true).size(), 12u);
  // Two loops at one vertex: swap the loops, flip each one.
  const StableGraph figure_eight({0}, {{0, 0}, {0, 0}}, {});
  EXPECT_EQ(AllIsomorphisms(figure_eight, figure_eight, true).size(), 8u);
}

TEST(CanonicalFormTest, IdempotentOnCanonicalInput) {
  for (const StableGraph& graph : EnumerateStableGraphs(0, 5).Flatten()) {
    EXPECT_EQ(CanonicalForm(graph), graph);
  }
}

TEST(CanonicalFormTest, PresentationsOfOneSplitAgree) {
  EXPECT_EQ(CanonicalForm(OneNodeSplit({1, 2})), CanonicalForm(OneNodeSplit({3, 4})));
}

TEST(CanonicalFormTest, RandomRelabelingsOfGenusOneEntryAgree) {
  std::mt19937 rng(11);
  for (const StableGraph& graph : EnumerateStableGraphs(1, 2).Flatten()) {
    const StableGraph canon = CanonicalForm(graph);
    for (int trial = 0; trial < 50; ++trial) {
      ASSERT_EQ(CanonicalForm(fixtures::RandomPresentation(rng, graph)), canon);
    }
  }
}

TEST(CanonicalFormTest, AgreesWithIsomorphismSearchAndOracle) {
  std::mt19937 rng(5);
  for (auto [g, m] : std::vector<std::pair<int, int>>{{0, 4}, {0, 5}, {1, 1}, {1, 2}}) {
    std::vector<StableGraph> items;
    for (const StableGraph& graph : EnumerateStableGraphs(g, m).Flatten()) {
      items.push_back(graph);
      items.push_back(fixtures::RandomPresentation(rng, graph));
    }
    for (const StableGraph& a : items) {
      for (const StableGraph& b : items) {
        const bool same_form = CanonicalForm(a) == CanonicalForm(b);
        ASSERT_EQ(same_form, FindIsomorphism(a, b, true).has_value());
        ASSERT_EQ(same_form, oracle::BruteKey(a) == oracle::BruteKey(b));
      }
    }
  }
}

TEST(CanonicalFormTest, CountOnlyModeForgetsLabels) {
  EXPECT_EQ(CanonicalEncoding(OneNodeSplit({1, 2}), LegMode::kCountOnly),
            CanonicalEncoding(OneNodeSplit({1, 3}), LegMode::kCountOnly));
  EXPECT_NE(CanonicalEncoding(OneNodeSplit({1, 2})),
            CanonicalEncoding(OneNodeSplit({1, 3})));
}

TEST(CanonicalFormTest, EncodingRoundTrips) {
  for (const StableGraph& graph : EnumerateStableGraphs(2, 1).Flatten()) {
    EXPECT_EQ(GraphFromEncoding(CanonicalEncoding(graph)), graph);
  }
}

TEST(CanonicalLabelingTest, PositionIsAPermutation) {
  std::mt19937 rng(9);
  for (const StableGraph& graph : EnumerateStableGraphs(2, 0).Flatten()) {
    const CanonicalLabeling labeling =
        ComputeCanonicalLabeling(fixtures::RandomPresentation(rng, graph));
    std::vector<int> sorted = labeling.position;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < graph.num_vertices(); ++v) EXPECT_EQ(sorted[v], v);
    EXPECT_EQ(labeling.encoding, CanonicalEncoding(graph));
  }
}

}  // namespace
}  // namespace stablegraphs
