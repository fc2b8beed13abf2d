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

#include "stablegraphs/enumerate.h"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace stablegraphs {

namespace {

constexpr std::size_t kChunk = 1 << 14;

// Genus-0 vertices need 3 - valence legs.
std::vector<int> LegDeficits(const StableGraph& skeleton) {
  std::vector<int> need(skeleton.num_vertices(), 0);
  for (int v = 0; v < skeleton.num_vertices(); ++v) {
    if (skeleton.vertex_genus(v) == 0) {
      need[v] = std::max(0, 3 - skeleton.valence(v));
    }
  }
  return need;
}

void ForEachGenusSequence(int vertices, int max_sum,
                          const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> seq;
  std::function<void(int, int)> rec = [&](int cap, int left) {
    if (static_cast<int>(seq.size()) == vertices) {
      f(seq);
      return;
    }
    for (int gv = std::min(cap, left); gv >= 0; --gv) {
      seq.push_back(gv);
      rec(gv, left - gv);
      seq.pop_back();
    }
  };
  rec(max_sum, max_sum);
}

// Calls f with every leg map meeting the deficits, labels assigned in order.
void ForEachLegMap(int m, const std::vector<int>& need,
                   const std::function<void(const std::vector<int>&)>& f) {
  const int n = static_cast<int>(need.size());
  std::vector<int> missing = need;
  int missing_total = 0;
  for (int k : need) missing_total += k;
  std::vector<int> legs(m, -1);
  std::function<void(int)> rec = [&](int label) {
    if (label == m) {
      f(legs);
      return;
    }
    const int left = m - label;
    for (int v = 0; v < n; ++v) {
      const bool fills = missing[v] > 0;
      // Unfilled deficits must still fit in the remaining labels.
      if (!fills && missing_total >= left) continue;
      legs[label] = v;
      if (fills) {
        --missing[v];
        --missing_total;
      }
      rec(label + 1);
      if (fills) {
        ++missing[v];
        ++missing_total;
      }
    }
  };
  rec(0);
}

void EncodeSerial(const std::vector<StableGraph>& graphs,
                  std::vector<Encoding>& out) {
  out.resize(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out[i] = CanonicalEncoding(graphs[i]);
  }
}

void EncodeParallel(const std::vector<StableGraph>& graphs,
                    std::vector<Encoding>& out) {
  out.resize(graphs.size());
  const long long n = static_cast<long long>(graphs.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < n; ++i) {
    out[i] = CanonicalEncoding(graphs[i]);
  }
}

}  // namespace

std::size_t StratumCensus::total() const {
  std::size_t n = 0;
  for (const auto& row : by_nodes) n += row.size();
  return n;
}

std::vector<StableGraph> StratumCensus::Flatten() const {
  std::vector<StableGraph> all;
  for (const auto& row : by_nodes) all.insert(all.end(), row.begin(), row.end());
  return all;
}

void CheckCensusBounds(int g, int m, const Bounds& bounds) {
  if (g < 0 || m < 0) throw InputError("g and m must be non-negative");
  if (2 * g - 2 + m <= 0) {
    throw InputError("(g, m) = (" + std::to_string(g) + ", " +
                     std::to_string(m) + ") violates 2g - 2 + m > 0");
  }
  if (m > bounds.max_degree) {
    throw SizeError("m = " + std::to_string(m) + " exceeds bound " +
                    std::to_string(bounds.max_degree));
  }
  if (3 * g - 3 + m > bounds.max_dimension) {
    throw SizeError("3g - 3 + m = " + std::to_string(3 * g - 3 + m) +
                    " exceeds bound " + std::to_string(bounds.max_dimension));
  }
}

std::vector<StableGraph> EnumerateSkeletons(int g, int m) {
  std::vector<StableGraph> skeletons;
  std::set<Encoding> seen;
  // Every vertex contributes at least 1 to 2g - 2 + m.
  const int max_vertices = std::max(1, 2 * g - 2 + m);
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<Edge> pairs;
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) pairs.push_back({a, b});
    }
    ForEachGenusSequence(n, g, [&](const std::vector<int>& genera) {
      int sum = 0;
      for (int gv : genera) sum += gv;
      const int num_edges = g - sum + n - 1;
      std::vector<Edge> edges;
      std::vector<int> valence(n, 0);
      std::function<void(std::size_t)> rec = [&](std::size_t first) {
        if (static_cast<int>(edges.size()) == num_edges) {
          int deficit = 0;
          for (int v = 0; v < n; ++v) {
            if (genera[v] == 0) deficit += std::max(0, 3 - valence[v]);
          }
          if (deficit > m || !IsConnected(n, edges)) return;
          StableGraph skeleton(genera, edges, {});
          if (seen.insert(CanonicalEncoding(skeleton, LegMode::kCountOnly))
                  .second) {
            skeletons.push_back(std::move(skeleton));
          }
          return;
        }
        for (std::size_t p = first; p < pairs.size(); ++p) {
          edges.push_back(pairs[p]);
          ++valence[pairs[p].a];
          ++valence[pairs[p].b];
          rec(p);
          --valence[pairs[p].a];
          --valence[pairs[p].b];
          edges.pop_back();
        }
      };
      rec(0);
    });
  }
  return skeletons;
}

std::vector<Encoding> CanonicalEncodings(const std::vector<StableGraph>& graphs,
                                         Execution execution) {
  std::vector<Encoding> out;
  if (execution == Execution::kParallel) {
    EncodeParallel(graphs, out);
  } else {
    EncodeSerial(graphs, out);
  }
  return out;
}

StratumCensus EnumerateStableGraphs(int g, int m, const Bounds& bounds,
                                    Execution execution) {
  CheckCensusBounds(g, m, bounds);
  std::vector<Encoding> classes;
  for (const StableGraph& skeleton : EnumerateSkeletons(g, m)) {
    // Distinct skeletons never produce isomorphic graphs, so deduplication
    // is per skeleton.
    const std::vector<int> need = LegDeficits(skeleton);
    std::vector<int> genera(skeleton.vertex_genera().begin(),
                            skeleton.vertex_genera().end());
    std::vector<Edge> edges(skeleton.edges().begin(), skeleton.edges().end());
    std::set<Encoding> found;
    std::vector<StableGraph> batch;
    auto flush = [&] {
      for (Encoding& e : CanonicalEncodings(batch, execution)) {
        found.insert(std::move(e));
      }
      batch.clear();
    };
    ForEachLegMap(m, need, [&](const std::vector<int>& legs) {
      batch.emplace_back(genera, edges, legs);
      if (batch.size() == kChunk) flush();
    });
    flush();
    classes.insert(classes.end(), found.begin(), found.end());
  }
  StratumCensus census;
  census.g = g;
  census.m = m;
  census.by_nodes.resize(3 * g - 3 + m + 1);
  std::sort(classes.begin(), classes.end());
  for (const Encoding& e : classes) {
    StableGraph graph = GraphFromEncoding(e);
    census.by_nodes.at(graph.num_edges()).push_back(std::move(graph));
  }
  return census;
}

}  // namespace stablegraphs
