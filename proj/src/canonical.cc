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

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

namespace stablegraphs {

namespace {

// Edge multiplicities; loops on the diagonal.
std::vector<std::vector<int>> Multiplicities(const StableGraph& g) {
  std::vector<std::vector<int>> mult(g.num_vertices(),
                                     std::vector<int>(g.num_vertices(), 0));
  for (const Edge& e : g.edges()) {
    ++mult[e.a][e.b];
    if (e.a != e.b) ++mult[e.b][e.a];
  }
  return mult;
}

// Replaces keys by their dense rank; returns the number of distinct keys.
int RankKeys(const std::vector<std::vector<int>>& keys,
             std::vector<int>& color) {
  std::vector<std::vector<int>> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    color[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
        sorted.begin());
  }
  return static_cast<int>(sorted.size());
}

class CanonicalSearch {
 public:
  CanonicalSearch(const StableGraph& graph, LegMode mode)
      : graph_(graph), mode_(mode), mult_(Multiplicities(graph)) {}

  CanonicalLabeling Run() {
    const int n = graph_.num_vertices();
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
      keys[v] = {graph_.vertex_genus(v), graph_.valence(v), mult_[v][v]};
      const std::vector<int> legs = graph_.legs_at(v);
      keys[v].push_back(static_cast<int>(legs.size()));
      if (mode_ == LegMode::kLabeled) {
        keys[v].insert(keys[v].end(), legs.begin(), legs.end());
      }
    }
    std::vector<int> color(n);
    RankKeys(keys, color);
    Search(std::move(color));
    return best_;
  }

 private:
  int Refine(std::vector<int>& color) const {
    const int n = graph_.num_vertices();
    int count = 1 + *std::max_element(color.begin(), color.end());
    for (;;) {
      std::vector<std::vector<int>> keys(n);
      for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, int>> nbrs;
        for (int w = 0; w < n; ++w) {
          if (w != v && mult_[v][w] > 0) nbrs.emplace_back(color[w], mult_[v][w]);
        }
        std::sort(nbrs.begin(), nbrs.end());
        keys[v].push_back(color[v]);
        for (const auto& [c, k] : nbrs) {
          keys[v].push_back(c);
          keys[v].push_back(k);
        }
      }
      const int next = RankKeys(keys, color);
      if (next == count) return count;
      count = next;
    }
  }

  Encoding Encode(const std::vector<int>& position) const {
    const int n = graph_.num_vertices();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[position[v]] = v;
    Encoding enc{n, graph_.num_legs(), graph_.num_edges()};
    for (int i = 0; i < n; ++i) {
      const int v = order[i];
      const std::vector<int> legs = graph_.legs_at(v);
      enc.push_back(graph_.vertex_genus(v));
      enc.push_back(static_cast<int>(legs.size()));
      if (mode_ == LegMode::kLabeled) enc.insert(enc.end(), legs.begin(), legs.end());
    }
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : graph_.edges()) {
      edges.emplace_back(std::min(position[e.a], position[e.b]),
                         std::max(position[e.a], position[e.b]));
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [x, y] : edges) {
      enc.push_back(x);
      enc.push_back(y);
    }
    return enc;
  }

  void Search(std::vector<int> color) {
    const int n = graph_.num_vertices();
    const int cells = Refine(color);
    if (cells == n) {
      Encoding enc = Encode(color);
      if (best_.encoding.empty() || enc < best_.encoding) {
        best_.encoding = std::move(enc);
        best_.position = color;
      }
      return;
    }
    // Branch on the first non-singleton cell.
    std::vector<int> size(cells, 0);
    for (int c : color) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::vector<std::vector<int>> keys(n);
      for (int u = 0; u < n; ++u) {
        keys[u] = {2 * color[u] + (color[u] == target && u != v ? 1 : 0)};
      }
      std::vector<int> child(n);
      RankKeys(keys, child);
      Search(std::move(child));
    }
  }

  const StableGraph& graph_;
  LegMode mode_;
  std::vector<std::vector<int>> mult_;
  CanonicalLabeling best_;
};

// Signature that any isomorphism must preserve vertex by vertex.
std::vector<int> VertexSignature(const StableGraph& g, int v,
                                 bool respect_leg_labels) {
  std::vector<int> sig{g.vertex_genus(v), g.valence(v), g.num_loops(v)};
  const std::vector<int> legs = g.legs_at(v);
  sig.push_back(static_cast<int>(legs.size()));
  if (respect_leg_labels) sig.insert(sig.end(), legs.begin(), legs.end());
  return sig;
}

// All ways to map the parallel edges of a to those of b once the vertex map
// is fixed. Each option is a list of (source half-edge, target half-edge).
using HalfEdgeOption = std::vector<std::pair<int, int>>;

std::vector<std::vector<HalfEdgeOption>> BundleOptions(
    const StableGraph& a, const StableGraph& b,
    const std::vector<int>& vertex_map, bool all) {
  std::map<std::pair<int, int>, std::vector<int>> bundles_a;
  std::map<std::pair<int, int>, std::vector<int>> bundles_b;
  for (int e = 0; e < a.num_edges(); ++e) {
    const Edge& ea = a.edges()[e];
    bundles_a[{std::min(ea.a, ea.b), std::max(ea.a, ea.b)}].push_back(e);
  }
  for (int e = 0; e < b.num_edges(); ++e) {
    const Edge& eb = b.edges()[e];
    bundles_b[{std::min(eb.a, eb.b), std::max(eb.a, eb.b)}].push_back(e);
  }
  std::vector<std::vector<HalfEdgeOption>> result;
  for (const auto& [ends, edges_a] : bundles_a) {
    const int x = vertex_map[ends.first];
    const int y = vertex_map[ends.second];
    const std::vector<int>& edges_b =
        bundles_b.at({std::min(x, y), std::max(x, y)});
    const bool loop = ends.first == ends.second;
    const int k = static_cast<int>(edges_a.size());
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::vector<HalfEdgeOption> options;
    do {
      const int flips = loop ? (1 << k) : 1;
      for (int mask = 0; mask < flips; ++mask) {
        HalfEdgeOption option;
        for (int i = 0; i < k; ++i) {
          const int src = edges_a[i];
          const int dst = edges_b[perm[i]];
          if (loop) {
            const int flip = (mask >> i) & 1;
            option.emplace_back(2 * src, 2 * dst + flip);
            option.emplace_back(2 * src + 1, 2 * dst + 1 - flip);
          } else {
            // The half-edge at a vertex goes to the half-edge at its image.
            const int src_at_a = 2 * src;
            const int tail = a.edges()[src].a;
            const int dst_at_image =
                b.edges()[dst].a == vertex_map[tail] ? 2 * dst : 2 * dst + 1;
            option.emplace_back(src_at_a, dst_at_image);
            option.emplace_back(src_at_a + 1, dst_at_image ^ 1);
          }
        }
        options.push_back(std::move(option));
        if (!all) break;
      }
      if (!all) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    result.push_back(std::move(options));
  }
  return result;
}

// Backtracking over vertex maps; `visit` returns false to stop.
void SearchVertexMaps(const StableGraph& a, const StableGraph& b,
                      bool respect_leg_labels,
                      const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.num_legs() != b.num_legs()) {
    return;
  }
  const auto mult_a = Multiplicities(a);
  const auto mult_b = Multiplicities(b);
  std::vector<std::vector<int>> sig_a(n);
  std::vector<std::vector<int>> sig_b(n);
  for (int v = 0; v < n; ++v) {
    sig_a[v] = VertexSignature(a, v, respect_leg_labels);
    sig_b[v] = VertexSignature(b, v, respect_leg_labels);
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(int)> extend = [&](int v) {
    if (stop) return;
    if (v == n) {
      stop = !visit(map);
      return;
    }
    for (int w = 0; w < n && !stop; ++w) {
      if (used[w] || sig_a[v] != sig_b[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = mult_a[u][v] == mult_b[map[u]][w];
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      extend(v + 1);
      used[w] = false;
      map[v] = -1;
    }
  };
  extend(0);
}

Isomorphism Assemble(const std::vector<int>& vertex_map, int half_edges,
                     const std::vector<const HalfEdgeOption*>& choice) {
  Isomorphism iso;
  iso.vertex_map = vertex_map;
  iso.half_edge_map.assign(half_edges, -1);
  for (const HalfEdgeOption* option : choice) {
    for (const auto& [src, dst] : *option) iso.half_edge_map[src] = dst;
  }
  return iso;
}

}  // namespace

CanonicalLabeling ComputeCanonicalLabeling(const StableGraph& graph,
                                           LegMode mode) {
  return CanonicalSearch(graph, mode).Run();
}

Encoding CanonicalEncoding(const StableGraph& graph, LegMode mode) {
  return ComputeCanonicalLabeling(graph, mode).encoding;
}

StableGraph CanonicalForm(const StableGraph& graph) {
  return GraphFromEncoding(CanonicalEncoding(graph));
}

StableGraph GraphFromEncoding(const Encoding& enc) {
  auto fail = [] { return InputError("malformed graph encoding"); };
  if (enc.size() < 3) throw fail();
  const int n = enc[0];
  const int m = enc[1];
  const int e = enc[2];
  if (n <= 0 || m < 0 || e < 0) throw fail();
  std::size_t pos = 3;
  std::vector<int> genus(n);
  std::vector<int> leg_vertex(m, -1);
  for (int v = 0; v < n; ++v) {
    if (pos + 2 > enc.size()) throw fail();
    genus[v] = enc[pos++];
    const int k = enc[pos++];
    if (k < 0 || pos + k > enc.size()) throw fail();
    for (int i = 0; i < k; ++i) {
      const int label = enc[pos++];
      if (label < 1 || label > m || leg_vertex[label - 1] != -1) throw fail();
      leg_vertex[label - 1] = v;
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < e; ++i) {
    if (pos + 2 > enc.size()) throw fail();
    edges.push_back({enc[pos], enc[pos + 1]});
    pos += 2;
  }
  if (pos != enc.size()) throw fail();
  return StableGraph(std::move(genus), std::move(edges), std::move(leg_vertex));
}

Isomorphism Isomorphism::Identity(const StableGraph& graph) {
  Isomorphism iso;
  for (int v = 0; v < graph.num_vertices(); ++v) iso.vertex_map.push_back(v);
  for (int h = 0; h < graph.num_half_edges(); ++h) iso.half_edge_map.push_back(h);
  return iso;
}

Isomorphism Isomorphism::Compose(const Isomorphism& other) const {
  Isomorphism out;
  for (int v : other.vertex_map) out.vertex_map.push_back(vertex_map.at(v));
  for (int h : other.half_edge_map) out.half_edge_map.push_back(half_edge_map.at(h));
  return out;
}

Isomorphism Isomorphism::Inverse() const {
  Isomorphism out;
  out.vertex_map.assign(vertex_map.size(), -1);
  out.half_edge_map.assign(half_edge_map.size(), -1);
  for (std::size_t v = 0; v < vertex_map.size(); ++v) {
    out.vertex_map.at(vertex_map[v]) = static_cast<int>(v);
  }
  for (std::size_t h = 0; h < half_edge_map.size(); ++h) {
    out.half_edge_map.at(half_edge_map[h]) = static_cast<int>(h);
  }
  return out;
}

std::optional<Isomorphism> FindIsomorphism(const StableGraph& a,
                                           const StableGraph& b,
                                           bool respect_leg_labels) {
  std::optional<Isomorphism> found;
  SearchVertexMaps(a, b, respect_leg_labels, [&](const std::vector<int>& map) {
    const auto bundles = BundleOptions(a, b, map, /*all=*/false);
    std::vector<const HalfEdgeOption*> choice;
    for (const auto& options : bundles) choice.push_back(&options.front());
    found = Assemble(map, a.num_half_edges(), choice);
    return false;
  });
  return found;
}

std::vector<Isomorphism> AllIsomorphisms(const StableGraph& a,
                                         const StableGraph& b,
                                         bool respect_leg_labels) {
  std::vector<Isomorphism> out;
  SearchVertexMaps(a, b, respect_leg_labels, [&](const std::vector<int>& map) {
    const auto bundles = BundleOptions(a, b, map, /*all=*/true);
    std::vector<const HalfEdgeOption*> choice(bundles.size());
    std::function<void(std::size_t)> product = [&](std::size_t k) {
      if (k == bundles.size()) {
        out.push_back(Assemble(map, a.num_half_edges(), choice));
        return;
      }
      for (const HalfEdgeOption& option : bundles[k]) {
        choice[k] = &option;
        product(k + 1);
      }
    };
    product(0);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool IsIsomorphism(const StableGraph& a, const StableGraph& b,
                   const Isomorphism& iso, bool respect_leg_labels) {
  const int n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.num_legs() != b.num_legs() ||
      static_cast<int>(iso.vertex_map.size()) != n ||
      static_cast<int>(iso.half_edge_map.size()) != a.num_half_edges()) {
    return false;
  }
  std::vector<bool> hit(n, false);
  for (int v = 0; v < n; ++v) {
    const int w = iso.vertex_map[v];
    if (w < 0 || w >= n || hit[w]) return false;
    hit[w] = true;
    if (a.vertex_genus(v) != b.vertex_genus(w)) return false;
    if (a.legs_at(v).size() != b.legs_at(w).size()) return false;
  }
  std::vector<bool> hit_h(a.num_half_edges(), false);
  for (int h = 0; h < a.num_half_edges(); ++h) {
    const int k = iso.half_edge_map[h];
    if (k < 0 || k >= b.num_half_edges() || hit_h[k]) return false;
    hit_h[k] = true;
    if (b.half_edge_vertex(k) != iso.vertex_map[a.half_edge_vertex(h)]) {
      return false;
    }
    if (iso.half_edge_map[h ^ 1] != (k ^ 1)) return false;
  }
  if (respect_leg_labels) {
    for (int label = 1; label <= a.num_legs(); ++label) {
      if (b.leg_vertex(label) != iso.vertex_map[a.leg_vertex(label)]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace stablegraphs
