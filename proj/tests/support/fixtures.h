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

// Builders for descent fixtures shared by the unit tests and the acceptance
// suite.

#ifndef STABLEGRAPHS_TESTS_SUPPORT_FIXTURES_H_
#define STABLEGRAPHS_TESTS_SUPPORT_FIXTURES_H_

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "stablegraphs/descent.h"
#include "stablegraphs/perm.h"

namespace fixtures {

using stablegraphs::ChartedMarking;
using stablegraphs::FiberMorphism;
using stablegraphs::FiniteCover;
using stablegraphs::Permutation;
using stablegraphs::PermGroup;

inline std::shared_ptr<const PermGroup> Group(int m, const std::string& gens) {
  return std::make_shared<const PermGroup>(
      PermGroup::FromGenerators(m, stablegraphs::ParseGenerators(gens, m)));
}

// One base point x with fiber p1..p4 and two charts s1 = (p1, p2, p3, p4),
// s2 = (p2, p1, p4, p3).
inline ChartedMarking IntroMarking(std::shared_ptr<const PermGroup> group) {
  return ChartedMarking(FiniteCover({"x"}, {"s1", "s2"}, {0, 0}),
                        std::move(group), {{"p1", "p2", "p3", "p4"}},
                        {{0, 1, 2, 3}, {1, 0, 3, 2}});
}

inline Permutation RandomPermutation(std::mt19937& rng, int m) {
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::FromImages(images);
}

// Subgroup generated by one or two random permutations.
inline std::shared_ptr<const PermGroup> RandomSubgroup(std::mt19937& rng,
                                                       int m) {
  std::vector<Permutation> gens;
  const int count = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int k = 0; k < count; ++k) gens.push_back(RandomPermutation(rng, m));
  return std::make_shared<const PermGroup>(
      PermGroup::FromGenerators(m, std::move(gens)));
}

// Full symmetric group on each block of a random set partition of 1..m.
inline std::shared_ptr<const PermGroup> RandomYoungSubgroup(std::mt19937& rng,
                                                            int m) {
  std::vector<int> block(m);
  for (int i = 0; i < m; ++i) {
    block[i] = std::uniform_int_distribution<int>(0, i)(rng);
  }
  std::vector<Permutation> gens;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (block[i] == block[j]) {
        gens.push_back(Permutation::FromCycles(m, {{i + 1, j + 1}}));
        break;
      }
    }
  }
  return std::make_shared<const PermGroup>(
      PermGroup::FromGenerators(m, std::move(gens)));
}

inline const Permutation& RandomElement(std::mt19937& rng,
                                        const PermGroup& group) {
  const auto& els = group.elements();
  return els[std::uniform_int_distribution<std::size_t>(0, els.size() - 1)(rng)];
}

// A marking built from one base chart per base point, twisted at each cover
// point by a random group element, so the compatibility condition holds.
// charts[s][i - 1] is the point index of label i in the base chart over s.
struct Built {
  ChartedMarking marking;
  std::vector<std::vector<int>> charts;
};

inline std::vector<std::vector<int>> RandomCharts(std::mt19937& rng, int m,
                                                  int num_base) {
  std::vector<std::vector<int>> charts(num_base, std::vector<int>(m));
  for (auto& chart : charts) {
    std::iota(chart.begin(), chart.end(), 0);
    std::shuffle(chart.begin(), chart.end(), rng);
  }
  return charts;
}

inline Built CompatibleMarking(std::mt19937& rng,
                               std::shared_ptr<const PermGroup> group,
                               const std::vector<std::vector<int>>& charts,
                               int max_fiber, const std::string& prefix) {
  const int m = group->degree();
  const int num_base = static_cast<int>(charts.size());
  std::vector<std::string> base;
  std::vector<std::string> cover;
  std::vector<int> image;
  std::vector<std::vector<std::string>> points;
  std::vector<std::vector<int>> sigma;
  for (int s = 0; s < num_base; ++s) {
    base.push_back(prefix + "x" + std::to_string(s));
    std::vector<std::string> names;
    for (int p = 0; p < m; ++p) {
      names.push_back(prefix + std::to_string(s) + "p" + std::to_string(p + 1));
    }
    points.push_back(std::move(names));
    const std::vector<int>& chart = charts[s];
    const int fiber = std::uniform_int_distribution<int>(1, max_fiber)(rng);
    for (int k = 0; k < fiber; ++k) {
      cover.push_back(prefix + "c" + std::to_string(s) + "_" + std::to_string(k));
      image.push_back(s);
      const Permutation& gamma = RandomElement(rng, *group);
      std::vector<int> sig(m);
      for (int i = 1; i <= m; ++i) sig[i - 1] = chart[gamma(i) - 1];
      sigma.push_back(std::move(sig));
    }
  }
  return {ChartedMarking(FiniteCover(base, cover, image), std::move(group),
                         std::move(points), std::move(sigma)),
          charts};
}

inline Built RandomCompatibleMarking(std::mt19937& rng,
                                     std::shared_ptr<const PermGroup> group,
                                     int num_base, int max_fiber,
                                     const std::string& prefix) {
  const auto charts = RandomCharts(rng, group->degree(), num_base);
  return CompatibleMarking(rng, std::move(group), charts, max_fiber, prefix);
}

// Either a morphism built from group elements, which satisfies the witness
// condition by construction, or a uniformly random bijection per fiber.
inline FiberMorphism RandomMorphism(std::mt19937& rng, const Built& source,
                                    const Built& target, bool structured) {
  const PermGroup& group = source.marking.group();
  const int m = group.degree();
  const int base2 = target.marking.cover().num_base();
  FiberMorphism f;
  for (int s = 0; s < source.marking.cover().num_base(); ++s) {
    const int t = std::uniform_int_distribution<int>(0, base2 - 1)(rng);
    f.base_map.push_back(t);
    std::vector<int> fm(m);
    if (structured) {
      const Permutation& delta = RandomElement(rng, group);
      for (int i = 1; i <= m; ++i) {
        fm[source.charts[s][i - 1]] = target.charts[t][delta(i) - 1];
      }
    } else {
      std::iota(fm.begin(), fm.end(), 0);
      std::shuffle(fm.begin(), fm.end(), rng);
    }
    f.fiber_maps.push_back(std::move(fm));
  }
  return f;
}

// Class of every distinguished point, read off from the first chart over
// each base point: the group orbit of its label. Independent of the library
// class function.
inline std::vector<std::vector<std::vector<int>>> OrbitClasses(
    const ChartedMarking& marking) {
  const PermGroup& group = marking.group();
  const int m = marking.m();
  std::vector<std::vector<std::vector<int>>> classes;
  for (int s = 0; s < marking.cover().num_base(); ++s) {
    const int c = marking.cover().fiber(s).front();
    std::vector<std::vector<int>> per_point(m);
    for (int i = 1; i <= m; ++i) {
      std::vector<int> orbit;
      for (const Permutation& gamma : group.elements()) orbit.push_back(gamma(i));
      std::sort(orbit.begin(), orbit.end());
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      per_point[marking.sigma(c)[i - 1]] = std::move(orbit);
    }
    classes.push_back(std::move(per_point));
  }
  return classes;
}

inline bool PreservesClasses(const FiberMorphism& f,
                             const ChartedMarking& source,
                             const ChartedMarking& target) {
  const auto from = OrbitClasses(source);
  const auto to = OrbitClasses(target);
  for (std::size_t s = 0; s < f.base_map.size(); ++s) {
    for (std::size_t q = 0; q < f.fiber_maps[s].size(); ++q) {
      if (from[s][q] != to[f.base_map[s]][f.fiber_maps[s][q]]) return false;
    }
  }
  return true;
}

}  // namespace fixtures

#endif  // STABLEGRAPHS_TESTS_SUPPORT_FIXTURES_H_
