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

#include "stablegraphs/descent.h"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace stablegraphs {

namespace {

void CheckUnique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const std::string& n : names) {
    if (n.empty()) throw InputError(std::string("empty ") + what + " name");
    if (!seen.insert(n).second) {
      throw InputError(std::string("duplicate ") + what + " \"" + n + "\"");
    }
  }
}

// x with x[i - 1] = marking[gamma(i) - 1].
std::vector<int> Pull(const std::vector<int>& marking, const Permutation& gamma) {
  std::vector<int> out(marking.size());
  for (int i = 1; i <= gamma.degree(); ++i) out[i - 1] = marking[gamma(i) - 1];
  return out;
}

void CheckCompatible(const ChartedMarking& x, const ChartedMarking& y) {
  if (x.cover().base_names() != y.cover().base_names()) {
    throw StructuralError("markings live over different base sets");
  }
  if (x.fiber_points() != y.fiber_points()) {
    throw StructuralError("markings have different distinguished points");
  }
  if (x.m() != y.m() || x.group().elements() != y.group().elements()) {
    throw StructuralError("markings use different groups");
  }
}

std::string Join(const std::vector<int>& labels) {
  std::string out = "{";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(labels[k]);
  }
  return out + "}";
}

}  // namespace

FiniteCover::FiniteCover(std::vector<std::string> base_names,
                         std::vector<std::string> cover_names,
                         std::vector<int> image)
    : base_names_(std::move(base_names)),
      cover_names_(std::move(cover_names)),
      image_(std::move(image)) {
  CheckUnique(base_names_, "base point");
  CheckUnique(cover_names_, "cover point");
  if (image_.size() != cover_names_.size()) {
    throw InputError("cover map has the wrong number of entries");
  }
  fibers_.assign(base_names_.size(), {});
  for (std::size_t c = 0; c < image_.size(); ++c) {
    if (image_[c] < 0 || image_[c] >= num_base()) {
      throw InputError("cover point \"" + cover_names_[c] +
                       "\" maps outside the base");
    }
    fibers_[image_[c]].push_back(static_cast<int>(c));
  }
  for (int s = 0; s < num_base(); ++s) {
    if (fibers_[s].empty()) {
      throw InputError("cover is not surjective: nothing lies over \"" +
                       base_names_[s] + "\"");
    }
  }
}

FiniteCover FiniteCover::Identity(std::vector<std::string> base_names) {
  std::vector<int> image(base_names.size());
  for (std::size_t s = 0; s < image.size(); ++s) image[s] = static_cast<int>(s);
  std::vector<std::string> cover = base_names;
  return FiniteCover(std::move(base_names), std::move(cover), std::move(image));
}

ChartedMarking::ChartedMarking(FiniteCover cover,
                               std::shared_ptr<const PermGroup> group,
                               std::vector<std::vector<std::string>> fiber_points,
                               std::vector<std::vector<int>> sigma)
    : cover_(std::move(cover)),
      group_(std::move(group)),
      fiber_points_(std::move(fiber_points)),
      sigma_(std::move(sigma)) {
  if (group_ == nullptr) throw InputError("missing group");
  const int m = group_->degree();
  if (static_cast<int>(fiber_points_.size()) != cover_.num_base()) {
    throw InputError("distinguished points must be given for every base point");
  }
  for (int s = 0; s < cover_.num_base(); ++s) {
    CheckUnique(fiber_points_[s], "distinguished point");
    if (static_cast<int>(fiber_points_[s].size()) != m) {
      throw InputError("fiber over \"" + cover_.base_names()[s] + "\" has " +
                       std::to_string(fiber_points_[s].size()) +
                       " distinguished points, expected m = " +
                       std::to_string(m));
    }
  }
  if (static_cast<int>(sigma_.size()) != cover_.num_cover()) {
    throw InputError("a marking must be given for every cover point");
  }
  inverse_.assign(sigma_.size(), std::vector<int>(m, -1));
  for (int c = 0; c < cover_.num_cover(); ++c) {
    const std::string& name = cover_.cover_names()[c];
    if (static_cast<int>(sigma_[c].size()) != m) {
      throw InputError("marking of \"" + name + "\" has length " +
                       std::to_string(sigma_[c].size()) + ", expected " +
                       std::to_string(m));
    }
    for (int i = 1; i <= m; ++i) {
      const int p = sigma_[c][i - 1];
      if (p < 0 || p >= m) {
        throw InputError("marking of \"" + name +
                         "\" leaves the fiber over its base point");
      }
      if (inverse_[c][p] != -1) {
        throw InputError("marking of \"" + name +
                         "\" is not injective: sections " +
                         std::to_string(inverse_[c][p]) + " and " +
                         std::to_string(i) + " meet");
      }
      inverse_[c][p] = i;
    }
  }
}

std::vector<Permutation> MatchingElements(const PermGroup& group,
                                          const std::vector<int>& lhs,
                                          const std::vector<int>& rhs) {
  std::vector<Permutation> out;
  for (const Permutation& gamma : group.elements()) {
    bool ok = true;
    for (int i = 1; i <= group.degree() && ok; ++i) {
      ok = lhs[i - 1] == rhs[gamma(i) - 1];
    }
    if (ok) out.push_back(gamma);
  }
  return out;
}

StarReport VerifyStar(const ChartedMarking& marking) {
  StarReport report;
  const FiniteCover& cover = marking.cover();
  const auto& names = cover.cover_names();
  // witness[c][d] for c, d over a common base point.
  std::vector<std::vector<const PairWitness*>> witness(
      cover.num_cover(), std::vector<const PairWitness*>(cover.num_cover()));
  for (int c = 0; c < cover.num_cover(); ++c) {
    for (int d : cover.fiber(cover.image(c))) {
      PairWitness pair{c, d, std::nullopt, 0};
      std::vector<Permutation> found =
          MatchingElements(marking.group(), marking.sigma(c), marking.sigma(d));
      pair.matches = found.size();
      if (!found.empty()) pair.gamma = found.front();
      if (found.empty()) {
        report.violations.push_back("(" + names[c] + ", " + names[d] +
                                    "): no element of the group matches");
      } else if (found.size() > 1) {
        report.unique = false;
        report.violations.push_back("(" + names[c] + ", " + names[d] +
                                    "): witness is not unique");
      }
      report.pairs.push_back(std::move(pair));
    }
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const PairWitness& x, const PairWitness& y) {
              return std::pair(x.first, x.second) < std::pair(y.first, y.second);
            });
  bool all_found = true;
  for (const PairWitness& pair : report.pairs) {
    witness[pair.first][pair.second] = &pair;
    all_found = all_found && pair.gamma.has_value();
  }
  for (int c = 0; c < cover.num_cover(); ++c) {
    const PairWitness* self = witness[c][c];
    if (self->gamma && !self->gamma->IsIdentity()) {
      report.coherent = false;
      report.violations.push_back("(" + names[c] + ", " + names[c] +
                                  "): witness is not the identity");
    }
    for (int d : cover.fiber(cover.image(c))) {
      for (int e : cover.fiber(cover.image(c))) {
        const auto& cd = witness[c][d]->gamma;
        const auto& de = witness[d][e]->gamma;
        const auto& ce = witness[c][e]->gamma;
        if (cd && de && ce && (*de) * (*cd) != *ce) {
          report.coherent = false;
          report.violations.push_back("(" + names[c] + ", " + names[d] + ", " +
                                      names[e] + "): witnesses do not compose");
        }
      }
    }
  }
  report.valid = all_found && report.unique && report.coherent;
  return report;
}

std::string StarReport::ToString(const ChartedMarking& marking) const {
  const auto& names = marking.cover().cover_names();
  std::string out;
  for (const PairWitness& pair : pairs) {
    if (pair.first >= pair.second) continue;
    out += "(" + names[pair.first] + ", " + names[pair.second] + "): ";
    out += pair.gamma ? "γ = " + pair.gamma->ToCycleString() : "NO WITNESS";
    out += "\n";
  }
  out += valid ? "star: valid\n" : "star: invalid\n";
  return out;
}

std::vector<std::vector<ClassLabel>> ClassFunction(
    const ChartedMarking& marking) {
  if (!VerifyStar(marking).valid) {
    throw PreconditionError(
        "class function requires a marking satisfying the compatibility "
        "condition");
  }
  const FiniteCover& cover = marking.cover();
  std::vector<std::vector<ClassLabel>> classes(cover.num_base());
  for (int s = 0; s < cover.num_base(); ++s) {
    classes[s].assign(marking.m(), ClassLabel{});
    for (int c : cover.fiber(s)) {
      for (int i = 1; i <= marking.m(); ++i) {
        ClassLabel label{marking.group().Orbit(i)};
        ClassLabel& slot = classes[s][marking.section(c, i)];
        if (slot.orbit.empty()) {
          slot = std::move(label);
        } else if (slot != label) {
          throw PreconditionError("class of a distinguished point is not "
                                  "well defined");
        }
      }
    }
  }
  return classes;
}

DominationReport Dominates(const ChartedMarking& fine,
                           const ChartedMarking& coarse,
                           const std::vector<int>& v) {
  CheckCompatible(fine, coarse);
  if (static_cast<int>(v.size()) != fine.cover().num_cover()) {
    throw StructuralError("cover map has the wrong number of entries");
  }
  for (int c = 0; c < fine.cover().num_cover(); ++c) {
    if (v[c] < 0 || v[c] >= coarse.cover().num_cover() ||
        coarse.cover().image(v[c]) != fine.cover().image(c)) {
      throw StructuralError("cover map does not factor the finer cover "
                            "through the coarser one");
    }
  }
  DominationReport report;
  report.valid = true;
  for (int c = 0; c < fine.cover().num_cover(); ++c) {
    std::vector<Permutation> found =
        MatchingElements(fine.group(), fine.sigma(c), coarse.sigma(v[c]));
    if (found.empty()) {
      report.valid = false;
      report.gammas.emplace_back(std::nullopt);
    } else {
      report.gammas.emplace_back(found.front());
    }
  }
  return report;
}

std::optional<CommonRefinement> Equivalent(const ChartedMarking& first,
                                           const ChartedMarking& second) {
  CheckCompatible(first, second);
  const FiniteCover& c1 = first.cover();
  const FiniteCover& c2 = second.cover();
  std::vector<std::string> names;
  std::vector<int> image;
  std::vector<int> to_first;
  std::vector<int> to_second;
  for (int a = 0; a < c1.num_cover(); ++a) {
    for (int b : c2.fiber(c1.image(a))) {
      names.push_back(c1.cover_names()[a] + "*" + c2.cover_names()[b]);
      image.push_back(c1.image(a));
      to_first.push_back(a);
      to_second.push_back(b);
    }
  }
  const PermGroup& group = first.group();
  // Markings at (a, b) dominating both charts: pullbacks of sigma1(a) by
  // elements of the group that are also pullbacks of sigma2(b). The plain
  // pullback of sigma1(a) is tried first.
  const int n = static_cast<int>(names.size());
  std::vector<std::vector<std::vector<int>>> candidates(n);
  for (int p = 0; p < n; ++p) {
    std::set<std::vector<int>> from_second;
    for (const Permutation& delta : group.elements()) {
      from_second.insert(Pull(second.sigma(to_second[p]), delta));
    }
    for (const Permutation& gamma : group.elements()) {
      std::vector<int> x = Pull(first.sigma(to_first[p]), gamma);
      if (from_second.count(x) > 0) candidates[p].push_back(std::move(x));
    }
    if (candidates[p].empty()) return std::nullopt;
  }
  std::vector<std::vector<int>> chosen(n);
  std::function<bool(int)> search = [&](int p) {
    if (p == n) return true;
    for (const std::vector<int>& x : candidates[p]) {
      bool ok = true;
      for (int q = 0; q < p && ok; ++q) {
        if (image[q] == image[p]) {
          ok = !MatchingElements(group, x, chosen[q]).empty();
        }
      }
      if (!ok) continue;
      chosen[p] = x;
      if (search(p + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  FiniteCover product(c1.base_names(), std::move(names), std::move(image));
  ChartedMarking refinement(std::move(product), first.shared_group(),
                            first.fiber_points(), std::move(chosen));
  DominationReport over_first = Dominates(refinement, first, to_first);
  DominationReport over_second = Dominates(refinement, second, to_second);
  if (!over_first.valid || !over_second.valid ||
      !VerifyStar(refinement).valid) {
    return std::nullopt;
  }
  return CommonRefinement{std::move(refinement), std::move(to_first),
                          std::move(to_second), std::move(over_first),
                          std::move(over_second)};
}

FiberMorphism FiberMorphism::Identity(const ChartedMarking& marking) {
  FiberMorphism id;
  for (int s = 0; s < marking.cover().num_base(); ++s) {
    id.base_map.push_back(s);
    std::vector<int> points(marking.m());
    for (int p = 0; p < marking.m(); ++p) points[p] = p;
    id.fiber_maps.push_back(std::move(points));
  }
  return id;
}

FiberMorphism Compose(const FiberMorphism& g, const FiberMorphism& f) {
  FiberMorphism out;
  for (std::size_t s = 0; s < f.base_map.size(); ++s) {
    const int t = f.base_map[s];
    out.base_map.push_back(g.base_map.at(t));
    std::vector<int> points;
    for (int p : f.fiber_maps.at(s)) points.push_back(g.fiber_maps.at(t).at(p));
    out.fiber_maps.push_back(std::move(points));
  }
  return out;
}

MorphismReport VerifyMorphism(const FiberMorphism& morphism,
                              const ChartedMarking& source,
                              const ChartedMarking& target) {
  const FiniteCover& c1 = source.cover();
  const FiniteCover& c2 = target.cover();
  if (source.m() != target.m() ||
      source.group().elements() != target.group().elements()) {
    throw StructuralError("morphism between markings with different groups");
  }
  const int m = source.m();
  if (static_cast<int>(morphism.base_map.size()) != c1.num_base() ||
      static_cast<int>(morphism.fiber_maps.size()) != c1.num_base()) {
    throw StructuralError("morphism must be defined on every source base point");
  }
  for (int s = 0; s < c1.num_base(); ++s) {
    const int t = morphism.base_map[s];
    if (t < 0 || t >= c2.num_base()) {
      throw StructuralError("base map leaves the target base");
    }
    const std::vector<int>& fm = morphism.fiber_maps[s];
    std::vector<bool> hit(m, false);
    if (static_cast<int>(fm.size()) != m) {
      throw StructuralError("fiber map over \"" + c1.base_names()[s] +
                            "\" has the wrong size");
    }
    for (int q : fm) {
      if (q < 0 || q >= m || hit[q]) {
        throw StructuralError("fiber map over \"" + c1.base_names()[s] +
                              "\" is not a bijection");
      }
      hit[q] = true;
    }
  }
  if (!VerifyStar(source).valid || !VerifyStar(target).valid) {
    throw PreconditionError("both markings must satisfy the compatibility "
                            "condition");
  }

  MorphismReport report;
  report.diamond_valid = true;
  for (int a = 0; a < c1.num_cover(); ++a) {
    const int s = c1.image(a);
    const std::vector<int>& fm = morphism.fiber_maps[s];
    std::vector<int> pushed(m);
    for (int i = 1; i <= m; ++i) pushed[i - 1] = fm[source.section(a, i)];
    for (int b : c2.fiber(morphism.base_map[s])) {
      std::vector<Permutation> found =
          MatchingElements(source.group(), pushed, target.sigma(b));
      MorphismReport::PointWitness point{a, b, std::nullopt};
      if (!found.empty()) point.gamma = found.front();
      report.diamond_valid = report.diamond_valid && point.gamma.has_value();
      report.points.push_back(std::move(point));
    }
  }

  const auto classes1 = ClassFunction(source);
  const auto classes2 = ClassFunction(target);
  report.class_preserving = true;
  for (int s = 0; s < c1.num_base(); ++s) {
    const int t = morphism.base_map[s];
    for (int q = 0; q < m; ++q) {
      const ClassLabel& from = classes1[s][q];
      const ClassLabel& to = classes2[t][morphism.fiber_maps[s][q]];
      if (from != to) {
        report.class_preserving = false;
        report.class_violations.push_back(
            source.fiber_points()[s][q] + " " + Join(from.orbit) + " -> " +
            target.fiber_points()[t][morphism.fiber_maps[s][q]] + " " +
            Join(to.orbit));
      }
    }
  }
  return report;
}

std::string MorphismReport::ToString(const ChartedMarking& source,
                                     const ChartedMarking& target) const {
  std::string out;
  for (const PointWitness& point : points) {
    out += "(" + source.cover().cover_names()[point.source_cover] + ", " +
           target.cover().cover_names()[point.target_cover] + "): ";
    out += point.gamma ? "γ = " + point.gamma->ToCycleString() : "NO WITNESS";
    out += "\n";
  }
  for (const std::string& v : class_violations) out += "class changed: " + v + "\n";
  out += std::string("morphism: ") + (diamond_valid ? "valid" : "invalid") + "\n";
  out += std::string("classes: ") +
         (class_preserving ? "preserved" : "not preserved") + "\n";
  if (!agree()) out += "criteria disagree\n";
  return out;
}

std::vector<std::vector<int>> GlobalizeTrivialGroup(
    const ChartedMarking& marking) {
  if (!marking.group().IsTrivial()) {
    throw PreconditionError("global sections need the trivial group");
  }
  if (!VerifyStar(marking).valid) {
    throw PreconditionError("marking fails the compatibility condition");
  }
  std::vector<std::vector<int>> global;
  for (int s = 0; s < marking.cover().num_base(); ++s) {
    global.push_back(marking.sigma(marking.cover().fiber(s).front()));
  }
  return global;
}

}  // namespace stablegraphs
