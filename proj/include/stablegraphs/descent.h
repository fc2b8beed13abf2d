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

// Finite models of charted curves with marked points known up to Gamma.
//
// Everything lives on closed points. A FiniteCover is a surjection u from
// cover points onto base points. Each base point s carries m distinguished
// points D_s; each cover point c carries a marking sigma(c), an ordering of
// D_{u(c)} (sigma(c)[i - 1] is the point hit by section i). The curve on the
// cover is the pullback, so its fiber over c is identified with D_{u(c)}.
//
// Witness conventions, with (a * b)(i) = a(b(i)):
//   compatibility   sigma_i(c) = sigma_{gamma(c, d)(i)}(d)       for u(c) = u(d)
//   domination      tau_i(c)   = sigma_{gamma(c)(i)}(v(c))
//   morphism        F(sigma1_i(a)) = sigma2_{gamma(a, b)(i)}(b)
// so compatibility witnesses compose as gamma(c, e) = gamma(d, e) * gamma(c, d).

#ifndef STABLEGRAPHS_DESCENT_H_
#define STABLEGRAPHS_DESCENT_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stablegraphs/perm.h"

namespace stablegraphs {

class FiniteCover {
 public:
  FiniteCover() = default;
  // image[c] is the base index under cover point c. Throws InputError when
  // names repeat, an image is out of range, or u is not surjective.
  FiniteCover(std::vector<std::string> base_names,
              std::vector<std::string> cover_names, std::vector<int> image);

  int num_base() const { return static_cast<int>(base_names_.size()); }
  int num_cover() const { return static_cast<int>(cover_names_.size()); }
  const std::vector<std::string>& base_names() const { return base_names_; }
  const std::vector<std::string>& cover_names() const { return cover_names_; }
  int image(int c) const { return image_[c]; }
  const std::vector<int>& images() const { return image_; }
  // Cover points over base point s, increasing.
  const std::vector<int>& fiber(int s) const { return fibers_[s]; }

  static FiniteCover Identity(std::vector<std::string> base_names);

 private:
  std::vector<std::string> base_names_;
  std::vector<std::string> cover_names_;
  std::vector<int> image_;
  std::vector<std::vector<int>> fibers_;
};

class ChartedMarking {
 public:
  ChartedMarking() = default;
  // fiber_points[s] names the m distinguished points over s; sigma[c][i - 1]
  // indexes into fiber_points[u(c)]. Throws InputError unless every fiber
  // has exactly m points and every sigma(c) is injective.
  ChartedMarking(FiniteCover cover, std::shared_ptr<const PermGroup> group,
                 std::vector<std::vector<std::string>> fiber_points,
                 std::vector<std::vector<int>> sigma);

  int m() const { return group_->degree(); }
  const FiniteCover& cover() const { return cover_; }
  const PermGroup& group() const { return *group_; }
  std::shared_ptr<const PermGroup> shared_group() const { return group_; }
  const std::vector<std::vector<std::string>>& fiber_points() const {
    return fiber_points_;
  }
  const std::vector<int>& sigma(int c) const { return sigma_[c]; }
  const std::vector<std::vector<int>>& sigmas() const { return sigma_; }
  // Index of the point hit by section i (1-based) at cover point c.
  int section(int c, int i) const { return sigma_[c][i - 1]; }
  // The label i with section(c, i) == point.
  int label_of(int c, int point) const { return inverse_[c][point]; }

 private:
  FiniteCover cover_;
  std::shared_ptr<const PermGroup> group_;
  std::vector<std::vector<std::string>> fiber_points_;
  std::vector<std::vector<int>> sigma_;
  std::vector<std::vector<int>> inverse_;
};

// The elements gamma of `group` with lhs[i - 1] == rhs[gamma(i) - 1] for all
// i, by exhaustive scan.
std::vector<Permutation> MatchingElements(const PermGroup& group,
                                          const std::vector<int>& lhs,
                                          const std::vector<int>& rhs);

struct PairWitness {
  int first = 0;
  int second = 0;
  std::optional<Permutation> gamma;
  // Number of group elements satisfying the condition.
  std::size_t matches = 0;
};

struct StarReport {
  bool valid = false;
  // Every witness is the only matching element.
  bool unique = true;
  // gamma(c, c) = id and gamma(c, e) = gamma(d, e) * gamma(c, d).
  bool coherent = true;
  // Ordered pairs (c, d) over a common base point, diagonal included, in
  // lexicographic order.
  std::vector<PairWitness> pairs;
  std::vector<std::string> violations;

  // One line per pair c < d: "(c, d): γ = (1 2)(3 4)" or "(c, d): NO WITNESS".
  std::string ToString(const ChartedMarking& marking) const;
};

StarReport VerifyStar(const ChartedMarking& marking);

struct ClassLabel {
  std::vector<int> orbit;
  int representative() const { return orbit.front(); }
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

// classes[s][p] is the class of distinguished point p over base point s.
// Throws PreconditionError when the marking fails VerifyStar.
std::vector<std::vector<ClassLabel>> ClassFunction(const ChartedMarking& marking);

struct DominationReport {
  bool valid = false;
  // Witness gamma(c) per cover point of the finer marking.
  std::vector<std::optional<Permutation>> gammas;
};

// Whether `fine` dominates `coarse` through the cover map v. Throws
// StructuralError unless both share base, fibers, m and group, and
// u_fine = u_coarse o v.
DominationReport Dominates(const ChartedMarking& fine,
                           const ChartedMarking& coarse,
                           const std::vector<int>& v);

struct CommonRefinement {
  ChartedMarking marking;
  // Projections of the fiber product onto each cover.
  std::vector<int> to_first;
  std::vector<int> to_second;
  DominationReport over_first;
  DominationReport over_second;
};

// Searches the fiber product of the two covers for a marking dominating both.
// Throws StructuralError unless base, fibers, m and group agree.
std::optional<CommonRefinement> Equivalent(const ChartedMarking& first,
                                           const ChartedMarking& second);

struct FiberMorphism {
  // Base map S1 -> S2.
  std::vector<int> base_map;
  // fiber_maps[s][p] is the point of D2_{h(s)} receiving point p of D1_s.
  std::vector<std::vector<int>> fiber_maps;

  static FiberMorphism Identity(const ChartedMarking& marking);
};

// g o f.
FiberMorphism Compose(const FiberMorphism& g, const FiberMorphism& f);

struct MorphismReport {
  // A witness exists at every point of the refinement S1' x_{S2} S2'.
  bool diamond_valid = false;
  struct PointWitness {
    int source_cover = 0;
    int target_cover = 0;
    std::optional<Permutation> gamma;
  };
  std::vector<PointWitness> points;
  // class(q) = class(F(q)) for every distinguished point q.
  bool class_preserving = false;
  std::vector<std::string> class_violations;

  bool agree() const { return diamond_valid == class_preserving; }
  std::string ToString(const ChartedMarking& source,
                       const ChartedMarking& target) const;
};

// Throws PreconditionError when either marking fails VerifyStar and
// StructuralError when the morphism does not fit the two markings.
MorphismReport VerifyMorphism(const FiberMorphism& morphism,
                              const ChartedMarking& source,
                              const ChartedMarking& target);

// For a trivial group the compatible markings agree on every fiber, giving
// one global marking per base point: result[s][i - 1]. Throws
// PreconditionError if the group is nontrivial or VerifyStar fails.
std::vector<std::vector<int>> GlobalizeTrivialGroup(
    const ChartedMarking& marking);

}  // namespace stablegraphs

#endif  // STABLEGRAPHS_DESCENT_H_
