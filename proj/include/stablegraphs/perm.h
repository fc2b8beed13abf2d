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

// Permutations of {1, ..., m} and finite subgroups of the symmetric group.
//
// Composition convention: (a * b)(i) = a(b(i)). A permutation acts on a
// labeling x (a sequence indexed by labels) by moving the entry at position i
// to position gamma(i):  (gamma . x)[gamma(i)] = x[i].

#ifndef STABLEGRAPHS_PERM_H_
#define STABLEGRAPHS_PERM_H_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stablegraphs/error.h"

namespace stablegraphs {

// Largest degree the closure code can encode in a 64-bit key.
inline constexpr int kMaxPermutationDegree = 16;

class Permutation {
 public:
  Permutation() = default;

  static Permutation Identity(int degree);
  // `images` are 1-based: images[i - 1] is the image of i.
  static Permutation FromImages(std::vector<int> images);
  // Disjoint cycles of 1-based labels.
  static Permutation FromCycles(int degree,
                                const std::vector<std::vector<int>>& cycles);
  // Cycle notation, e.g. "(1 2)(3 4)"; the identity is "()".
  static Permutation Parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  // Image of the 1-based label i.
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation Inverse() const;
  bool IsIdentity() const;
  std::string ToCycleString() const;
  // Injective key for degree <= kMaxPermutationDegree.
  std::uint64_t Key() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// Comma-separated generators in cycle notation, e.g. "(1 2),(3 4)". The
// empty string means no generators; the keyword "sym" expands to the adjacent
// transpositions generating the full symmetric group. FormatGenerators writes
// "()" for an empty list.
std::vector<Permutation> ParseGenerators(std::string_view text, int degree);
std::string FormatGenerators(std::span<const Permutation> generators);

class PermGroup {
 public:
  // Smallest subgroup containing `generators`, by breadth-first closure.
  // Throws SizeError once the closure would exceed `max_order` elements.
  static PermGroup FromGenerators(
      int degree, std::vector<Permutation> generators,
      std::size_t max_order = Bounds{}.max_group_order);
  // Wraps an element set that is already a group. Closure is checked in
  // quadratic time unless `verify_closure` is false.
  static PermGroup FromElements(int degree, std::vector<Permutation> elements,
                                bool verify_closure = true);
  static PermGroup Trivial(int degree);
  static PermGroup Symmetric(int degree,
                             std::size_t max_order = Bounds{}.max_group_order);
  // Full symmetric group on `labels`, fixing every other label.
  static PermGroup SymmetricOn(int degree, const std::vector<int>& labels,
                               std::size_t max_order = Bounds{}.max_group_order);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  // Sorted lexicographically by images; elements().front() is the identity.
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool IsTrivial() const { return elements_.size() == 1; }
  bool Contains(const Permutation& p) const;

  // {gamma(i) : gamma in group}, sorted.
  std::vector<int> Orbit(int label) const;
  // Orbits ordered by their smallest label.
  std::vector<std::vector<int>> Orbits() const;

 private:
  PermGroup(int degree, std::vector<Permutation> generators,
            std::vector<Permutation> elements)
      : degree_(degree),
        generators_(std::move(generators)),
        elements_(std::move(elements)) {}

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

// (gamma . x)[gamma(i)] = x[i].
template <typename T>
std::vector<T> Act(const Permutation& gamma, std::span<const T> labeling) {
  if (static_cast<int>(labeling.size()) != gamma.degree()) {
    throw StructuralError("labeling length does not match permutation degree");
  }
  std::vector<T> out(labeling.size());
  for (int i = 1; i <= gamma.degree(); ++i) {
    out[gamma(i) - 1] = labeling[i - 1];
  }
  return out;
}

// Elements fixing the labeling, where two entries are the same slot iff they
// compare equal. The result is a subgroup of `group`.
template <typename T>
PermGroup Stabilizer(const PermGroup& group, std::span<const T> labeling) {
  if (static_cast<int>(labeling.size()) != group.degree()) {
    throw StructuralError("labeling length does not match group degree");
  }
  std::vector<Permutation> fixing;
  for (const Permutation& gamma : group.elements()) {
    bool fixes = true;
    for (int i = 1; i <= group.degree() && fixes; ++i) {
      fixes = labeling[gamma(i) - 1] == labeling[i - 1];
    }
    if (fixes) fixing.push_back(gamma);
  }
  return PermGroup::FromElements(group.degree(), std::move(fixing),
                                /*verify_closure=*/false);
}

// The distinct labelings gamma . x, sorted.
template <typename T>
std::vector<std::vector<T>> LabelingOrbit(const PermGroup& group,
                                          std::span<const T> labeling) {
  std::vector<std::vector<T>> orbit;
  orbit.reserve(group.order());
  for (const Permutation& gamma : group.elements()) {
    orbit.push_back(Act(gamma, labeling));
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

// Lexicographically least element of the orbit of `labeling`.
template <typename T>
std::vector<T> CanonicalRep(const PermGroup& group,
                            std::span<const T> labeling) {
  std::vector<T> best(labeling.begin(), labeling.end());
  for (const Permutation& gamma : group.elements()) {
    std::vector<T> candidate = Act(gamma, labeling);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace stablegraphs

#endif  // STABLEGRAPHS_PERM_H_
