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

#include "stablegraphs/perm.h"

#include <cctype>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace stablegraphs {

namespace {

void CheckDegree(int degree) {
  if (degree <= 0) throw InputError("permutation degree must be positive");
  if (degree > kMaxPermutationDegree) {
    throw SizeError("permutation degree " + std::to_string(degree) +
                    " exceeds " + std::to_string(kMaxPermutationDegree));
  }
}

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Permutation Permutation::Identity(int degree) {
  CheckDegree(degree);
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::FromImages(std::vector<int> images) {
  CheckDegree(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v]) {
      throw InputError("image sequence is not a bijection of {1,...,m}");
    }
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::FromCycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p = Identity(degree);
  std::vector<bool> used(degree + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      if (from < 1 || from > degree) {
        throw InputError("label " + std::to_string(from) +
                         " out of range 1.." + std::to_string(degree));
      }
      if (used[from]) {
        throw InputError("cycles are not disjoint at label " +
                         std::to_string(from));
      }
      used[from] = true;
      p.images_[from - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::Parse(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& what) -> InputError {
    return InputError("bad permutation \"" + std::string(text) + "\" at " +
                      std::to_string(pos) + ": " + what);
  };
  skip_space();
  if (pos == text.size()) throw fail("empty text; the identity is \"()\"");
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos == text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw fail("expected a label");
      }
      int value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1000000) throw fail("label too large");
        ++pos;
      }
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return FromCycles(degree, cycles);
}

Permutation Permutation::Inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i] - 1] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

bool Permutation::IsIdentity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::ToCycleString() const {
  std::string out;
  std::vector<bool> done(images_.size() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (done[start] || (*this)(start) == start) continue;
    out += '(';
    int i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i);
      first = false;
      i = (*this)(i);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::uint64_t Permutation::Key() const {
  std::uint64_t key = 0;
  for (int v : images_) key = (key << 4) | static_cast<std::uint64_t>(v - 1);
  return key;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw StructuralError("composing permutations of different degree");
  }
  std::vector<int> images(a.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = a.images_[b.images_[i] - 1];
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> ParseGenerators(std::string_view text, int degree) {
  CheckDegree(degree);
  const std::string all = Trim(text);
  std::vector<Permutation> gens;
  if (all.empty()) return gens;
  if (all == "sym") {
    for (int i = 1; i < degree; ++i) {
      gens.push_back(Permutation::FromCycles(degree, {{i, i + 1}}));
    }
    return gens;
  }
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = all.find(',', start);
    const std::string piece =
        Trim(std::string_view(all).substr(start, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - start));
    gens.push_back(Permutation::Parse(piece, degree));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return gens;
}

std::string FormatGenerators(std::span<const Permutation> generators) {
  if (generators.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i > 0) out += ',';
    out += generators[i].ToCycleString();
  }
  return out;
}

PermGroup PermGroup::FromGenerators(int degree,
                                    std::vector<Permutation> generators,
                                    std::size_t max_order) {
  CheckDegree(degree);
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw InputError("generator " + g.ToCycleString() + " has degree " +
                       std::to_string(g.degree()) + ", expected " +
                       std::to_string(degree));
    }
  }
  const Permutation identity = Permutation::Identity(degree);
  std::vector<Permutation> elements{identity};
  std::unordered_set<std::uint64_t> seen{identity.Key()};
  // Right multiplication by generators reaches every word in them.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Permutation& g : generators) {
      Permutation next = elements[head] * g;
      if (seen.insert(next.Key()).second) {
        if (elements.size() >= max_order) {
          throw SizeError("group order exceeds bound " +
                          std::to_string(max_order));
        }
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return PermGroup(degree, std::move(generators), std::move(elements));
}

PermGroup PermGroup::FromElements(int degree,
                                  std::vector<Permutation> elements,
                                  bool verify_closure) {
  CheckDegree(degree);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().IsIdentity()) {
    throw StructuralError("element set does not contain the identity");
  }
  for (const Permutation& a : elements) {
    if (a.degree() != degree) {
      throw StructuralError("element of wrong degree");
    }
    if (!verify_closure) continue;
    for (const Permutation& b : elements) {
      if (!std::binary_search(elements.begin(), elements.end(), a * b)) {
        throw StructuralError("element set is not closed under composition");
      }
    }
  }
  std::vector<Permutation> generators(elements.begin() + 1, elements.end());
  return PermGroup(degree, std::move(generators), std::move(elements));
}

PermGroup PermGroup::Trivial(int degree) { return FromGenerators(degree, {}); }

PermGroup PermGroup::Symmetric(int degree, std::size_t max_order) {
  return FromGenerators(degree, ParseGenerators("sym", degree), max_order);
}

PermGroup PermGroup::SymmetricOn(int degree, const std::vector<int>& labels,
                                 std::size_t max_order) {
  std::vector<Permutation> gens;
  for (std::size_t k = 1; k < labels.size(); ++k) {
    gens.push_back(
        Permutation::FromCycles(degree, {{labels[k - 1], labels[k]}}));
  }
  return FromGenerators(degree, std::move(gens), max_order);
}

bool PermGroup::Contains(const Permutation& p) const {
  return p.degree() == degree_ &&
         std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<int> PermGroup::Orbit(int label) const {
  if (label < 1 || label > degree_) {
    throw InputError("label " + std::to_string(label) + " out of range 1.." +
                     std::to_string(degree_));
  }
  std::vector<int> orbit;
  for (const Permutation& g : elements_) orbit.push_back(g(label));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

std::vector<std::vector<int>> PermGroup::Orbits() const {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> covered(degree_ + 1, false);
  for (int i = 1; i <= degree_; ++i) {
    if (covered[i]) continue;
    orbits.push_back(Orbit(i));
    for (int j : orbits.back()) covered[j] = true;
  }
  return orbits;
}

Bounds Bounds::FromEnvironment() {
  Bounds bounds;
  if (const char* env = std::getenv("GS_MAX_SIZE"); env != nullptr) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value <= 0) {
      throw InputError("GS_MAX_SIZE must be a positive integer");
    }
    bounds.max_dimension = static_cast<int>(value);
  }
  return bounds;
}

}  // namespace stablegraphs
