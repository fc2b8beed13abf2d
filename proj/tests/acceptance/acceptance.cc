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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.h"
#include "fixtures.h"
#include "presentations.h"
#include "stablegraphs/canonical.h"
#include "stablegraphs/descent.h"
#include "stablegraphs/enumerate.h"
#include "stablegraphs/gamma.h"
#include "stablegraphs/graph.h"
#include "stablegraphs/strata.h"

namespace {

using namespace stablegraphs;

constexpr double kMaxCensusSeconds = 10.0;
constexpr int kMorphismFixtures = 400;
constexpr int kMinMorphismFixtures = 200;
constexpr int kMaxFixtureDegree = 5;
constexpr int kMaxFixtureBase = 4;
constexpr int kMaxFixtureFiber = 3;
constexpr int kRelabelings = 1000;
constexpr unsigned kSeed = 20260321;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const std::vector<std::pair<int, int>>& CensusFixtures() {
  static const std::vector<std::pair<int, int>> fixtures = {
      {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}};
  return fixtures;
}

std::shared_ptr<const PermGroup> Sym(int m) {
  return std::make_shared<const PermGroup>(PermGroup::Symmetric(m));
}

std::shared_ptr<const PermGroup> Trivial(int m) {
  return std::make_shared<const PermGroup>(PermGroup::Trivial(m));
}

Outcome CensusCounts() {
  Outcome out;
  const std::vector<std::tuple<int, int, std::size_t>> cases = {
      {0, 3, 1}, {0, 4, 4}, {1, 1, 2}, {0, 5, 26}};
  std::ostringstream detail;
  for (const auto& [g, m, expected] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const StratumCensus census = EnumerateStableGraphs(g, m);
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const std::vector<oracle::Key> brute = oracle::BruteCensus(g, m);
    std::set<oracle::Key> found;
    for (const StableGraph& graph : census.Flatten()) {
      found.insert(oracle::BruteKey(graph));
    }
    detail << "(" << g << "," << m << ")=" << census.total() << " ";
    if (census.total() != expected) out.Fail("wrong count " + detail.str());
    if (brute.size() != expected ||
        found != std::set<oracle::Key>(brute.begin(), brute.end())) {
      out.Fail("oracle disagrees at (" + std::to_string(g) + "," +
               std::to_string(m) + ")");
    }
    if (seconds >= kMaxCensusSeconds) out.Fail("too slow " + detail.str());
  }
  if (out.pass) out.detail = detail.str() + "match oracle";
  return out;
}

Outcome GammaCounts() {
  Outcome out;
  const std::size_t full = EnumerateGammaStrata(0, 4, Sym(4)).total();
  const std::size_t klein =
      EnumerateGammaStrata(0, 4, fixtures::Group(4, "(1 2),(3 4)")).total();
  if (full != 2) out.Fail("(0,4,S4) gave " + std::to_string(full));
  if (klein != 3) out.Fail("(0,4,<(12),(34)>) gave " + std::to_string(klein));
  for (const auto& [g, m] : CensusFixtures()) {
    if (m == 0) continue;
    const GammaCensus trivial = EnumerateGammaStrata(g, m, Trivial(m));
    if (trivial.total() != trivial.labeled.total()) {
      out.Fail("trivial group changes the count at (" + std::to_string(g) +
               "," + std::to_string(m) + ")");
    }
  }
  const auto brute = oracle::BruteCensus(0, 4);
  if (oracle::BruteGammaCount(brute, PermGroup::Symmetric(4)) != full ||
      oracle::BruteGammaCount(brute, *fixtures::Group(4, "(1 2),(3 4)")) !=
          klein) {
    out.Fail("oracle disagrees on (0,4) quotients");
  }
  if (out.pass) {
    out.detail = "S4 -> " + std::to_string(full) + ", <(12),(34)> -> " +
                 std::to_string(klein) + ", trivial group = labeled census";
  }
  return out;
}

std::vector<std::tuple<int, int, std::string>> QuotientFixtures() {
  return {{0, 4, "sym"},         {0, 4, "(1 2),(3 4)"}, {0, 4, "(1 2)"},
          {0, 4, "(1 2 3 4)"},   {0, 4, "(1 2)(3 4)"},  {0, 5, "sym"},
          {0, 5, "(1 2),(3 4 5)"}, {0, 5, "(1 2 3 4 5)"}, {0, 6, "(1 2)(3 4)(5 6)"},
          {1, 2, "sym"},         {1, 3, "(1 2 3)"},     {1, 3, "sym"},
          {2, 1, ""}};
}

Outcome OrbitStabilizer() {
  Outcome out;
  std::size_t classes = 0;
  for (const auto& [g, m, gens] : QuotientFixtures()) {
    const auto group = fixtures::Group(m, gens);
    const GammaCensus census = EnumerateGammaStrata(g, m, group);
    const QuotientTable table = QuotientTableFromCensus(census);
    const std::string name = "(" + std::to_string(g) + "," + std::to_string(m) +
                             ",<" + gens + ">)";
    if (!table.Consistent()) out.Fail("table inconsistent for " + name);
    for (const QuotientRow& row : table.rows) {
      std::size_t sum = 0;
      for (std::size_t k = 0; k < row.orbit_sizes.size(); ++k) {
        sum += row.orbit_sizes[k];
        if (row.orbit_sizes[k] * row.stabilizer_orders[k] != group->order()) {
          out.Fail("orbit x stabilizer != |G| in " + name);
        }
      }
      if (sum != row.labeled) out.Fail("orbit sizes do not sum in " + name);
    }
    for (const auto& row : census.by_nodes) {
      for (const GammaClass& cls : row) {
        ++classes;
        if (oracle::BruteStabilizerOrder(oracle::FromStable(cls.representative),
                                         *group) != cls.stabilizer_order()) {
          out.Fail("stabilizer differs from oracle in " + name);
        }
      }
    }
  }
  if (out.pass) {
    out.detail = std::to_string(classes) + " classes over " +
                 std::to_string(QuotientFixtures().size()) + " tables";
  }
  return out;
}

Outcome DescentFixtures() {
  Outcome out;
  const ChartedMarking klein =
      fixtures::IntroMarking(fixtures::Group(4, "(1 2),(3 4)"));
  const StarReport good = VerifyStar(klein);
  const Permutation expected = Permutation::Parse("(1 2)(3 4)", 4);
  if (!good.valid || !good.unique) out.Fail("Klein group fixture rejected");
  for (const PairWitness& pair : good.pairs) {
    if (pair.first != pair.second &&
        (pair.matches != 1 || !pair.gamma || *pair.gamma != expected)) {
      out.Fail("witness is not the unique (1 2)(3 4)");
    }
  }
  const ChartedMarking z2 = fixtures::IntroMarking(fixtures::Group(4, "(1 2)"));
  if (VerifyStar(z2).valid) out.Fail("<(12)> fixture accepted");
  if (good.valid) {
    std::set<std::vector<int>> classes;
    const auto labels = ClassFunction(klein);
    for (const auto& per_point : labels[0]) {
      classes.insert(per_point.orbit);
    }
    if (classes != std::set<std::vector<int>>{{1, 2}, {3, 4}}) {
      out.Fail("class function is not {1,2}, {3,4}");
    }
  }
  if (out.pass) out.detail = "witness (1 2)(3 4), <(12)> rejected, classes {1,2} {3,4}";
  return out;
}

struct MorphismTally {
  int fixtures = 0;
  int agree = 0;
  int diamond_true = 0;
  int classes_true = 0;
  // Witness found but some class changed.
  int witness_without_classes = 0;
  std::string first_disagreement;
};

MorphismTally RunMorphismFixtures(std::mt19937& rng, bool young_only) {
  MorphismTally tally;
  std::uniform_int_distribution<int> degree(1, kMaxFixtureDegree);
  std::uniform_int_distribution<int> base(1, kMaxFixtureBase);
  std::bernoulli_distribution structured(0.5);
  while (tally.fixtures < kMorphismFixtures) {
    const int m = degree(rng);
    const auto group = young_only ? fixtures::RandomYoungSubgroup(rng, m)
                                  : fixtures::RandomSubgroup(rng, m);
    const int n1 = base(rng);
    const int n2 = std::uniform_int_distribution<int>(1, kMaxFixtureBase)(rng);
    const auto source = fixtures::RandomCompatibleMarking(rng, group, n1,
                                                          kMaxFixtureFiber, "a");
    const auto target = fixtures::RandomCompatibleMarking(rng, group, n2,
                                                          kMaxFixtureFiber, "b");
    const FiberMorphism f =
        fixtures::RandomMorphism(rng, source, target, structured(rng));
    const MorphismReport report = VerifyMorphism(f, source.marking, target.marking);
    const bool classes = fixtures::PreservesClasses(f, source.marking, target.marking);
    ++tally.fixtures;
    tally.diamond_true += report.diamond_valid;
    tally.classes_true += classes;
    tally.witness_without_classes += report.diamond_valid && !classes;
    if (report.diamond_valid == classes) {
      ++tally.agree;
    } else if (tally.first_disagreement.empty()) {
      std::ostringstream s;
      s << "m=" << m << " group=<" << FormatGenerators(group->generators())
        << "> witness=" << (report.diamond_valid ? "yes" : "no")
        << " classes=" << (classes ? "preserved" : "changed");
      tally.first_disagreement = s.str();
    }
  }
  return tally;
}

Outcome MorphismEquivalence(std::string& note) {
  Outcome out;
  std::mt19937 rng(kSeed);
  const MorphismTally all = RunMorphismFixtures(rng, false);
  const MorphismTally young = RunMorphismFixtures(rng, true);
  std::ostringstream s;
  s << all.agree << "/" << all.fixtures << " agree (witness true "
    << all.diamond_true << ", classes preserved " << all.classes_true << ", witness without classes "
    << all.witness_without_classes << ")";
  out.detail = s.str();
  if (all.fixtures < kMinMorphismFixtures) out.Fail("too few fixtures");
  if (all.agree != all.fixtures) {
    out.pass = false;
    out.detail += "; first disagreement: " + all.first_disagreement;
  }
  std::ostringstream n;
  n << "subgroups that are full symmetric groups on their orbits: "
    << young.agree << "/" << young.fixtures << " agree";
  note = n.str();
  return out;
}

template <typename T, typename Rel>
std::string CheckLaws(const std::vector<T>& items, const Rel& related) {
  const std::size_t n = items.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r[i][j] = related(items[i], items[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!r[i][i]) return "not reflexive at " + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (r[i][j] != r[j][i]) return "not symmetric";
      for (std::size_t k = 0; k < n; ++k) {
        if (r[i][j] && r[j][k] && !r[i][k]) {
          return "not transitive at (" + std::to_string(i) + "," +
                 std::to_string(j) + "," + std::to_string(k) + ")";
        }
      }
    }
  }
  return "";
}

Outcome EquivalenceLaws() {
  Outcome out;
  std::mt19937 rng(kSeed + 1);
  std::size_t graph_items = 0;
  for (const auto& [g, m, gens] : QuotientFixtures()) {
    if (m > 5) continue;
    const auto group = fixtures::Group(m, gens);
    std::vector<StableGraph> items;
    for (const StableGraph& graph : EnumerateStableGraphs(g, m).Flatten()) {
      items.push_back(graph);
      items.push_back(fixtures::RandomPresentation(rng, graph));
    }
    graph_items += items.size();
    const std::string failure =
        CheckLaws(items, [&](const StableGraph& a, const StableGraph& b) {
          return GammaEquivalent(a, b, *group).has_value();
        });
    if (!failure.empty()) out.Fail("gamma_equivalent " + failure);
  }
  std::size_t marking_items = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    const int num_base = std::uniform_int_distribution<int>(1, 3)(rng);
    const auto group = fixtures::RandomSubgroup(rng, m);
    const std::vector<std::vector<std::vector<int>>> chart_choices = {
        fixtures::RandomCharts(rng, m, num_base),
        fixtures::RandomCharts(rng, m, num_base)};
    std::vector<ChartedMarking> items;
    for (int k = 0; k < 6; ++k) {
      items.push_back(fixtures::CompatibleMarking(rng, group, chart_choices[k % 2],
                                                  kMaxFixtureFiber, "d")
                          .marking);
    }
    marking_items += items.size();
    const std::string failure =
        CheckLaws(items, [](const ChartedMarking& a, const ChartedMarking& b) {
          return Equivalent(a, b).has_value();
        });
    if (!failure.empty()) out.Fail("descent equivalence " + failure);
  }
  if (out.pass) {
    out.detail = std::to_string(graph_items) + " graphs, " +
                 std::to_string(marking_items) + " markings";
  }
  return out;
}

Outcome Numerology() {
  Outcome out;
  int cases = 0;
  for (int n = 3; n <= 6; ++n) {
    for (int g = 0; g <= 5; ++g) {
      for (int m = 0; m <= 6; ++m) {
        if (2 * g - 2 + m <= 0) continue;
        ++cases;
        const HilbertNumerology h = ComputeHilbertNumerology(g, n, m);
        const long long d = 2LL * g - 2 + m;
        if (h.rank != h.projective_dimension + 1) out.Fail("rank != N + 1");
        if (h.projective_dimension != h.Evaluate(1) - 1) out.Fail("N != P(1) - 1");
        for (long long t = -3; t <= 3; ++t) {
          if (h.Evaluate(t) != d * n * t - g + 1) out.Fail("P(t) mismatch");
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(cases) + " triples";
  return out;
}

Outcome SplittingStability() {
  Outcome out;
  std::size_t splits = 0;
  for (const auto& [g, m] : CensusFixtures()) {
    for (const StableGraph& graph : EnumerateStableGraphs(g, m).Flatten()) {
      for (const ComponentSplit& split : ComponentCensus(graph)) {
        ++splits;
        if (!CheckStability(split.component).valid ||
            !oracle::BruteStable(oracle::FromStable(split.component))) {
          out.Fail("unstable split of a (" + std::to_string(g) + "," +
                   std::to_string(m) + ") graph");
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(splits) + " components";
  return out;
}

Outcome CanonicalSoundness() {
  Outcome out;
  std::mt19937 rng(kSeed + 2);
  std::vector<StableGraph> pool;
  for (const auto& [g, m] : CensusFixtures()) {
    for (const StableGraph& graph : EnumerateStableGraphs(g, m).Flatten()) {
      pool.push_back(graph);
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < kRelabelings; ++trial) {
    const StableGraph& graph = pool[pick(rng)];
    const StableGraph variant = fixtures::RandomPresentation(rng, graph);
    const StableGraph canon = CanonicalForm(graph);
    if (CanonicalForm(variant) != canon) out.Fail("canonical form not invariant");
    if (CanonicalForm(canon) != canon) out.Fail("canonical form not idempotent");
    if (oracle::BruteKey(canon) != oracle::BruteKey(graph)) {
      out.Fail("canonical form changes the class");
    }
    if (graph.num_legs() == 0) continue;
    const auto group = fixtures::RandomSubgroup(rng, graph.num_legs());
    const StableGraph moved = fixtures::RandomPresentation(
        rng, graph.RelabelLegs(fixtures::RandomElement(rng, *group)));
    const StableGraph gcanon = GammaCanonicalForm(graph, *group);
    if (GammaCanonicalForm(moved, *group) != gcanon) {
      out.Fail("gamma canonical form not invariant");
    }
    if (GammaCanonicalForm(gcanon, *group) != gcanon) {
      out.Fail("gamma canonical form not idempotent");
    }
    if (oracle::BruteGammaKey(oracle::FromStable(gcanon), *group) !=
        oracle::BruteGammaKey(oracle::FromStable(graph), *group)) {
      out.Fail("gamma canonical form changes the class");
    }
  }
  if (out.pass) {
    out.detail = std::to_string(kRelabelings) + " presentations over " +
                 std::to_string(pool.size()) + " graphs";
  }
  return out;
}

}  // namespace

int main() {
  std::string note;
  const std::vector<std::function<Outcome()>> criteria = {
      CensusCounts,       GammaCounts,        OrbitStabilizer,
      DescentFixtures,    [&] { return MorphismEquivalence(note); },
      EquivalenceLaws,    Numerology,         SplittingStability,
      CanonicalSoundness};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    try {
      outcome = criteria[k]();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    failures += !outcome.pass;
    std::printf("criterion %zu: %s  %s\n", k + 1, outcome.pass ? "PASS" : "FAIL",
                outcome.detail.c_str());
    if (k == 4 && !note.empty()) std::printf("  note: %s\n", note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
