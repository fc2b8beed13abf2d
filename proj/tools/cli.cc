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

#include "cli.h"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "stablegraphs/canonical.h"
#include "stablegraphs/descent.h"
#include "stablegraphs/descent_io.h"
#include "stablegraphs/enumerate.h"
#include "stablegraphs/error.h"
#include "stablegraphs/gamma.h"
#include "stablegraphs/graph.h"
#include "stablegraphs/graph_io.h"
#include "stablegraphs/strata.h"

namespace stablegraphs {
namespace {

struct Verdict {
  std::string document;
  int status = kExitOk;
};

std::string Slurp(std::istream& stream) {
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

// A path, "-" for standard input, or (for graphs) an inline JSON document.
std::string ReadSource(const std::string& arg, std::istream& in,
                       bool allow_inline) {
  if (arg == "-") return Slurp(in);
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (allow_inline && first != std::string::npos && arg[first] == '{') {
    return arg;
  }
  std::ifstream file(arg, std::ios::binary);
  if (!file) throw InputError("cannot open \"" + arg + "\"");
  return Slurp(file);
}

std::shared_ptr<const PermGroup> GroupFromFlag(const std::string& text,
                                               int degree,
                                               const Bounds& bounds) {
  return std::make_shared<const PermGroup>(PermGroup::FromGenerators(
      degree, ParseGenerators(text, degree), bounds.max_group_order));
}

int ParseVertex(const std::string& text, const StableGraph& graph) {
  std::string digits = text;
  if (!digits.empty() && digits.front() == 'v') digits.erase(0, 1);
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(digits, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (digits.empty() || used != digits.size() || v < 0 ||
      v >= graph.num_vertices()) {
    throw InputError("no vertex \"" + text + "\" in the graph");
  }
  return v;
}

Verdict StabilityVerdict(const StableGraph& graph) {
  const StabilityReport report = CheckStability(graph);
  std::string out = "genus=" + std::to_string(graph.genus()) +
                    " legs=" + std::to_string(graph.num_legs()) +
                    " nodes=" + std::to_string(graph.num_nodes()) + "\n";
  if (!report.global_bound) out += "violation: 2g-2+m is not positive\n";
  for (int v : report.violating_vertices) {
    out += "violation: v" + std::to_string(v) + " has genus 0 and " +
           std::to_string(graph.special_points(v)) + " special points\n";
  }
  out += report.valid ? "stable\n" : "unstable\n";
  return {out, report.valid ? kExitOk : kExitNegative};
}

std::string ClassLines(const ChartedMarking& marking) {
  const auto classes = ClassFunction(marking);
  std::string out;
  for (int s = 0; s < marking.cover().num_base(); ++s) {
    out += "classes over " + marking.cover().base_names()[s] + ":";
    for (int p = 0; p < marking.m(); ++p) {
      out += " " + marking.fiber_points()[s][p] + "{";
      const auto& orbit = classes[s][p].orbit;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        out += (k ? "," : "") + std::to_string(orbit[k]);
      }
      out += "}";
    }
    out += "\n";
  }
  return out;
}

Verdict DescentVerdict(const ChartedMarking& marking) {
  const StarReport report = VerifyStar(marking);
  std::string out = report.ToString(marking);
  for (const std::string& v : report.violations) out += "violation: " + v + "\n";
  if (report.valid) out += ClassLines(marking);
  return {out, report.valid ? kExitOk : kExitNegative};
}

Verdict EquivalenceVerdict(const ChartedMarking& a, const ChartedMarking& b) {
  const std::optional<CommonRefinement> common = Equivalent(a, b);
  if (!common) return {"not equivalent\n", kExitNegative};
  const auto& names = common->marking.cover().cover_names();
  std::string out;
  for (std::size_t c = 0; c < names.size(); ++c) {
    out += names[c] + " -> " + a.cover().cover_names()[common->to_first[c]] +
           ", " + b.cover().cover_names()[common->to_second[c]] + "\n";
  }
  out += "equivalent\n";
  return {out, kExitOk};
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable graphs, group-marked strata and descent data", "gs"};
  app.require_subcommand(1);
  app.fallthrough();

  Bounds bounds;
  try {
    bounds = Bounds::FromEnvironment();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string output_path;
  app.add_option("-o,--output", output_path, "Write the result to a file");
  app.add_option("--max-m", bounds.max_degree, "Largest number of legs")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-dim", bounds.max_dimension, "Largest 3g-3+m")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-group-order", bounds.max_group_order,
                 "Largest group order")
      ->check(CLI::PositiveNumber);

  int g = 0;
  int m = 0;
  int n = 0;
  std::string group_text;
  std::string graph_arg;
  std::string vertex_arg;
  std::string file1;
  std::string file2;
  std::function<Verdict()> action;

  auto* enumerate = app.add_subcommand("enumerate", "Census of stable graphs");
  enumerate->add_option("g", g)->required();
  enumerate->add_option("m", m)->required();
  enumerate->callback([&] {
    action = [&] {
      return Verdict{Dump(CensusToJson(EnumerateStableGraphs(g, m, bounds))),
                     kExitOk};
    };
  });

  auto* gamma_enumerate =
      app.add_subcommand("gamma-enumerate", "Census of group-marked strata");
  gamma_enumerate->add_option("g", g)->required();
  gamma_enumerate->add_option("m", m)->required();
  gamma_enumerate->add_option("--group", group_text)->required();
  gamma_enumerate->callback([&] {
    action = [&] {
      CheckCensusBounds(g, m, bounds);
      auto group = GroupFromFlag(group_text, m, bounds);
      return Verdict{
          Dump(GammaCensusToJson(EnumerateGammaStrata(g, m, group, bounds))),
          kExitOk};
    };
  });

  auto* check = app.add_subcommand("check-stability", "Check a stable graph");
  check->add_option("graph", graph_arg)->required();
  check->callback([&] {
    action = [&] { return StabilityVerdict(ReadGraph(ReadSource(graph_arg, in, true))); };
  });

  auto* canon = app.add_subcommand("canon", "Canonical form of a graph");
  canon->add_option("graph", graph_arg)->required();
  canon->add_option("--group", group_text);
  canon->callback([&] {
    action = [&] {
      const StableGraph graph = ReadGraph(ReadSource(graph_arg, in, true));
      if (group_text.empty()) return Verdict{WriteGraph(CanonicalForm(graph)), kExitOk};
      auto group = GroupFromFlag(group_text, graph.num_legs(), bounds);
      return Verdict{WriteGraph(GammaCanonicalForm(graph, *group)), kExitOk};
    };
  });

  auto* split = app.add_subcommand("split", "Split off one component");
  split->add_option("graph", graph_arg)->required();
  split->add_option("--vertex", vertex_arg)->required();
  split->callback([&] {
    action = [&] {
      const StableGraph graph = ReadGraph(ReadSource(graph_arg, in, true));
      const ComponentSplit result =
          SplitComponent(graph, ParseVertex(vertex_arg, graph), bounds);
      return Verdict{Dump(SplitToJson(result)),
                     result.stability.valid ? kExitOk : kExitNegative};
    };
  });

  auto* verify = app.add_subcommand("verify-descent", "Check a charted marking");
  verify->add_option("file", file1)->required();
  verify->callback([&] {
    action = [&] {
      return DescentVerdict(ReadChartedMarking(ReadSource(file1, in, false), bounds));
    };
  });

  auto* equiv = app.add_subcommand("equiv-descent", "Compare two charted markings");
  equiv->add_option("file1", file1)->required();
  equiv->add_option("file2", file2)->required();
  equiv->callback([&] {
    action = [&] {
      const ChartedMarking a = ReadChartedMarking(ReadSource(file1, in, false), bounds);
      const ChartedMarking b = ReadChartedMarking(ReadSource(file2, in, false), bounds);
      return EquivalenceVerdict(a, b);
    };
  });

  auto* morphism = app.add_subcommand("verify-morphism", "Check a morphism of markings");
  morphism->add_option("file", file1)->required();
  morphism->callback([&] {
    action = [&] {
      const MorphismDocument doc =
          ReadMorphismDocument(ReadSource(file1, in, false), bounds);
      const MorphismReport report =
          VerifyMorphism(doc.morphism, doc.source, doc.target);
      return Verdict{report.ToString(doc.source, doc.target),
                     report.diamond_valid ? kExitOk : kExitNegative};
    };
  });

  auto* table = app.add_subcommand("quotient-table", "Per-stratum quotient counts");
  table->add_option("g", g)->required();
  table->add_option("m", m)->required();
  table->add_option("--group", group_text)->required();
  table->callback([&] {
    action = [&] {
      CheckCensusBounds(g, m, bounds);
      const QuotientTable result =
          BuildQuotientTable(g, m, GroupFromFlag(group_text, m, bounds), bounds);
      return Verdict{result.ToString(),
                     result.Consistent() ? kExitOk : kExitNegative};
    };
  });

  auto* numerology = app.add_subcommand("numerology", "Hilbert polynomial data");
  numerology->add_option("g", g)->required();
  numerology->add_option("n", n)->required();
  numerology->add_option("m", m)->required();
  numerology->callback([&] {
    action = [&] {
      return Verdict{ComputeHilbertNumerology(g, n, m).ToString() + "\n", kExitOk};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Verdict verdict;
  try {
    verdict = action();
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (output_path.empty()) {
    out << verdict.document;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    file << verdict.document;
    if (!file) {
      err << "error: cannot write \"" << output_path << "\"\n";
      return kExitUsage;
    }
  }
  return verdict.status;
}

}  // namespace stablegraphs
