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

#include "stablegraphs/descent_io.h"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace stablegraphs {

namespace {

struct Line {
  int number = 0;
  std::string keyword;
  std::string rest;
};

struct Section {
  std::string name;
  int header_line = 0;
  std::vector<Line> lines;
};

InputError LineError(int line, const std::string& what) {
  return InputError("line " + std::to_string(line) + ": " + what);
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> Words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Splits "head: tail" at the first colon.
std::pair<std::string, std::string> SplitColon(const Line& line) {
  const auto colon = line.rest.find(':');
  if (colon == std::string::npos) {
    throw LineError(line.number, "expected '<id>: ...' after '" + line.keyword + "'");
  }
  return {Trim(line.rest.substr(0, colon)), line.rest.substr(colon + 1)};
}

// "a -> b" as a pair of single words.
std::pair<std::string, std::string> SplitArrow(const Line& line) {
  const std::vector<std::string> w = Words(line.rest);
  if (w.size() != 3 || w[1] != "->") {
    throw LineError(line.number, "expected '" + line.keyword + " <id> -> <id>'");
  }
  return {w[0], w[2]};
}

std::vector<Section> SplitSections(std::string_view text) {
  std::vector<Section> sections(1);
  std::istringstream in{std::string(text)};
  int number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    const auto hash = raw.find('#');
    const std::string body = Trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']' || body.size() < 3) {
        throw LineError(number, "bad section header \"" + body + "\"");
      }
      sections.push_back({Trim(body.substr(1, body.size() - 2)), number, {}});
      continue;
    }
    const auto space = body.find_first_of(" \t");
    Line line{number, body.substr(0, space),
              space == std::string::npos ? "" : Trim(body.substr(space + 1))};
    sections.back().lines.push_back(std::move(line));
  }
  return sections;
}

int ParseInt(const Line& line, const std::string& word) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != word.size() || word.empty()) {
    throw LineError(line.number, "expected an integer, got \"" + word + "\"");
  }
  return value;
}

ChartedMarking BuildMarking(const Section& section, const Bounds& bounds) {
  std::optional<int> m;
  std::optional<Line> group_line;
  std::vector<std::string> base;
  std::map<std::string, int> base_index;
  std::map<std::string, std::pair<int, std::vector<std::string>>> fibers;
  std::vector<std::string> cover;
  std::vector<std::pair<int, std::string>> cover_image;
  std::map<std::string, int> cover_index;
  std::map<std::string, std::pair<int, std::vector<std::string>>> sigmas;

  for (const Line& line : section.lines) {
    if (line.keyword == "m") {
      if (m) throw LineError(line.number, "'m' given twice");
      const std::vector<std::string> w = Words(line.rest);
      if (w.size() != 1) throw LineError(line.number, "expected 'm <int>'");
      m = ParseInt(line, w[0]);
      if (*m <= 0) throw LineError(line.number, "m must be positive");
    } else if (line.keyword == "group") {
      if (group_line) throw LineError(line.number, "'group' given twice");
      group_line = line;
    } else if (line.keyword == "base") {
      const std::vector<std::string> w = Words(line.rest);
      if (w.empty()) throw LineError(line.number, "expected 'base <id>...'");
      for (const std::string& id : w) {
        if (!base_index.emplace(id, static_cast<int>(base.size())).second) {
          throw LineError(line.number, "base point \"" + id + "\" repeated");
        }
        base.push_back(id);
      }
    } else if (line.keyword == "fiber") {
      auto [id, tail] = SplitColon(line);
      if (!fibers.emplace(id, std::pair(line.number, Words(tail))).second) {
        throw LineError(line.number, "fiber over \"" + id + "\" given twice");
      }
    } else if (line.keyword == "cover") {
      auto [id, target] = SplitArrow(line);
      if (!cover_index.emplace(id, static_cast<int>(cover.size())).second) {
        throw LineError(line.number, "cover point \"" + id + "\" repeated");
      }
      cover.push_back(id);
      cover_image.emplace_back(line.number, target);
    } else if (line.keyword == "sigma") {
      auto [id, tail] = SplitColon(line);
      if (!sigmas.emplace(id, std::pair(line.number, Words(tail))).second) {
        throw LineError(line.number, "marking of \"" + id + "\" given twice");
      }
    } else {
      throw LineError(line.number, "unknown keyword \"" + line.keyword + "\"");
    }
  }

  const int start = section.lines.empty()
                        ? std::max(section.header_line, 1)
                        : section.lines.back().number;
  if (!m) throw LineError(start, "missing 'm <int>' line");
  if (*m > bounds.max_degree) {
    throw SizeError("m = " + std::to_string(*m) + " exceeds bound " +
                    std::to_string(bounds.max_degree));
  }
  std::shared_ptr<const PermGroup> group;
  try {
    group = std::make_shared<const PermGroup>(PermGroup::FromGenerators(
        *m, group_line ? ParseGenerators(group_line->rest, *m)
                       : std::vector<Permutation>{},
        bounds.max_group_order));
  } catch (const SizeError&) {
    throw;
  } catch (const Error& e) {
    throw LineError(group_line ? group_line->number : start, e.what());
  }

  if (base.empty()) throw LineError(start, "missing 'base' line");
  std::vector<std::vector<std::string>> fiber_points(base.size());
  for (const auto& [id, entry] : fibers) {
    const auto it = base_index.find(id);
    if (it == base_index.end()) {
      throw LineError(entry.first, "fiber over unknown base point \"" + id + "\"");
    }
    if (static_cast<int>(entry.second.size()) != *m) {
      throw LineError(entry.first, "fiber must list exactly m = " +
                                       std::to_string(*m) + " points");
    }
    fiber_points[it->second] = entry.second;
  }
  for (std::size_t s = 0; s < base.size(); ++s) {
    if (fiber_points[s].empty()) {
      throw LineError(start, "no fiber listed for base point \"" + base[s] + "\"");
    }
  }

  std::vector<int> image;
  for (const auto& [number, target] : cover_image) {
    const auto it = base_index.find(target);
    if (it == base_index.end()) {
      throw LineError(number, "cover point maps to unknown base point \"" +
                                  target + "\"");
    }
    image.push_back(it->second);
  }

  std::vector<std::vector<int>> sigma(cover.size());
  for (const auto& [id, entry] : sigmas) {
    const auto it = cover_index.find(id);
    if (it == cover_index.end()) {
      throw LineError(entry.first, "marking of unknown cover point \"" + id + "\"");
    }
    const std::vector<std::string>& points = fiber_points[image[it->second]];
    if (static_cast<int>(entry.second.size()) != *m) {
      throw LineError(entry.first, "marking must list exactly m = " +
                                       std::to_string(*m) + " points");
    }
    for (const std::string& p : entry.second) {
      const auto pos = std::find(points.begin(), points.end(), p);
      if (pos == points.end()) {
        throw LineError(entry.first, "point \"" + p +
                                         "\" is not in the fiber over \"" +
                                         base[image[it->second]] + "\"");
      }
      const int index = static_cast<int>(pos - points.begin());
      if (std::find(sigma[it->second].begin(), sigma[it->second].end(), index) !=
          sigma[it->second].end()) {
        throw LineError(entry.first, "point \"" + p + "\" marked twice");
      }
      sigma[it->second].push_back(index);
    }
  }
  for (std::size_t c = 0; c < cover.size(); ++c) {
    if (sigma[c].empty()) {
      throw LineError(cover_image[c].first,
                      "no marking given for cover point \"" + cover[c] + "\"");
    }
  }
  try {
    FiniteCover fc(base, cover, image);
    return ChartedMarking(std::move(fc), std::move(group), std::move(fiber_points),
                          std::move(sigma));
  } catch (const InputError& e) {
    throw LineError(start, e.what());
  }
}

FiberMorphism BuildMorphism(const Section& section, const ChartedMarking& source,
                            const ChartedMarking& target) {
  const auto& s1 = source.cover().base_names();
  const auto& s2 = target.cover().base_names();
  auto index_of = [](const std::vector<std::string>& names, const std::string& id) {
    const auto it = std::find(names.begin(), names.end(), id);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
  };
  FiberMorphism hm;
  hm.base_map.assign(s1.size(), -1);
  hm.fiber_maps.assign(s1.size(), {});
  std::vector<int> fibermap_line(s1.size(), 0);
  for (const Line& line : section.lines) {
    if (line.keyword == "map") {
      auto [from, to] = SplitArrow(line);
      const int a = index_of(s1, from);
      const int b = index_of(s2, to);
      if (a < 0) throw LineError(line.number, "unknown source base point \"" + from + "\"");
      if (b < 0) throw LineError(line.number, "unknown target base point \"" + to + "\"");
      if (hm.base_map[a] != -1) throw LineError(line.number, "\"" + from + "\" mapped twice");
      hm.base_map[a] = b;
    } else if (line.keyword == "fibermap") {
      auto [from, tail] = SplitColon(line);
      const int a = index_of(s1, from);
      if (a < 0) throw LineError(line.number, "unknown source base point \"" + from + "\"");
      if (fibermap_line[a] != 0) {
        throw LineError(line.number, "fiber map over \"" + from + "\" given twice");
      }
      fibermap_line[a] = line.number;
    } else {
      throw LineError(line.number, "unknown keyword \"" + line.keyword + "\"");
    }
  }
  for (std::size_t a = 0; a < s1.size(); ++a) {
    if (hm.base_map[a] == -1) {
      throw LineError(section.header_line, "no 'map' line for \"" + s1[a] + "\"");
    }
    if (fibermap_line[a] == 0) {
      throw LineError(section.header_line, "no 'fibermap' line for \"" + s1[a] + "\"");
    }
  }
  for (const Line& line : section.lines) {
    if (line.keyword != "fibermap") continue;
    auto [from, tail] = SplitColon(line);
    const int a = index_of(s1, from);
    const auto& d1 = source.fiber_points()[a];
    const auto& d2 = target.fiber_points()[hm.base_map[a]];
    std::vector<int> fm(d1.size(), -1);
    for (const std::string& word : Words(tail)) {
      const auto arrow = word.find("->");
      if (arrow == std::string::npos) {
        throw LineError(line.number, "expected '<point>-><point>', got \"" + word + "\"");
      }
      const int p = index_of(d1, word.substr(0, arrow));
      const int q = index_of(d2, word.substr(arrow + 2));
      if (p < 0 || q < 0) {
        throw LineError(line.number, "unknown distinguished point in \"" + word + "\"");
      }
      if (fm[p] != -1) throw LineError(line.number, "point mapped twice in \"" + word + "\"");
      fm[p] = q;
    }
    for (int q : fm) {
      if (q == -1) throw LineError(line.number, "fiber map must cover every point");
    }
    hm.fiber_maps[a] = std::move(fm);
  }
  return hm;
}

}  // namespace

ChartedMarking ReadChartedMarking(std::string_view text, const Bounds& bounds) {
  std::vector<Section> sections = SplitSections(text);
  if (sections.size() != 1) {
    throw LineError(sections[1].header_line,
                    "descent files have no sections; use verify-morphism for "
                    "morphism documents");
  }
  return BuildMarking(sections.front(), bounds);
}

MorphismDocument ReadMorphismDocument(std::string_view text, const Bounds& bounds) {
  std::vector<Section> sections = SplitSections(text);
  if (!sections.front().lines.empty()) {
    throw LineError(sections.front().lines.front().number,
                    "content before the first section header");
  }
  const Section* source = nullptr;
  const Section* target = nullptr;
  const Section* morphism = nullptr;
  for (std::size_t k = 1; k < sections.size(); ++k) {
    const Section& s = sections[k];
    const Section** slot = s.name == "source"     ? &source
                           : s.name == "target"   ? &target
                           : s.name == "morphism" ? &morphism
                                                  : nullptr;
    if (slot == nullptr) throw LineError(s.header_line, "unknown section \"" + s.name + "\"");
    if (*slot != nullptr) throw LineError(s.header_line, "section \"" + s.name + "\" repeated");
    *slot = &s;
  }
  if (!source || !target || !morphism) {
    throw LineError(1, "morphism documents need [source], [target] and [morphism]");
  }
  MorphismDocument doc;
  doc.source = BuildMarking(*source, bounds);
  doc.target = BuildMarking(*target, bounds);
  doc.morphism = BuildMorphism(*morphism, doc.source, doc.target);
  return doc;
}

std::string WriteChartedMarking(const ChartedMarking& marking) {
  const FiniteCover& cover = marking.cover();
  std::string out = "m " + std::to_string(marking.m()) + "\n";
  out += "group " + FormatGenerators(marking.group().generators()) + "\n";
  out += "base";
  for (const std::string& s : cover.base_names()) out += " " + s;
  out += "\n";
  for (int s = 0; s < cover.num_base(); ++s) {
    out += "fiber " + cover.base_names()[s] + ":";
    for (const std::string& p : marking.fiber_points()[s]) out += " " + p;
    out += "\n";
  }
  for (int c = 0; c < cover.num_cover(); ++c) {
    out += "cover " + cover.cover_names()[c] + " -> " +
           cover.base_names()[cover.image(c)] + "\n";
  }
  for (int c = 0; c < cover.num_cover(); ++c) {
    out += "sigma " + cover.cover_names()[c] + ":";
    for (int p : marking.sigma(c)) {
      out += " " + marking.fiber_points()[cover.image(c)][p];
    }
    out += "\n";
  }
  return out;
}

std::string WriteMorphismDocument(const MorphismDocument& doc) {
  std::string out = "[source]\n" + WriteChartedMarking(doc.source);
  out += "[target]\n" + WriteChartedMarking(doc.target);
  out += "[morphism]\n";
  const auto& s1 = doc.source.cover().base_names();
  const auto& s2 = doc.target.cover().base_names();
  for (std::size_t a = 0; a < s1.size(); ++a) {
    out += "map " + s1[a] + " -> " + s2[doc.morphism.base_map[a]] + "\n";
  }
  for (std::size_t a = 0; a < s1.size(); ++a) {
    out += "fibermap " + s1[a] + ":";
    const auto& d1 = doc.source.fiber_points()[a];
    const auto& d2 = doc.target.fiber_points()[doc.morphism.base_map[a]];
    for (std::size_t p = 0; p < d1.size(); ++p) {
      out += " " + d1[p] + "->" + d2[doc.morphism.fiber_maps[a][p]];
    }
    out += "\n";
  }
  return out;
}

}  // namespace stablegraphs
