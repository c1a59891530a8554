// Copyright 2026 The Noether Authors
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

#include "noether/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "noether/builtins.hpp"
#include "noether/errors.hpp"
#include "noether/group_form.hpp"
#include "noether/zigzag.hpp"

namespace noether {

namespace {

using Json = nlohmann::json;

struct Source {
  Json json;
  std::string origin;
};

bool startsWith(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

bool isInline(const std::string& ref) {
  const auto pos = ref.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (ref[pos] == '{' || ref[pos] == '[');
}

Json parseText(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(origin + ": malformed JSON at byte " +
                          std::to_string(e.byte));
  }
}

Source readSource(const std::string& ref) {
  if (isInline(ref)) return {parseText(ref, "<inline>"), "<inline>"};
  std::ifstream in(ref);
  if (!in) throw ValidationError(ref + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return {parseText(buffer.str(), ref), ref};
}

[[noreturn]] void bad(const std::string& origin, const std::string& field,
                      const std::string& problem) {
  throw ValidationError(origin + ": " + field + ": " + problem);
}

const Json& field(const Json& j, const std::string& origin,
                  const std::string& name) {
  if (!j.is_object()) bad(origin, "<root>", "expected an object");
  const auto it = j.find(name);
  if (it == j.end()) bad(origin, name, "missing");
  return *it;
}

std::uint64_t natural(const Json& j, const std::string& origin,
                      const std::string& where) {
  if (!j.is_number_unsigned()) {
    bad(origin, where, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

ElementList elementList(const Json& j, const std::string& origin,
                        const std::string& where) {
  if (!j.is_array()) bad(origin, where, "expected an array of integers");
  ElementList out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto v = natural(j[i], origin, where + "[" + std::to_string(i) + "]");
    if (v >= kMaxGroupOrder) {
      bad(origin, where + "[" + std::to_string(i) + "]", "out of range");
    }
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::vector<ElementList> termList(const Json& j, const std::string& origin,
                                  const std::string& where) {
  if (!j.is_array()) bad(origin, where, "expected an array of element lists");
  std::vector<ElementList> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(elementList(j[i], origin, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

FiniteGroup groupFromJson(const Json& j, const std::string& origin);

// A group given either by reference string or by an embedded object.
FiniteGroup groupRef(const Json& j, const std::string& origin,
                     const std::string& where) {
  if (j.is_string()) return loadGroup(j.get<std::string>());
  if (j.is_object()) return groupFromJson(j, origin + ": " + where);
  bad(origin, where, "expected a group reference or object");
}

FiniteGroup groupFromJson(const Json& j, const std::string& origin) {
  const auto& tableJson = field(j, origin, "table");
  if (!tableJson.is_array()) bad(origin, "table", "expected an array of rows");
  FiniteGroup::Table table;
  for (std::size_t r = 0; r < tableJson.size(); ++r) {
    table.push_back(elementList(tableJson[r], origin,
                                "table[" + std::to_string(r) + "]"));
  }
  std::string name = "G";
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad(origin, "name", "expected a string");
    name = j["name"].get<std::string>();
  }
  if (j.contains("order") && natural(j["order"], origin, "order") != table.size()) {
    bad(origin, "order", "does not match the number of table rows");
  }
  try {
    return FiniteGroup::fromTable(name, table);
  } catch (const ValidationError& e) {
    throw ValidationError(origin + ": table: " + e.what());
  }
}

std::vector<FiniteLattice::Pair> pairList(const Json& j,
                                          const std::string& origin,
                                          const std::string& where) {
  if (!j.is_array()) bad(origin, where, "expected an array of pairs");
  std::vector<FiniteLattice::Pair> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) bad(origin, at, "expected [a, b]");
    out.emplace_back(static_cast<std::uint32_t>(natural(j[i][0], origin, at)),
                     static_cast<std::uint32_t>(natural(j[i][1], origin, at)));
  }
  return out;
}

std::size_t parseCount(const std::string& text, const std::string& ref) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError(ref + ": expected a count after the colon");
}

}  // namespace

FiniteGroup loadGroup(const std::string& ref) {
  if (startsWith(ref, "builtin:")) {
    try {
      return builtinGroup(ref.substr(8));
    } catch (const DomainError& e) {
      throw ValidationError(ref + ": " + e.what());
    }
  }
  const auto src = readSource(ref);
  return groupFromJson(src.json, src.origin);
}

FiniteLattice loadLattice(const std::string& ref) {
  if (startsWith(ref, "chain:")) {
    return chainLattice(parseCount(ref.substr(6), ref));
  }
  if (startsWith(ref, "diamond:")) {
    return diamondLattice(parseCount(ref.substr(8), ref));
  }
  if (startsWith(ref, "subgroups:")) {
    return subgroupLattice(loadGroup(ref.substr(10)));
  }
  const auto src = readSource(ref);
  const auto size = natural(field(src.json, src.origin, "size"), src.origin,
                            "size");
  std::vector<FiniteLattice::Pair> pairs;
  if (src.json.contains("covers")) {
    pairs = pairList(src.json["covers"], src.origin, "covers");
  } else {
    pairs = pairList(field(src.json, src.origin, "order"), src.origin,
                     "order");
  }
  try {
    return FiniteLattice::fromRelation(size, pairs);
  } catch (const ValidationError& e) {
    throw ValidationError(src.origin + ": " + e.what());
  }
}

SeriesSpec loadSeries(const std::string& ref) {
  const auto src = readSource(ref);
  SeriesSpec spec{groupRef(field(src.json, src.origin, "group"), src.origin,
                           "group"),
                  termList(field(src.json, src.origin, "terms"), src.origin,
                           "terms")};
  return spec;
}

ElementList parseElementList(const std::string& text) {
  return elementList(parseText(text, "<argument>"), "<argument>", "<root>");
}

std::pair<ElementList, ElementList> parseIntervalSpec(const std::string& text) {
  const auto terms = termList(parseText(text, "<argument>"), "<argument>",
                              "<root>");
  if (terms.size() != 2) {
    throw ValidationError("<argument>: expected [[lo elements], [hi elements]]");
  }
  return {terms[0], terms[1]};
}

std::vector<ElementList> parseTermList(const std::string& text) {
  return termList(parseText(text, "<argument>"), "<argument>", "<root>");
}

ZigzagSpec loadZigzag(const std::string& ref) {
  const auto src = readSource(ref);
  const auto& j = src.json;
  const auto& origin = src.origin;
  ZigzagSpec spec;
  if (j.is_object() && j.contains("groups")) {
    const auto& groups = j["groups"];
    if (!groups.is_array() || groups.empty()) {
      bad(origin, "groups", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < groups.size(); ++i) {
      spec.groups.push_back(
          groupRef(groups[i], origin, "groups[" + std::to_string(i) + "]"));
    }
  } else {
    spec.groups.push_back(groupRef(field(j, origin, "group"), origin, "group"));
  }
  if (j.contains("start")) {
    spec.start = natural(j["start"], origin, "start");
    if (spec.start >= spec.groups.size()) bad(origin, "start", "out of range");
  }
  const auto& legs = field(j, origin, "legs");
  if (!legs.is_array()) bad(origin, "legs", "expected an array");
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const auto at = "legs[" + std::to_string(i) + "]";
    const auto& leg = legs[i];
    ZigzagLegSpec out;
    const auto& dir = field(leg, origin, "dir");
    if (dir == "L") {
      out.direction = LegDirection::kLeftward;
    } else if (dir == "R") {
      out.direction = LegDirection::kRightward;
    } else {
      bad(origin, at + ".dir", "expected \"L\" or \"R\"");
    }
    const auto& hom = field(leg, origin, "hom");
    if (!hom.is_object()) bad(origin, at + ".hom", "expected an object");
    if (hom.contains("embed")) {
      out.kind = ZigzagLegSpec::Kind::kEmbed;
      out.elements = elementList(hom["embed"], origin, at + ".hom.embed");
    } else if (hom.contains("project")) {
      out.kind = ZigzagLegSpec::Kind::kProject;
      out.elements = elementList(hom["project"], origin, at + ".hom.project");
    } else if (hom.contains("map")) {
      out.elements = elementList(hom["map"], origin, at + ".hom.map");
      const bool to = hom.contains("to");
      if (to == hom.contains("from")) {
        bad(origin, at + ".hom", "a map needs exactly one of \"to\", \"from\"");
      }
      out.kind = to ? ZigzagLegSpec::Kind::kMapTo : ZigzagLegSpec::Kind::kMapFrom;
      out.group = natural(hom[to ? "to" : "from"], origin, at + ".hom");
      if (out.group >= spec.groups.size()) {
        bad(origin, at + ".hom", "group index out of range");
      }
    } else {
      bad(origin, at + ".hom", "expected one of \"embed\", \"project\", \"map\"");
    }
    if (hom.contains("of")) out.node = natural(hom["of"], origin, at + ".hom.of");
    spec.legs.push_back(std::move(out));
  }
  return spec;
}

Zigzag buildZigzag(GroupForm& form, const ZigzagSpec& spec) {
  Zigzag z(ObjectId{static_cast<std::uint32_t>(spec.start)});
  for (std::size_t i = 0; i < spec.legs.size(); ++i) {
    const auto& leg = spec.legs[i];
    const auto at = "leg " + std::to_string(i) + ": ";
    const auto current = z.end();
    ObjectId context = current;
    if (leg.node) {
      if (*leg.node >= z.nodes().size()) {
        throw ValidationError(at + "\"of\" refers to a later node");
      }
      context = z.nodes()[*leg.node];
    }
    MorphismRef hom;
    try {
      switch (leg.kind) {
        case ZigzagLegSpec::Kind::kEmbed:
          hom = form.inclusionOf(form.subobject(context, leg.elements));
          break;
        case ZigzagLegSpec::Kind::kProject:
          hom = form.quotientBy(form.subobject(context, leg.elements));
          break;
        case ZigzagLegSpec::Kind::kMapTo:
          hom = form.registerHom(current,
                                 ObjectId{static_cast<std::uint32_t>(leg.group)},
                                 leg.elements);
          break;
        case ZigzagLegSpec::Kind::kMapFrom:
          hom = form.registerHom(ObjectId{static_cast<std::uint32_t>(leg.group)},
                                 current, leg.elements);
          break;
      }
      z.append(hom, leg.direction);
    } catch (const DomainError& e) {
      throw ValidationError(at + e.what());
    }
  }
  return z;
}

std::string groupToJson(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = g.table();
  return j.dump();
}

}  // namespace noether
