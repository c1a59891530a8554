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

#pragma once

/// \file
/// Input formats. Every loader accepts a reference that is either inline
/// JSON (starting with '{' or '['), a file path, or a named shortcut, and
/// throws ValidationError naming the origin and the offending field.
///
///   group    {"name": "G", "order": n, "table": [[...], ...]}, identity 0;
///            or "builtin:NAME"
///   lattice  {"size": n, "covers": [[a, b], ...]}  (a covered by b)
///            or {"size": n, "order": [[a, b], ...]} (a below b);
///            or "chain:N", "diamond:K", "subgroups:GROUP"
///   series   {"group": GROUP, "terms": [[...], ...]} from top to bottom
///   zigzag   {"groups": [GROUP, ...], "start": i, "legs": [LEG, ...]}
///            ("group": GROUP is short for a single group). A leg is
///            {"hom": HOM, "dir": "L" | "R"} where HOM is one of
///              {"embed": [elements], "of": k}   embedding of a subgroup of
///                                               node k (default: current)
///              {"project": [elements], "of": k} projection of node k by a
///                                               normal subgroup
///              {"map": [images], "to": i}       element map from the
///                                               current node to group i
///              {"map": [images], "from": i}     element map from group i
///                                               to the current node

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noether/finite_group.hpp"
#include "noether/form.hpp"
#include "noether/lattice.hpp"

namespace noether {

class GroupForm;
class Zigzag;

using ElementList = std::vector<std::uint32_t>;

FiniteGroup loadGroup(const std::string& ref);
FiniteLattice loadLattice(const std::string& ref);

struct SeriesSpec {
  FiniteGroup group;
  std::vector<ElementList> terms;
};

SeriesSpec loadSeries(const std::string& ref);

/// "[0, 2, 4]"
ElementList parseElementList(const std::string& text);
/// "[[lo elements], [hi elements]]"
std::pair<ElementList, ElementList> parseIntervalSpec(const std::string& text);
/// "[[top elements], ..., [bottom elements]]"
std::vector<ElementList> parseTermList(const std::string& text);

struct ZigzagLegSpec {
  enum class Kind { kEmbed, kProject, kMapTo, kMapFrom };
  Kind kind = Kind::kEmbed;
  LegDirection direction = LegDirection::kRightward;
  ElementList elements;
  std::optional<std::size_t> node;  // "of"
  std::size_t group = 0;            // "to" / "from"
};

struct ZigzagSpec {
  std::vector<FiniteGroup> groups;
  std::size_t start = 0;
  std::vector<ZigzagLegSpec> legs;
};

ZigzagSpec loadZigzag(const std::string& ref);

/// Resolves the legs against a group form whose base objects are
/// spec.groups in order. Element maps are registered as morphisms.
Zigzag buildZigzag(GroupForm& form, const ZigzagSpec& spec);

std::string groupToJson(const FiniteGroup& g);

}  // namespace noether
