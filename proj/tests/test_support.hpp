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

// Independent reference computations shared by the tests. Nothing here
// calls into the library's subgroup or image machinery.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <vector>

#include "noether/finite_group.hpp"
#include "noether/group_form.hpp"
#include "noether/zigzag.hpp"

namespace noether::testing {

using Elements = std::vector<std::uint32_t>;

/// Every subset of the carrier closed under products and containing 0.
/// Exponential; intended for orders up to about 12.
inline std::set<Elements> subgroupsBySubsets(const FiniteGroup& g) {
  const auto n = g.order();
  std::set<Elements> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    Elements s;
    for (std::uint32_t e = 0; e < n; ++e) {
      if (mask >> e & 1) s.push_back(e);
    }
    bool closed = true;
    for (auto a : s) {
      for (auto b : s) {
        if (!(mask >> g.multiply(a, b) & 1)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.insert(s);
  }
  return out;
}

/// Symmetries of a square as permutations of its vertices, in the order
/// e, r, r^2, r^3, s, rs, r^2 s, r^3 s with r a quarter turn and s a
/// reflection. Products are computed by composing the permutations.
inline FiniteGroup squareSymmetries() {
  using Perm = std::array<int, 4>;
  const Perm e{0, 1, 2, 3};
  const Perm r{1, 2, 3, 0};
  const Perm s{0, 3, 2, 1};
  auto compose = [](const Perm& a, const Perm& b) {  // a after b
    Perm out{};
    for (int i = 0; i < 4; ++i) out[i] = a[b[i]];
    return out;
  };
  std::vector<Perm> elems{e};
  for (int k = 1; k < 4; ++k) elems.push_back(compose(r, elems.back()));
  for (int k = 0; k < 4; ++k) elems.push_back(compose(elems[k], s));
  FiniteGroup::Table table(8, std::vector<std::uint32_t>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const auto p = compose(elems[a], elems[b]);
      table[a][b] = static_cast<std::uint32_t>(
          std::find(elems.begin(), elems.end(), p) - elems.begin());
    }
  }
  return FiniteGroup::fromTable("square", table);
}

inline bool conjugationNormal(const FiniteGroup& g, const Elements& h) {
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    std::uint32_t inv = 0;
    while (g.multiply(x, inv) != 0) ++inv;
    for (auto y : h) {
      const auto c = g.multiply(g.multiply(x, y), inv);
      if (!std::binary_search(h.begin(), h.end(), c)) return false;
    }
  }
  return true;
}

/// Subgroup lattice on explicit element sets: meet is intersection and
/// join is the smallest enumerated subgroup containing both.
class SubsetLattice {
 public:
  explicit SubsetLattice(const FiniteGroup& g) : group_(g) {
    const auto subs = subgroupsBySubsets(g);
    all_.assign(subs.begin(), subs.end());
  }

  const std::vector<Elements>& all() const { return all_; }

  static bool leq(const Elements& a, const Elements& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }
  static Elements meet(const Elements& a, const Elements& b) {
    Elements out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  }
  Elements join(const Elements& a, const Elements& b) const {
    const Elements* best = nullptr;
    for (const auto& c : all_) {
      if (leq(a, c) && leq(b, c) && (!best || c.size() < best->size())) {
        best = &c;
      }
    }
    return *best;
  }
  /// (z meet hi) join lo.
  Elements project(const Elements& z, const Elements& lo,
                   const Elements& hi) const {
    return join(meet(z, hi), lo);
  }
  /// lo is normal in hi, tested by conjugating with elements of hi.
  bool normalIn(const Elements& lo, const Elements& hi) const {
    if (!leq(lo, hi)) return false;
    for (auto x : hi) {
      std::uint32_t inv = 0;
      while (group_.multiply(x, inv) != 0) ++inv;
      for (auto y : lo) {
        const auto c = group_.multiply(group_.multiply(x, y), inv);
        if (!std::binary_search(lo.begin(), lo.end(), c)) return false;
      }
    }
    return true;
  }

 private:
  const FiniteGroup& group_;
  std::vector<Elements> all_;
};

/// Relational composite of a zigzag computed from the stored element maps:
/// pairs (a, b) with a in the start node and b in the current node.
inline std::vector<std::set<std::uint32_t>> compositeByElements(
    const GroupForm& form, const Zigzag& z) {
  const auto n = form.carrierSize(z.start());
  std::vector<std::set<std::uint32_t>> rel(n);
  for (std::uint32_t a = 0; a < n; ++a) rel[a].insert(a);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const auto& leg = z.legs()[i];
    const auto map = form.elementMap(leg.hom);
    for (auto& targets : rel) {
      std::set<std::uint32_t> next;
      if (leg.direction == LegDirection::kRightward) {
        for (auto b : targets) next.insert(map[b]);
      } else {
        for (std::uint32_t c = 0; c < map.size(); ++c) {
          if (targets.count(map[c])) next.insert(c);
        }
      }
      targets = std::move(next);
    }
  }
  return rel;
}

inline bool isFunctional(const std::vector<std::set<std::uint32_t>>& rel) {
  return std::all_of(rel.begin(), rel.end(),
                     [](const auto& t) { return t.size() == 1; });
}

/// Legs available at a node: embeddings into it (leftward), projections
/// out of it (rightward), the inclusion into its parent when it is a
/// subgroup object (rightward) and the projection from its parent when it
/// is a quotient object (leftward). Identity legs are left out.
inline std::vector<ZigzagLeg> legsAt(const GroupForm& form, ObjectId node) {
  std::vector<ZigzagLeg> out;
  for (const auto& x : fiberLattice(form, node).elements()) {
    if (x != form.top(node)) {
      out.push_back({*form.embedding(x), LegDirection::kLeftward});
    }
    if (x != form.bottom(node)) {
      if (auto p = form.projection(x)) {
        out.push_back({*p, LegDirection::kRightward});
      }
    }
  }
  const auto prov = form.provenance(node);
  if (prov.origin) {
    if (prov.kind == GroupForm::ObjectKind::kSubgroup) {
      out.push_back({form.inclusionOf(*prov.origin), LegDirection::kRightward});
    } else if (prov.kind == GroupForm::ObjectKind::kQuotient) {
      out.push_back({form.quotientBy(*prov.origin), LegDirection::kLeftward});
    }
  }
  return out;
}

/// Calls visit on every zigzag of at most maxLegs legs starting at start.
template <typename Visit>
void forEachZigzag(const GroupForm& form, const Zigzag& prefix,
                   std::size_t maxLegs, Visit&& visit) {
  visit(prefix);
  if (prefix.size() == maxLegs) return;
  for (const auto& leg : legsAt(form, prefix.end())) {
    Zigzag next = prefix;
    next.append(leg);
    forEachZigzag(form, next, maxLegs, visit);
  }
}

}  // namespace noether::testing
