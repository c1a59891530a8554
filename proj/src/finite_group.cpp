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

#include "noether/finite_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "noether/errors.hpp"

namespace noether {

SubgroupSet SubgroupSet::fromElements(std::span<const std::uint32_t> elements) {
  ElementBits bits;
  for (const auto e : elements) {
    if (e >= kMaxGroupOrder) {
      throw DomainError("element index " + std::to_string(e) +
                        " exceeds capacity");
    }
    bits.set(e);
  }
  return SubgroupSet(bits);
}

std::vector<std::uint32_t> SubgroupSet::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(bits_.count());
  for (std::uint32_t i = 0; i < kMaxGroupOrder; ++i) {
    if (bits_.test(i)) out.push_back(i);
  }
  return out;
}

bool canonicalLess(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::uint32_t i = 0; i < kMaxGroupOrder; ++i) {
    if (a.bits().test(i) != b.bits().test(i)) return a.bits().test(i);
  }
  return false;
}

std::string formatElements(const SubgroupSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

FiniteGroup FiniteGroup::fromTable(std::string name, const Table& table) {
  const auto n = table.size();
  if (n == 0) throw ValidationError(name + ": empty Cayley table");
  if (n > kMaxGroupOrder) {
    throw ValidationError(name + ": order " + std::to_string(n) +
                          " exceeds the supported maximum " +
                          std::to_string(kMaxGroupOrder));
  }
  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw ValidationError(g.name_ + ": row " + std::to_string(a) +
                            " has length " + std::to_string(table[a].size()) +
                            ", expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw ValidationError(g.name_ + ": entry (" + std::to_string(a) + "," +
                              std::to_string(b) + ") out of range");
      }
      g.table_[a * n + b] = table[a][b];
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (g.multiply(0, a) != a || g.multiply(a, 0) != a) {
      throw ValidationError(g.name_ + ": element 0 is not the identity (fails at " +
                            std::to_string(a) + ")");
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    std::vector<char> row(n), col(n);
    for (std::uint32_t b = 0; b < n; ++b) {
      if (row[g.multiply(a, b)]++) {
        throw ValidationError(g.name_ + ": not a Latin square (row " +
                              std::to_string(a) + " repeats entry " +
                              std::to_string(g.multiply(a, b)) + ")");
      }
      if (col[g.multiply(b, a)]++) {
        throw ValidationError(g.name_ + ": not a Latin square (column " +
                              std::to_string(a) + " repeats entry " +
                              std::to_string(g.multiply(b, a)) + ")");
      }
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c))) {
          throw ValidationError(g.name_ + ": not associative at (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
        }
      }
    }
  }
  g.inverse_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (g.multiply(a, b) == 0) g.inverse_[a] = b;
    }
  }
  return g;
}

std::uint32_t FiniteGroup::elementOrder(std::uint32_t a) const {
  std::uint32_t k = 1;
  for (std::uint32_t x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

FiniteGroup::Table FiniteGroup::table() const {
  Table t(order_, std::vector<std::uint32_t>(order_));
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) t[a][b] = table_[a * order_ + b];
  }
  return t;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

SubgroupSet FiniteGroup::carrier() const {
  ElementBits bits;
  for (std::size_t i = 0; i < order_; ++i) bits.set(i);
  return SubgroupSet(bits);
}

SubgroupSet FiniteGroup::trivialSubgroup() const {
  ElementBits bits;
  bits.set(0);
  return SubgroupSet(bits);
}

SubgroupSet closure(const FiniteGroup& g, const ElementBits& seed) {
  std::vector<std::uint32_t> gens;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (seed.test(i) && i != 0) gens.push_back(i);
  }
  ElementBits members;
  members.set(0);
  std::vector<std::uint32_t> frontier{0};
  // Right multiplication by generators; in a finite group the generated
  // monoid is the generated subgroup.
  while (!frontier.empty()) {
    const auto x = frontier.back();
    frontier.pop_back();
    for (const auto s : gens) {
      const auto y = g.multiply(x, s);
      if (!members.test(y)) {
        members.set(y);
        frontier.push_back(y);
      }
    }
  }
  return SubgroupSet(members);
}

SubgroupSet subgroupGenerated(const FiniteGroup& g,
                              std::span<const std::uint32_t> seed) {
  ElementBits bits;
  for (const auto e : seed) {
    if (e >= g.order()) {
      throw DomainError("element " + std::to_string(e) + " is not in " +
                        g.name());
    }
    bits.set(e);
  }
  return closure(g, bits);
}

bool isSubgroup(const FiniteGroup& g, const SubgroupSet& s) {
  if (!s.contains(0)) return false;
  const auto elems = s.elements();
  if (!elems.empty() && elems.back() >= g.order()) return false;
  for (const auto a : elems) {
    if (!s.contains(g.inverse(a))) return false;
    for (const auto b : elems) {
      if (!s.contains(g.multiply(a, b))) return false;
    }
  }
  return true;
}

std::vector<SubgroupSet> allSubgroups(const FiniteGroup& g) {
  std::unordered_set<ElementBits> seen;
  std::vector<SubgroupSet> found;
  auto add = [&](const SubgroupSet& s) {
    if (seen.insert(s.bits()).second) found.push_back(s);
  };
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    ElementBits seed;
    seed.set(a);
    add(closure(g, seed));
  }
  // Close under pairwise joins until no new subgroup appears.
  for (std::size_t done = 0; done < found.size();) {
    const std::size_t end = found.size();
    for (std::size_t i = done; i < end; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        add(closure(g, found[i].bits() | found[j].bits()));
      }
    }
    done = end;
  }
  std::sort(found.begin(), found.end(), canonicalLess);
  return found;
}

bool isNormalSubgroup(const FiniteGroup& g, const SubgroupSet& h) {
  const auto elems = h.elements();
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    for (const auto a : elems) {
      if (!h.contains(g.multiply(g.multiply(x, a), g.inverse(x)))) {
        return false;
      }
    }
  }
  return true;
}

bool isHomomorphism(const FiniteGroup& domain, const FiniteGroup& codomain,
                    std::span<const std::uint32_t> map) {
  if (map.size() != domain.order()) return false;
  for (const auto y : map) {
    if (y >= codomain.order()) return false;
  }
  for (std::uint32_t a = 0; a < domain.order(); ++a) {
    for (std::uint32_t b = 0; b < domain.order(); ++b) {
      if (map[domain.multiply(a, b)] != codomain.multiply(map[a], map[b])) {
        return false;
      }
    }
  }
  return true;
}

QuotientGroup quotientGroup(const FiniteGroup& g, const SubgroupSet& n) {
  if (!isSubgroup(g, n) || !isNormalSubgroup(g, n)) {
    throw DomainError(formatElements(n) + " is not a normal subgroup of " +
                      g.name());
  }
  const auto members = n.elements();
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> coset(g.order(), kUnassigned);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (coset[x] != kUnassigned) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (const auto m : members) coset[g.multiply(x, m)] = c;
  }
  FiniteGroup::Table table(reps.size(), std::vector<std::uint32_t>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = 0; b < reps.size(); ++b) {
      table[a][b] = coset[g.multiply(reps[a], reps[b])];
    }
  }
  auto q = FiniteGroup::fromTable(g.name() + "/" + formatElements(n), table);
  return {std::move(q), std::move(coset), std::move(reps)};
}

RealizedSubgroup realizeSubgroup(const FiniteGroup& g, const SubgroupSet& h) {
  if (!isSubgroup(g, h)) {
    throw DomainError(formatElements(h) + " is not a subgroup of " + g.name());
  }
  const auto elems = h.elements();
  std::vector<std::uint32_t> position(g.order());
  for (std::uint32_t i = 0; i < elems.size(); ++i) position[elems[i]] = i;
  FiniteGroup::Table table(elems.size(), std::vector<std::uint32_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      table[a][b] = position[g.multiply(elems[a], elems[b])];
    }
  }
  auto sub = FiniteGroup::fromTable(g.name() + formatElements(h), table);
  return {std::move(sub), elems};
}

}  // namespace noether
