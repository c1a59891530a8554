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

#include <bitset>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace noether {

/// Hard capacity of the element-set representation.
inline constexpr std::size_t kMaxGroupOrder = 128;

using ElementBits = std::bitset<kMaxGroupOrder>;

/// Subset of a group's carrier, compared canonically by its element list.
class SubgroupSet {
 public:
  SubgroupSet() = default;
  explicit SubgroupSet(const ElementBits& bits) : bits_(bits) {}

  static SubgroupSet fromElements(std::span<const std::uint32_t> elements);

  const ElementBits& bits() const { return bits_; }
  std::vector<std::uint32_t> elements() const;
  std::size_t size() const { return bits_.count(); }
  bool contains(std::uint32_t e) const {
    return e < kMaxGroupOrder && bits_.test(e);
  }
  bool isSubsetOf(const SubgroupSet& other) const {
    return (bits_ & ~other.bits_).none();
  }

  friend bool operator==(const SubgroupSet&, const SubgroupSet&) = default;

 private:
  ElementBits bits_;
};

/// Size first, then lexicographic on the sorted element list.
bool canonicalLess(const SubgroupSet& a, const SubgroupSet& b);

std::string formatElements(const SubgroupSet& s);

/// Finite group on the carrier 0..n-1 given by its Cayley table; 0 is the
/// identity.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<std::uint32_t>>;

  /// Validates the table: square, entries in range, identity at 0, Latin
  /// square, associative. Throws ValidationError naming the first violation.
  static FiniteGroup fromTable(std::string name, const Table& table);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }

  static constexpr std::uint32_t identity() { return 0; }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const {
    return table_[a * order_ + b];
  }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t elementOrder(std::uint32_t a) const;

  Table table() const;
  FiniteGroup renamed(std::string name) const;

  SubgroupSet carrier() const;
  SubgroupSet trivialSubgroup() const;

 private:
  FiniteGroup() = default;

  std::string name_;
  std::size_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

/// Least subgroup containing the seed. Throws DomainError on an index outside
/// the carrier.
SubgroupSet subgroupGenerated(const FiniteGroup& g,
                              std::span<const std::uint32_t> seed);
SubgroupSet closure(const FiniteGroup& g, const ElementBits& seed);

bool isSubgroup(const FiniteGroup& g, const SubgroupSet& s);

/// Complete, duplicate-free, in canonical order.
std::vector<SubgroupSet> allSubgroups(const FiniteGroup& g);

bool isNormalSubgroup(const FiniteGroup& g, const SubgroupSet& h);

bool isHomomorphism(const FiniteGroup& domain, const FiniteGroup& codomain,
                    std::span<const std::uint32_t> map);

struct QuotientGroup {
  FiniteGroup group;
  /// Canonical surjection; cosets are numbered by minimal representative.
  std::vector<std::uint32_t> projection;
  std::vector<std::uint32_t> representatives;
};

/// Throws DomainError when n is not normal in g.
QuotientGroup quotientGroup(const FiniteGroup& g, const SubgroupSet& n);

struct RealizedSubgroup {
  FiniteGroup group;
  /// Index i of the new carrier maps to the i-th smallest element of h.
  std::vector<std::uint32_t> inclusion;
};

RealizedSubgroup realizeSubgroup(const FiniteGroup& g, const SubgroupSet& h);

}  // namespace noether
