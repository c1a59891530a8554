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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "noether/detail/registry.hpp"

namespace noether {

class FiniteGroup;

inline constexpr std::size_t kMaxLatticeSize = 64;

/// Finite bounded modular lattice on the elements 0..size-1.
class FiniteLattice {
 public:
  using Pair = std::pair<std::uint32_t, std::uint32_t>;

  /// Builds from generating pairs (a, b) meaning a <= b; the order is the
  /// reflexive-transitive closure. Throws ValidationError when the result is
  /// not a partial order, lacks a meet or join, or is not modular (the
  /// message names a witness triple).
  static FiniteLattice fromRelation(std::size_t size,
                                    const std::vector<Pair>& pairs);
  /// Same as fromRelation; the pairs are read as covering relations.
  static FiniteLattice fromCovers(std::size_t size,
                                  const std::vector<Pair>& covers) {
    return fromRelation(size, covers);
  }

  std::size_t size() const { return tables_.size; }
  bool leq(std::uint32_t a, std::uint32_t b) const { return tables_.le(a, b); }
  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const {
    return tables_.m(a, b);
  }
  std::uint32_t join(std::uint32_t a, std::uint32_t b) const {
    return tables_.j(a, b);
  }
  std::uint32_t bottom() const { return tables_.bottom; }
  std::uint32_t top() const { return tables_.top; }
  const detail::LatticeTables& tables() const { return tables_; }

  /// Covering pairs (a, b), a covered by b, in lexicographic order.
  std::vector<Pair> covers() const;

  /// Sublattice [lo, hi] renumbered in increasing element order; the second
  /// component lists the original element of each new index.
  std::pair<FiniteLattice, std::vector<std::uint32_t>> interval(
      std::uint32_t lo, std::uint32_t hi) const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.tables_.leq == b.tables_.leq;
  }

 private:
  FiniteLattice() = default;
  detail::LatticeTables tables_;
};

/// Cover relation of the pentagon, the smallest non-modular lattice.
std::vector<FiniteLattice::Pair> pentagonCovers();

FiniteLattice chainLattice(std::size_t length);
/// Bottom, top and k pairwise incomparable atoms.
FiniteLattice diamondLattice(std::size_t atoms);
FiniteLattice productLattice(const FiniteLattice& a, const FiniteLattice& b);
/// a stacked below b, with the top of a glued to the bottom of b.
FiniteLattice gluedSum(const FiniteLattice& a, const FiniteLattice& b);
/// Subgroup lattice of a group; throws ValidationError when not modular.
FiniteLattice subgroupLattice(const FiniteGroup& g);

/// Random modular lattice with at most maxSize elements, assembled from
/// chains and diamonds by products and glued sums.
FiniteLattice randomModularLattice(std::mt19937_64& rng, std::size_t maxSize);

}  // namespace noether
