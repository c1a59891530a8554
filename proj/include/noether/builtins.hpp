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

#include <string>
#include <string_view>
#include <vector>

#include "noether/finite_group.hpp"

namespace noether {

FiniteGroup cyclicGroup(std::size_t n);
/// Dihedral group of the given (even) order; element k < n/2 is r^k and
/// element n/2 + k is r^k s.
FiniteGroup dihedralGroup(std::size_t order);
/// Permutations of {0..n-1} in lexicographic order.
FiniteGroup symmetricGroup(std::size_t n);
FiniteGroup alternatingGroup4();
/// Elements 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternionGroup();
FiniteGroup kleinFourGroup();
/// Dicyclic group of order 4n: <a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>.
FiniteGroup dicyclicGroup(std::size_t n);
FiniteGroup directProduct(const FiniteGroup& a, const FiniteGroup& b);
/// N x| Z_k where the generator of Z_k acts by the automorphism `action`
/// (a permutation of N's carrier whose k-th power is the identity).
FiniteGroup semidirectWithCyclic(const FiniteGroup& normal,
                                 const std::vector<std::uint32_t>& action,
                                 std::size_t k, std::string name);

/// Resolves names such as "Z6", "D8", "S3", "A4", "Q8", "V4" and every
/// label of the small-group catalogue. Throws DomainError for unknown names.
FiniteGroup builtinGroup(std::string_view name);

struct CatalogueEntry {
  std::string label;
  FiniteGroup group;
};

/// One representative of every isomorphism class of order at most 16.
const std::vector<CatalogueEntry>& smallGroupCatalogue();

/// Catalogue entries with order <= maxOrder.
std::vector<FiniteGroup> catalogueUpTo(std::size_t maxOrder);

}  // namespace noether
