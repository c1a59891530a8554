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

#include "noether/builtins.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <map>
#include <optional>

#include "noether/errors.hpp"

namespace noether {
namespace {

FiniteGroup fromProduct(
    std::string name, std::size_t n,
    const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul) {
  FiniteGroup::Table table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) table[a][b] = mul(a, b);
  }
  return FiniteGroup::fromTable(std::move(name), table);
}

std::optional<std::size_t> parseSuffix(std::string_view name, char prefix) {
  if (name.size() < 2 || name.front() != prefix) return std::nullopt;
  std::size_t value = 0;
  const auto* first = name.data() + 1;
  const auto* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

FiniteGroup cyclicGroup(std::size_t n) {
  if (n == 0 || n > kMaxGroupOrder) {
    throw DomainError("cyclic group order out of range: " + std::to_string(n));
  }
  return fromProduct("Z" + std::to_string(n), n,
                     [n](std::uint32_t a, std::uint32_t b) {
                       return static_cast<std::uint32_t>((a + b) % n);
                     });
}

FiniteGroup dihedralGroup(std::size_t order) {
  if (order < 2 || order % 2 != 0 || order > kMaxGroupOrder) {
    throw DomainError("dihedral group needs an even order, got " +
                      std::to_string(order));
  }
  const std::size_t k = order / 2;
  return fromProduct(
      "D" + std::to_string(order), order,
      [k](std::uint32_t x, std::uint32_t y) {
        const std::size_t a = x % k, e = x / k, b = y % k, f = y / k;
        const std::size_t rot = e == 0 ? (a + b) % k : (a + k - b) % k;
        return static_cast<std::uint32_t>(rot + k * ((e + f) % 2));
      });
}

FiniteGroup symmetricGroup(std::size_t n) {
  if (n == 0 || n > 5) {
    throw DomainError("symmetric group degree out of range: " +
                      std::to_string(n));
  }
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  return fromProduct("S" + std::to_string(n), perms.size(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       std::vector<std::uint32_t> c(n);
                       for (std::size_t x = 0; x < n; ++x) {
                         c[x] = perms[a][perms[b][x]];
                       }
                       return index.at(c);
                     });
}

FiniteGroup alternatingGroup4() {
  std::vector<std::array<std::uint32_t, 4>> perms;
  std::array<std::uint32_t, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j] ? 1 : 0;
    }
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::array<std::uint32_t, 4>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  return fromProduct("A4", perms.size(), [&](std::uint32_t a, std::uint32_t b) {
    std::array<std::uint32_t, 4> c{};
    for (std::size_t x = 0; x < 4; ++x) c[x] = perms[a][perms[b][x]];
    return index.at(c);
  });
}

FiniteGroup quaternionGroup() {
  // Unit products for 1, i, j, k as (sign, unit).
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kUnits{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  return fromProduct("Q8", 8, [](std::uint32_t a, std::uint32_t b) {
    const auto [sign, unit] = kUnits[a / 2][b / 2];
    const bool negative = (sign < 0) != ((a % 2) != (b % 2));
    return static_cast<std::uint32_t>(2 * unit + (negative ? 1 : 0));
  });
}

FiniteGroup kleinFourGroup() {
  return fromProduct("V4", 4,
                     [](std::uint32_t a, std::uint32_t b) { return a ^ b; });
}

FiniteGroup dicyclicGroup(std::size_t n) {
  if (n < 1 || 4 * n > kMaxGroupOrder) {
    throw DomainError("dicyclic parameter out of range");
  }
  const std::size_t m = 2 * n;
  return fromProduct(
      "Dic" + std::to_string(4 * n), 2 * m,
      [m, n](std::uint32_t x, std::uint32_t y) {
        const std::size_t k = x % m, e = x / m, l = y % m, f = y / m;
        std::size_t power = e == 0 ? k + l : k + m - l;
        if (e == 1 && f == 1) power += n;
        return static_cast<std::uint32_t>(power % m + m * ((e + f) % 2));
      });
}

FiniteGroup directProduct(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t nb = b.order();
  return fromProduct(a.name() + "x" + b.name(), a.order() * nb,
                     [&](std::uint32_t x, std::uint32_t y) {
                       return static_cast<std::uint32_t>(
                           a.multiply(x / nb, y / nb) * nb +
                           b.multiply(x % nb, y % nb));
                     });
}

FiniteGroup semidirectWithCyclic(const FiniteGroup& normal,
                                 const std::vector<std::uint32_t>& action,
                                 std::size_t k, std::string name) {
  const std::size_t n = normal.order();
  if (action.size() != n || !isHomomorphism(normal, normal, action)) {
    throw DomainError("semidirect action is not an endomorphism");
  }
  // powers[t][x] = action^t (x)
  std::vector<std::vector<std::uint32_t>> powers(k, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x) powers[0][x] = x;
  for (std::size_t t = 1; t < k; ++t) {
    for (std::uint32_t x = 0; x < n; ++x) powers[t][x] = action[powers[t - 1][x]];
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (action[powers[k - 1][x]] != x) {
      throw DomainError("semidirect action order does not divide " +
                        std::to_string(k));
    }
  }
  return fromProduct(std::move(name), n * k,
                     [&](std::uint32_t x, std::uint32_t y) {
                       const std::size_t t1 = x / n, t2 = y / n;
                       const auto elem =
                           normal.multiply(x % n, powers[t1][y % n]);
                       return static_cast<std::uint32_t>(((t1 + t2) % k) * n +
                                                         elem);
                     });
}

namespace {

std::vector<std::uint32_t> multiplicationAction(std::size_t n, std::size_t r) {
  std::vector<std::uint32_t> action(n);
  for (std::size_t x = 0; x < n; ++x) {
    action[x] = static_cast<std::uint32_t>((x * r) % n);
  }
  return action;
}

std::vector<CatalogueEntry> buildCatalogue() {
  std::vector<CatalogueEntry> out;
  auto add = [&](std::string label, const FiniteGroup& g) {
    out.push_back({label, g.renamed(label)});
  };
  const auto z = [](std::size_t n) { return cyclicGroup(n); };
  const auto x = [](const FiniteGroup& a, const FiniteGroup& b) {
    return directProduct(a, b);
  };

  add("Z1", z(1));
  add("Z2", z(2));
  add("Z3", z(3));
  add("Z4", z(4));
  add("Z2xZ2", x(z(2), z(2)));
  add("Z5", z(5));
  add("Z6", z(6));
  add("S3", symmetricGroup(3));
  add("Z7", z(7));
  add("Z8", z(8));
  add("Z4xZ2", x(z(4), z(2)));
  add("Z2xZ2xZ2", x(x(z(2), z(2)), z(2)));
  add("D8", dihedralGroup(8));
  add("Q8", quaternionGroup());
  add("Z9", z(9));
  add("Z3xZ3", x(z(3), z(3)));
  add("Z10", z(10));
  add("D10", dihedralGroup(10));
  add("Z11", z(11));
  add("Z12", z(12));
  add("Z6xZ2", x(z(6), z(2)));
  add("D12", dihedralGroup(12));
  add("A4", alternatingGroup4());
  add("Dic12", dicyclicGroup(3));
  add("Z13", z(13));
  add("Z14", z(14));
  add("D14", dihedralGroup(14));
  add("Z15", z(15));
  add("Z16", z(16));
  add("Z8xZ2", x(z(8), z(2)));
  add("Z4xZ4", x(z(4), z(4)));
  add("Z4xZ2xZ2", x(x(z(4), z(2)), z(2)));
  add("Z2xZ2xZ2xZ2", x(x(x(z(2), z(2)), z(2)), z(2)));
  add("D8xZ2", x(dihedralGroup(8), z(2)));
  add("Q8xZ2", x(quaternionGroup(), z(2)));
  add("D16", dihedralGroup(16));
  add("SD16", semidirectWithCyclic(z(8), multiplicationAction(8, 3), 2, "SD16"));
  add("Q16", dicyclicGroup(4));
  add("M16", semidirectWithCyclic(z(8), multiplicationAction(8, 5), 2, "M16"));
  add("Z4:Z4", semidirectWithCyclic(z(4), multiplicationAction(4, 3), 4, "Z4:Z4"));
  {
    // Z4 x Z2 with index 2a + b; c acts by (a, b) -> (a, b + a).
    std::vector<std::uint32_t> act(8), pauli(8);
    for (std::uint32_t a = 0; a < 4; ++a) {
      for (std::uint32_t b = 0; b < 2; ++b) {
        act[2 * a + b] = 2 * a + (b + a) % 2;
        pauli[2 * a + b] = 2 * ((a + 2 * b) % 4) + b;
      }
    }
    const auto base = x(z(4), z(2));
    add("(Z4xZ2):Z2", semidirectWithCyclic(base, act, 2, "(Z4xZ2):Z2"));
    add("Z4oD8", semidirectWithCyclic(base, pauli, 2, "Z4oD8"));
  }
  return out;
}

}  // namespace

const std::vector<CatalogueEntry>& smallGroupCatalogue() {
  static const std::vector<CatalogueEntry> catalogue = buildCatalogue();
  return catalogue;
}

std::vector<FiniteGroup> catalogueUpTo(std::size_t maxOrder) {
  std::vector<FiniteGroup> out;
  for (const auto& entry : smallGroupCatalogue()) {
    if (entry.group.order() <= maxOrder) out.push_back(entry.group);
  }
  return out;
}

FiniteGroup builtinGroup(std::string_view name) {
  if (auto n = parseSuffix(name, 'Z')) {
    if (*n < 1 || *n > 64) throw DomainError("Zn needs 1 <= n <= 64");
    return cyclicGroup(*n);
  }
  if (auto n = parseSuffix(name, 'D')) {
    if (*n < 2 || *n > 64 || *n % 2 != 0) {
      throw DomainError("Dn needs an even order 2 <= n <= 64");
    }
    return dihedralGroup(*n);
  }
  if (auto n = parseSuffix(name, 'S')) {
    if (*n < 1 || *n > 4) throw DomainError("Sn needs 1 <= n <= 4");
    return symmetricGroup(*n);
  }
  if (name == "A4") return alternatingGroup4();
  if (name == "Q8") return quaternionGroup();
  if (name == "V4" || name == "K4") return kleinFourGroup();
  for (const auto& entry : smallGroupCatalogue()) {
    if (entry.label == name) return entry.group;
  }
  throw DomainError("unknown builtin group '" + std::string(name) + "'");
}

}  // namespace noether
