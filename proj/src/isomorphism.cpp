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

#include "noether/isomorphism.hpp"

#include <algorithm>

#include "noether/builtins.hpp"
#include "noether/errors.hpp"

namespace noether {
namespace {

std::vector<std::uint32_t> orderSignature(const FiniteGroup& g) {
  std::vector<std::uint32_t> orders(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) orders[x] = g.elementOrder(x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<std::uint32_t> greedyGenerators(const FiniteGroup& g) {
  std::vector<std::uint32_t> candidates(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) candidates[x] = x;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::uint32_t x, std::uint32_t y) {
                     return g.elementOrder(x) > g.elementOrder(y);
                   });
  std::vector<std::uint32_t> gens;
  ElementBits span;
  span.set(0);
  for (const auto x : candidates) {
    if (span.test(x)) continue;
    gens.push_back(x);
    ElementBits seed = span;
    seed.set(x);
    span = closure(g, seed).bits();
  }
  return gens;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteGroup& a, const FiniteGroup& b)
      : a_(a), b_(b), gens_(greedyGenerators(a)), images_(gens_.size()) {}

  std::optional<std::vector<std::uint32_t>> run() { return assign(0); }

 private:
  std::optional<std::vector<std::uint32_t>> assign(std::size_t i) {
    if (i == gens_.size()) return extend();
    const auto wanted = a_.elementOrder(gens_[i]);
    for (std::uint32_t y = 0; y < b_.order(); ++y) {
      if (b_.elementOrder(y) != wanted) continue;
      images_[i] = y;
      if (auto found = assign(i + 1)) return found;
    }
    return std::nullopt;
  }

  std::optional<std::vector<std::uint32_t>> extend() const {
    constexpr auto kUnset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> map(a_.order(), kUnset);
    map[0] = 0;
    std::vector<std::uint32_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto x = queue[q];
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto next = a_.multiply(x, gens_[i]);
        const auto image = b_.multiply(map[x], images_[i]);
        if (map[next] == kUnset) {
          map[next] = image;
          queue.push_back(next);
        } else if (map[next] != image) {
          return std::nullopt;
        }
      }
    }
    std::vector<char> hit(b_.order());
    for (const auto y : map) {
      if (y == kUnset || hit[y]++) return std::nullopt;
    }
    if (!isHomomorphism(a_, b_, map)) return std::nullopt;
    return map;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::uint32_t> images_;
};

}  // namespace

std::optional<std::vector<std::uint32_t>> findIsomorphism(const FiniteGroup& a,
                                                          const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (orderSignature(a) != orderSignature(b)) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return findIsomorphism(a, b).has_value();
}

std::string identifyGroup(const FiniteGroup& g) {
  if (g.order() > 16) {
    throw UnsupportedError("no catalogue for groups of order " +
                           std::to_string(g.order()));
  }
  for (const auto& entry : smallGroupCatalogue()) {
    if (entry.group.order() == g.order() && isomorphic(entry.group, g)) {
      return entry.label;
    }
  }
  throw InstanceIntegrityError(g.name() + " matches no catalogue entry");
}

}  // namespace noether
