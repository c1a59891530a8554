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

#include "noether/lattice.hpp"

#include <algorithm>

#include "noether/errors.hpp"
#include "noether/finite_group.hpp"

namespace noether {

namespace {

std::string triple(std::uint32_t x, std::uint32_t y, std::uint32_t z) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ", " +
         std::to_string(z) + ")";
}

// Greatest element among those c with pick(c); requires it to dominate all
// of them.
std::optional<std::uint32_t> greatest(const std::vector<char>& leq,
                                      std::size_t n,
                                      const std::vector<char>& pick) {
  for (std::uint32_t c = 0; c < n; ++c) {
    if (!pick[c]) continue;
    bool dominates = true;
    for (std::uint32_t d = 0; d < n && dominates; ++d) {
      if (pick[d] && !leq[d * n + c]) dominates = false;
    }
    if (dominates) return c;
  }
  return std::nullopt;
}

}  // namespace

FiniteLattice FiniteLattice::fromRelation(std::size_t size,
                                          const std::vector<Pair>& pairs) {
  if (size == 0) throw ValidationError("a lattice needs at least one element");
  if (size > kMaxLatticeSize) {
    throw ValidationError("lattice of size " + std::to_string(size) +
                          " exceeds the limit of " +
                          std::to_string(kMaxLatticeSize));
  }
  const auto n = size;
  std::vector<char> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = 1;
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw ValidationError("relation pair (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") is out of range");
    }
    leq[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = 1;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq[a * n + b] && leq[b * n + a]) {
        throw ValidationError("not a partial order: " + std::to_string(a) +
                              " and " + std::to_string(b) +
                              " lie below each other");
      }
    }
  }

  FiniteLattice lat;
  auto& t = lat.tables_;
  t.size = static_cast<std::uint32_t>(n);
  t.leq = leq;
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  std::vector<char> lower(n), upper(n), reversed(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) reversed[a * n + b] = leq[b * n + a];
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        lower[c] = leq[c * n + a] && leq[c * n + b];
        upper[c] = leq[a * n + c] && leq[b * n + c];
      }
      const auto m = greatest(leq, n, lower);
      const auto j = greatest(reversed, n, upper);
      if (!m) {
        throw ValidationError("not a lattice: " + std::to_string(a) + " and " +
                              std::to_string(b) + " have no meet");
      }
      if (!j) {
        throw ValidationError("not a lattice: " + std::to_string(a) + " and " +
                              std::to_string(b) + " have no join");
      }
      t.meet[a * n + b] = *m;
      t.join[a * n + b] = *j;
    }
  }
  t.bottom = t.top = 0;
  for (std::uint32_t a = 0; a < n; ++a) {
    t.bottom = t.meet[t.bottom * n + a];
    t.top = t.join[t.top * n + a];
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t z = 0; z < n; ++z) {
      if (!t.le(x, z)) continue;
      for (std::uint32_t y = 0; y < n; ++y) {
        if (t.m(t.j(x, y), z) != t.j(x, t.m(y, z))) {
          throw ValidationError("not modular: witness triple (x, y, z) = " +
                                triple(x, y, z));
        }
      }
    }
  }
  return lat;
}

std::vector<FiniteLattice::Pair> FiniteLattice::covers() const {
  std::vector<Pair> out;
  const auto n = tables_.size;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (std::uint32_t c = 0; c < n && covered; ++c) {
        if (c != a && c != b && leq(a, c) && leq(c, b)) covered = false;
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

std::pair<FiniteLattice, std::vector<std::uint32_t>> FiniteLattice::interval(
    std::uint32_t lo, std::uint32_t hi) const {
  if (lo >= size() || hi >= size() || !leq(lo, hi)) {
    throw DomainError("[" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "] is not an interval");
  }
  std::vector<std::uint32_t> members;
  for (std::uint32_t c = 0; c < size(); ++c) {
    if (leq(lo, c) && leq(c, hi)) members.push_back(c);
  }
  std::vector<Pair> pairs;
  for (std::uint32_t i = 0; i < members.size(); ++i) {
    for (std::uint32_t j = 0; j < members.size(); ++j) {
      if (i != j && leq(members[i], members[j])) pairs.emplace_back(i, j);
    }
  }
  return {fromRelation(members.size(), pairs), members};
}

std::vector<FiniteLattice::Pair> pentagonCovers() {
  // 0 < 1 < 2 < 4 and 0 < 3 < 4.
  return {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
}

FiniteLattice chainLattice(std::size_t length) {
  std::vector<FiniteLattice::Pair> covers;
  for (std::uint32_t i = 0; i + 1 < length; ++i) covers.emplace_back(i, i + 1);
  return FiniteLattice::fromCovers(length, covers);
}

FiniteLattice diamondLattice(std::size_t atoms) {
  const auto top = static_cast<std::uint32_t>(atoms + 1);
  std::vector<FiniteLattice::Pair> covers;
  for (std::uint32_t a = 1; a <= atoms; ++a) {
    covers.emplace_back(0, a);
    covers.emplace_back(a, top);
  }
  if (atoms == 0) covers.emplace_back(0, 1);
  return FiniteLattice::fromCovers(atoms + 2, covers);
}

FiniteLattice productLattice(const FiniteLattice& a, const FiniteLattice& b) {
  const auto nb = static_cast<std::uint32_t>(b.size());
  std::vector<FiniteLattice::Pair> pairs;
  for (const auto& [x, y] : a.covers()) {
    for (std::uint32_t k = 0; k < nb; ++k) {
      pairs.emplace_back(x * nb + k, y * nb + k);
    }
  }
  for (const auto& [x, y] : b.covers()) {
    for (std::uint32_t k = 0; k < a.size(); ++k) {
      pairs.emplace_back(k * nb + x, k * nb + y);
    }
  }
  return FiniteLattice::fromRelation(a.size() * b.size(), pairs);
}

FiniteLattice gluedSum(const FiniteLattice& a, const FiniteLattice& b) {
  // Elements of a keep their numbers; b's bottom becomes a's top and the
  // remaining elements of b follow.
  const auto na = static_cast<std::uint32_t>(a.size());
  std::vector<std::uint32_t> renumber(b.size());
  std::uint32_t next = na;
  for (std::uint32_t x = 0; x < b.size(); ++x) {
    renumber[x] = x == b.bottom() ? a.top() : next++;
  }
  auto pairs = a.covers();
  for (const auto& [x, y] : b.covers()) {
    pairs.emplace_back(renumber[x], renumber[y]);
  }
  return FiniteLattice::fromRelation(a.size() + b.size() - 1, pairs);
}

FiniteLattice subgroupLattice(const FiniteGroup& g) {
  const auto subs = allSubgroups(g);
  std::vector<FiniteLattice::Pair> pairs;
  for (std::uint32_t i = 0; i < subs.size(); ++i) {
    for (std::uint32_t j = 0; j < subs.size(); ++j) {
      if (i != j && subs[i].isSubsetOf(subs[j])) pairs.emplace_back(i, j);
    }
  }
  return FiniteLattice::fromRelation(subs.size(), pairs);
}

FiniteLattice randomModularLattice(std::mt19937_64& rng, std::size_t maxSize) {
  maxSize = std::clamp<std::size_t>(maxSize, 1, kMaxLatticeSize);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto atom = [&](std::size_t budget) {
    if (budget >= 5 && pick(0, 2) == 0) {
      return diamondLattice(pick(3, std::min<std::size_t>(budget - 2, 5)));
    }
    return chainLattice(pick(1, std::min<std::size_t>(budget, 4)));
  };
  auto result = atom(maxSize);
  for (int step = 0; step < 3; ++step) {
    const auto room = maxSize / result.size();
    if (pick(0, 1) == 0 && room >= 2) {
      auto factor = atom(room);
      if (factor.size() > 1) result = productLattice(result, factor);
    } else if (maxSize > result.size()) {
      auto piece = atom(maxSize - result.size() + 1);
      if (piece.size() > 1) result = gluedSum(result, piece);
    }
  }
  return result;
}

}  // namespace noether
