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

#include "noether/oracle.hpp"

#include <map>
#include <vector>

#include "noether/errors.hpp"
#include "noether/group_form.hpp"
#include "noether/lattice_form.hpp"

namespace noether {
namespace {

using Members = std::vector<char>;

class GroupOracle final : public IndependentOracle {
 public:
  explicit GroupOracle(const GroupForm& form) : form_(form) {}

  std::string name() const override { return "element-set arithmetic"; }

  SubobjectRef directImage(MorphismRef f, SubobjectRef x) const override {
    const auto map = form_.elementMap(f);
    Members image(order(f.codomain), 0);
    for (auto e : members(x)) image[map[e]] = 1;
    return lookup(f.codomain, generated(f.codomain, image));
  }

  SubobjectRef inverseImage(MorphismRef f, SubobjectRef y) const override {
    const auto map = form_.elementMap(f);
    const auto target = flags(y);
    Members pre(order(f.domain), 0);
    for (std::size_t e = 0; e < pre.size(); ++e) pre[e] = target[map[e]];
    return lookup(f.domain, pre);
  }

  SubobjectRef meet(SubobjectRef a, SubobjectRef b) const override {
    auto fa = flags(a);
    const auto fb = flags(b);
    for (std::size_t e = 0; e < fa.size(); ++e) fa[e] = fa[e] && fb[e];
    return lookup(a.object, fa);
  }

  SubobjectRef join(SubobjectRef a, SubobjectRef b) const override {
    auto fa = flags(a);
    const auto fb = flags(b);
    for (std::size_t e = 0; e < fa.size(); ++e) fa[e] = fa[e] || fb[e];
    return lookup(a.object, generated(a.object, fa));
  }

  bool isNormal(SubobjectRef x) const override {
    const auto& t = table(x.object);
    const auto n = t.size();
    const auto in = flags(x);
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t inv = 0;
      while (t[g][inv] != 0) ++inv;
      for (std::size_t h = 0; h < n; ++h) {
        if (in[h] && !in[t[t[g][h]][inv]]) return false;
      }
    }
    return true;
  }

  // Every subgroup is the image of its own inclusion.
  bool isConormal(SubobjectRef) const override { return true; }

 private:
  const FiniteGroup::Table& table(ObjectId object) const {
    auto it = tables_.find(object.value);
    if (it == tables_.end()) {
      it = tables_.emplace(object.value, form_.group(object).table()).first;
    }
    return it->second;
  }

  std::size_t order(ObjectId object) const { return table(object).size(); }

  std::vector<std::uint32_t> members(SubobjectRef x) const {
    return form_.subgroup(x).elements();
  }

  Members flags(SubobjectRef x) const {
    Members out(order(x.object), 0);
    for (auto e : members(x)) out[e] = 1;
    return out;
  }

  // Closes a subset under products until nothing new appears.
  Members generated(ObjectId object, Members set) const {
    const auto& t = table(object);
    set[0] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t a = 0; a < set.size(); ++a) {
        if (!set[a]) continue;
        for (std::size_t b = 0; b < set.size(); ++b) {
          if (set[b] && !set[t[a][b]]) {
            set[t[a][b]] = 1;
            grew = true;
          }
        }
      }
    }
    return set;
  }

  SubobjectRef lookup(ObjectId object, const Members& set) const {
    std::vector<std::uint32_t> elements;
    for (std::uint32_t e = 0; e < set.size(); ++e) {
      if (set[e]) elements.push_back(e);
    }
    return form_.subobject(object, elements);
  }

  const GroupForm& form_;
  mutable std::map<std::uint32_t, FiniteGroup::Table> tables_;
};

class LatticeOracle final : public IndependentOracle {
 public:
  explicit LatticeOracle(const LatticeForm& form) : form_(form) {}

  std::string name() const override { return "adjunction-table scan"; }

  // Least y with x <= right(y).
  SubobjectRef directImage(MorphismRef f, SubobjectRef x) const override {
    const auto& right = form_.maps(f).right;
    const auto& dom = form_.lattice(f.domain);
    std::vector<char> pick(right.size());
    for (std::uint32_t y = 0; y < right.size(); ++y) {
      pick[y] = dom.leq(x.id, right[y]);
    }
    return {f.codomain, extreme(form_.lattice(f.codomain), pick, true)};
  }

  // Greatest x with left(x) <= y.
  SubobjectRef inverseImage(MorphismRef f, SubobjectRef y) const override {
    const auto& left = form_.maps(f).left;
    const auto& cod = form_.lattice(f.codomain);
    std::vector<char> pick(left.size());
    for (std::uint32_t x = 0; x < left.size(); ++x) {
      pick[x] = cod.leq(left[x], y.id);
    }
    return {f.domain, extreme(form_.lattice(f.domain), pick, false)};
  }

  SubobjectRef meet(SubobjectRef a, SubobjectRef b) const override {
    const auto& lat = form_.lattice(a.object);
    std::vector<char> pick(lat.size());
    for (std::uint32_t c = 0; c < lat.size(); ++c) {
      pick[c] = lat.leq(c, a.id) && lat.leq(c, b.id);
    }
    return {a.object, extreme(lat, pick, false)};
  }

  SubobjectRef join(SubobjectRef a, SubobjectRef b) const override {
    const auto& lat = form_.lattice(a.object);
    std::vector<char> pick(lat.size());
    for (std::uint32_t c = 0; c < lat.size(); ++c) {
      pick[c] = lat.leq(a.id, c) && lat.leq(b.id, c);
    }
    return {a.object, extreme(lat, pick, true)};
  }

  bool isNormal(SubobjectRef) const override { return true; }
  bool isConormal(SubobjectRef) const override { return true; }

 private:
  // Least (or greatest) picked element; it must be comparable to all.
  static std::uint32_t extreme(const FiniteLattice& lat,
                               const std::vector<char>& pick, bool least) {
    for (std::uint32_t c = 0; c < pick.size(); ++c) {
      if (!pick[c]) continue;
      bool ok = true;
      for (std::uint32_t d = 0; d < pick.size() && ok; ++d) {
        if (pick[d] && !(least ? lat.leq(c, d) : lat.leq(d, c))) ok = false;
      }
      if (ok) return c;
    }
    throw InstanceIntegrityError("no extreme element in a lattice scan");
  }

  const LatticeForm& form_;
};

MorphismRef flip(MorphismRef f) { return {f.codomain, f.domain, f.id}; }

class DualOracle final : public IndependentOracle {
 public:
  DualOracle(std::shared_ptr<const Form> keep,
             std::unique_ptr<IndependentOracle> inner)
      : keep_(std::move(keep)), inner_(std::move(inner)) {}

  std::string name() const override { return "dual of " + inner_->name(); }
  SubobjectRef directImage(MorphismRef f, SubobjectRef x) const override {
    return inner_->inverseImage(flip(f), x);
  }
  SubobjectRef inverseImage(MorphismRef f, SubobjectRef y) const override {
    return inner_->directImage(flip(f), y);
  }
  SubobjectRef meet(SubobjectRef a, SubobjectRef b) const override {
    return inner_->join(a, b);
  }
  SubobjectRef join(SubobjectRef a, SubobjectRef b) const override {
    return inner_->meet(a, b);
  }
  bool isNormal(SubobjectRef x) const override {
    return inner_->isConormal(x);
  }
  bool isConormal(SubobjectRef x) const override {
    return inner_->isNormal(x);
  }

 private:
  std::shared_ptr<const Form> keep_;
  std::unique_ptr<IndependentOracle> inner_;
};

}  // namespace

std::unique_ptr<IndependentOracle> makeOracle(const Form& form) {
  if (const auto* g = dynamic_cast<const GroupForm*>(&form)) {
    return std::make_unique<GroupOracle>(*g);
  }
  if (const auto* l = dynamic_cast<const LatticeForm*>(&form)) {
    return std::make_unique<LatticeOracle>(*l);
  }
  if (auto inner = dualSource(form)) {
    auto oracle = makeOracle(*inner);
    if (!oracle) return nullptr;
    return std::make_unique<DualOracle>(std::move(inner), std::move(oracle));
  }
  return nullptr;
}

}  // namespace noether
