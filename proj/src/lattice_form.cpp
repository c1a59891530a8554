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

#include "noether/lattice_form.hpp"

#include <algorithm>

#include "noether/errors.hpp"

namespace noether {

struct LatticeForm::ObjectRecord {
  FiniteLattice lattice;
  std::string name;
  /// Element of the parent lattice for each element of an interval object.
  std::vector<std::uint32_t> members;
};

struct LatticeForm::MorphismRecord {
  ObjectId domain;
  ObjectId codomain;
  ConnectionMaps maps;
};

namespace {

std::string formatMap(const std::vector<std::uint32_t>& map) {
  std::string out = "[";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(map[i]);
  }
  return out + "]";
}

}  // namespace

std::optional<std::string> connectionDefect(const FiniteLattice& domain,
                                            const FiniteLattice& codomain,
                                            const ConnectionMaps& maps) {
  const auto n = domain.size();
  const auto m = codomain.size();
  if (maps.left.size() != n || maps.right.size() != m) {
    return "map tables have the wrong length";
  }
  for (auto v : maps.left) {
    if (v >= m) return "left map leaves the codomain";
  }
  for (auto v : maps.right) {
    if (v >= n) return "right map leaves the domain";
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < m; ++y) {
      if (codomain.leq(maps.left[x], y) != domain.leq(x, maps.right[y])) {
        return "not adjoint at (" + std::to_string(x) + ", " +
               std::to_string(y) + ")";
      }
    }
  }
  const auto kernel = maps.right[codomain.bottom()];
  const auto image = maps.left[domain.top()];
  for (std::uint32_t x = 0; x < n; ++x) {
    if (maps.right[maps.left[x]] != domain.join(x, kernel)) {
      return "right(left(" + std::to_string(x) + ")) differs from " +
             std::to_string(x) + " v right(bottom)";
    }
  }
  for (std::uint32_t y = 0; y < m; ++y) {
    if (maps.left[maps.right[y]] != codomain.meet(y, image)) {
      return "left(right(" + std::to_string(y) + ")) differs from " +
             std::to_string(y) + " ^ left(top)";
    }
  }
  return std::nullopt;
}

LatticeForm::LatticeForm(std::vector<FiniteLattice> lattices,
                         std::vector<std::string> names) {
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    auto name = i < names.size() ? names[i] : "L" + std::to_string(i);
    std::vector<std::uint32_t> members(lattices[i].size());
    for (std::uint32_t k = 0; k < members.size(); ++k) members[k] = k;
    objects_.intern({0, std::uint32_t(i)}, [&] {
      return ObjectRecord{std::move(lattices[i]), std::move(name),
                          std::move(members)};
    });
    ++baseCount_;
  }
}

LatticeForm::~LatticeForm() = default;

const LatticeForm::ObjectRecord& LatticeForm::record(ObjectId object) const {
  return objects_.at(object.value, "object");
}

const LatticeForm::MorphismRecord& LatticeForm::record(MorphismRef f) const {
  const auto& rec = morphisms_.at(f.id, "morphism");
  if (rec.domain != f.domain || rec.codomain != f.codomain) {
    throw DomainError("morphism handle " + toString(f) +
                      " does not match its registered endpoints");
  }
  return rec;
}

void LatticeForm::check(SubobjectRef x) const {
  if (x.id >= record(x.object).lattice.size()) {
    throw DomainError("unknown subobject " + toString(x));
  }
}

ObjectId LatticeForm::intervalObject(SubobjectRef lo, SubobjectRef hi) const {
  const auto& parent = record(lo.object);
  const auto id = objects_.intern(
      {1, lo.object.value, lo.id, hi.id}, [&] {
        auto [lattice, members] = parent.lattice.interval(lo.id, hi.id);
        return ObjectRecord{std::move(lattice),
                            parent.name + "[" + std::to_string(lo.id) + "," +
                                std::to_string(hi.id) + "]",
                            std::move(members)};
      });
  return ObjectId{id};
}

MorphismRef LatticeForm::internMorphism(ObjectId domain, ObjectId codomain,
                                        ConnectionMaps maps) const {
  detail::Registry<MorphismRecord>::Key key{domain.value, codomain.value};
  key.insert(key.end(), maps.left.begin(), maps.left.end());
  key.insert(key.end(), maps.right.begin(), maps.right.end());
  const auto id = morphisms_.intern(key, [&] {
    return MorphismRecord{domain, codomain, std::move(maps)};
  });
  return {domain, codomain, id};
}

std::string LatticeForm::label() const {
  std::string out = "lattices(";
  for (std::uint32_t i = 0; i < baseCount_; ++i) {
    if (i) out += ",";
    out += record(ObjectId{i}).name;
  }
  return out + ")";
}

std::vector<ObjectId> LatticeForm::baseObjects() const {
  std::vector<ObjectId> out;
  for (std::uint32_t i = 0; i < baseCount_; ++i) out.push_back({i});
  return out;
}

std::vector<ObjectId> LatticeForm::objects() const {
  std::vector<ObjectId> out;
  const auto n = objects_.size();
  for (std::uint32_t i = 0; i < n; ++i) out.push_back({i});
  return out;
}

bool LatticeForm::contains(ObjectId object) const {
  return objects_.contains(object.value);
}

bool LatticeForm::contains(MorphismRef f) const {
  if (!morphisms_.contains(f.id)) return false;
  const auto& rec = morphisms_.at(f.id, "morphism");
  return rec.domain == f.domain && rec.codomain == f.codomain;
}

std::size_t LatticeForm::fiberSize(ObjectId object) const {
  return record(object).lattice.size();
}

bool LatticeForm::leq(SubobjectRef a, SubobjectRef b) const {
  requireSameFiber(a, b);
  check(a);
  check(b);
  return record(a.object).lattice.leq(a.id, b.id);
}

SubobjectRef LatticeForm::meet(SubobjectRef a, SubobjectRef b) const {
  requireSameFiber(a, b);
  check(a);
  check(b);
  return {a.object, record(a.object).lattice.meet(a.id, b.id)};
}

SubobjectRef LatticeForm::join(SubobjectRef a, SubobjectRef b) const {
  requireSameFiber(a, b);
  check(a);
  check(b);
  return {a.object, record(a.object).lattice.join(a.id, b.id)};
}

SubobjectRef LatticeForm::bottom(ObjectId object) const {
  return {object, record(object).lattice.bottom()};
}

SubobjectRef LatticeForm::top(ObjectId object) const {
  return {object, record(object).lattice.top()};
}

MorphismRef LatticeForm::identity(ObjectId object) const {
  std::vector<std::uint32_t> id(record(object).lattice.size());
  for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
  return internMorphism(object, object, {id, id});
}

MorphismRef LatticeForm::compose(MorphismRef after, MorphismRef before) const {
  if (before.codomain != after.domain) {
    throw DomainError("cannot compose " + toString(after) + " after " +
                      toString(before));
  }
  const auto& f = record(after).maps;
  const auto& g = record(before).maps;
  ConnectionMaps maps;
  for (auto x : g.left) maps.left.push_back(f.left[x]);
  for (auto z : f.right) maps.right.push_back(g.right[z]);
  return internMorphism(before.domain, after.codomain, std::move(maps));
}

SubobjectRef LatticeForm::directImage(MorphismRef f, SubobjectRef x) const {
  if (x.object != f.domain) {
    throw DomainError(toString(x) + " is not in the domain of " + toString(f));
  }
  check(x);
  return {f.codomain, record(f).maps.left[x.id]};
}

SubobjectRef LatticeForm::inverseImage(MorphismRef f, SubobjectRef y) const {
  if (y.object != f.codomain) {
    throw DomainError(toString(y) + " is not in the codomain of " +
                      toString(f));
  }
  check(y);
  return {f.domain, record(f).maps.right[y.id]};
}

std::vector<MorphismRef> LatticeForm::registeredMorphisms() const {
  std::lock_guard lock(registeredMutex_);
  return registered_;
}

Normality LatticeForm::normality(SubobjectRef x) const {
  return {true, true, projection(x), embedding(x)};
}

std::optional<MorphismRef> LatticeForm::embedding(SubobjectRef x) const {
  check(x);
  const auto& parent = record(x.object);
  if (x.id == parent.lattice.top()) return identity(x.object);
  const auto sub = intervalObject(bottom(x.object), x);
  const auto& members = record(sub).members;
  std::vector<std::uint32_t> position(parent.lattice.size(), 0);
  for (std::uint32_t i = 0; i < members.size(); ++i) position[members[i]] = i;
  ConnectionMaps maps{members, {}};
  for (std::uint32_t y = 0; y < parent.lattice.size(); ++y) {
    maps.right.push_back(position[parent.lattice.meet(y, x.id)]);
  }
  return internMorphism(sub, x.object, std::move(maps));
}

std::optional<MorphismRef> LatticeForm::projection(SubobjectRef x) const {
  check(x);
  const auto& parent = record(x.object);
  if (x.id == parent.lattice.bottom()) return identity(x.object);
  const auto quotient = intervalObject(x, top(x.object));
  const auto& members = record(quotient).members;
  std::vector<std::uint32_t> position(parent.lattice.size(), 0);
  for (std::uint32_t i = 0; i < members.size(); ++i) position[members[i]] = i;
  ConnectionMaps maps{{}, members};
  for (std::uint32_t y = 0; y < parent.lattice.size(); ++y) {
    maps.left.push_back(position[parent.lattice.join(y, x.id)]);
  }
  return internMorphism(x.object, quotient, std::move(maps));
}

FactorizationTriple LatticeForm::factorize(MorphismRef f) const {
  const auto& fm = record(f).maps;
  const auto pi = *projection(inverseImage(f, bottom(f.codomain)));
  const auto iota = *embedding(directImage(f, top(f.domain)));
  const auto& pm = record(pi).maps;
  const auto& im = record(iota).maps;
  // iso = iota^* . f . pi_* restricted to the middle objects.
  ConnectionMaps maps;
  for (auto x : pm.right) maps.left.push_back(im.right[fm.left[x]]);
  for (auto y : im.left) maps.right.push_back(pm.left[fm.right[y]]);
  if (auto defect = connectionDefect(lattice(pi.codomain),
                                     lattice(iota.domain), maps)) {
    throw InstanceIntegrityError("middle part of " + describe(f) +
                                 " is not a connection: " + *defect);
  }
  const auto iso = internMorphism(pi.codomain, iota.domain, std::move(maps));
  return {pi, iso, iota};
}

std::optional<MorphismRef> LatticeForm::realizeInduced(
    ObjectId from, ObjectId to, std::span<const ZigzagLeg> legs) const {
  auto step = [&](std::uint32_t x, const ZigzagLeg& leg, bool forward) {
    const auto& m = record(leg.hom).maps;
    const bool along = (leg.direction == LegDirection::kRightward) == forward;
    return along ? m.left[x] : m.right[x];
  };
  ObjectId node = from;
  for (const auto& leg : legs) {
    const bool rightward = leg.direction == LegDirection::kRightward;
    if ((rightward ? leg.hom.domain : leg.hom.codomain) != node) {
      throw DomainError("zigzag leg " + toString(leg.hom) +
                        " does not start at node " + toString(node));
    }
    node = rightward ? leg.hom.codomain : leg.hom.domain;
  }
  if (node != to) return std::nullopt;

  ConnectionMaps maps;
  for (std::uint32_t x = 0; x < fiberSize(from); ++x) {
    auto v = x;
    for (const auto& leg : legs) v = step(v, leg, true);
    maps.left.push_back(v);
  }
  for (std::uint32_t y = 0; y < fiberSize(to); ++y) {
    auto v = y;
    for (auto it = legs.rbegin(); it != legs.rend(); ++it) {
      v = step(v, *it, false);
    }
    maps.right.push_back(v);
  }
  if (connectionDefect(lattice(from), lattice(to), maps)) return std::nullopt;
  return internMorphism(from, to, std::move(maps));
}

std::string LatticeForm::describe(ObjectId object) const {
  return record(object).name;
}

std::string LatticeForm::describe(SubobjectRef x) const {
  check(x);
  return std::to_string(x.id) + " in " + describe(x.object);
}

std::string LatticeForm::describe(MorphismRef f) const {
  const auto& m = record(f).maps;
  return describe(f.domain) + " -> " + describe(f.codomain) + " left " +
         formatMap(m.left) + " right " + formatMap(m.right);
}

const FiniteLattice& LatticeForm::lattice(ObjectId object) const {
  return record(object).lattice;
}

const ConnectionMaps& LatticeForm::maps(MorphismRef f) const {
  return record(f).maps;
}

MorphismRef LatticeForm::registerConnection(ObjectId domain, ObjectId codomain,
                                            ConnectionMaps maps) {
  if (auto defect = connectionDefect(lattice(domain), lattice(codomain), maps)) {
    throw InstanceIntegrityError("invalid connection " + describe(domain) +
                                 " -> " + describe(codomain) + ": " + *defect);
  }
  const auto f = internMorphism(domain, codomain, std::move(maps));
  std::lock_guard lock(registeredMutex_);
  if (std::find(registered_.begin(), registered_.end(), f) ==
      registered_.end()) {
    registered_.push_back(f);
  }
  return f;
}

std::shared_ptr<LatticeForm> asLatticeForm(std::vector<FiniteLattice> lattices,
                                           std::vector<std::string> names) {
  return std::make_shared<LatticeForm>(std::move(lattices), std::move(names));
}

}  // namespace noether
