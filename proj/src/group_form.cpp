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

#include "noether/group_form.hpp"

#include <algorithm>

#include "noether/errors.hpp"

namespace noether {

struct GroupForm::ObjectRecord {
  FiniteGroup group;
  Provenance provenance;
  std::vector<SubgroupSet> subgroups;
  std::unordered_map<ElementBits, std::uint32_t> index;
  detail::LatticeTables lattice;
  std::vector<char> normal;
};

struct GroupForm::MorphismRecord {
  ObjectId domain;
  ObjectId codomain;
  std::vector<std::uint32_t> map;
  std::vector<std::uint32_t> direct;   // by domain subgroup id
  std::vector<std::uint32_t> inverse;  // by codomain subgroup id
};

namespace {

enum KeyTag : std::uint32_t { kBaseKey = 0, kSubgroupKey = 1, kQuotientKey = 2 };

std::uint32_t lookup(const std::unordered_map<ElementBits, std::uint32_t>& index,
                     const ElementBits& bits) {
  const auto it = index.find(bits);
  if (it == index.end()) {
    throw InstanceIntegrityError("element set is not a registered subgroup");
  }
  return it->second;
}

}  // namespace

GroupForm::GroupForm(std::vector<FiniteGroup> groups, GroupFormOptions options)
    : options_(options) {
  if (options_.maxOrder > kMaxGroupOrder) options_.maxOrder = kMaxGroupOrder;
  for (auto& g : groups) {
    const auto key = std::uint32_t(baseCount_);
    internObject({kBaseKey, key}, std::move(g), {ObjectKind::kBase, {}});
    ++baseCount_;
  }
}

GroupForm::~GroupForm() = default;

ObjectId GroupForm::internObject(detail::Registry<ObjectRecord>::Key key,
                                 FiniteGroup group,
                                 Provenance provenance) const {
  if (group.order() > options_.maxOrder) {
    throw ValidationError(group.name() + " has order " +
                          std::to_string(group.order()) +
                          " above the configured maximum " +
                          std::to_string(options_.maxOrder));
  }
  const auto id = objects_.intern(key, [&] {
    ObjectRecord rec{std::move(group), provenance, {}, {}, {}, {}};
    rec.subgroups = allSubgroups(rec.group);
    const auto n = static_cast<std::uint32_t>(rec.subgroups.size());
    for (std::uint32_t i = 0; i < n; ++i) {
      rec.index.emplace(rec.subgroups[i].bits(), i);
    }
    auto& lat = rec.lattice;
    lat.size = n;
    lat.leq.resize(std::size_t(n) * n);
    lat.meet.resize(std::size_t(n) * n);
    lat.join.resize(std::size_t(n) * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        const auto& sa = rec.subgroups[a];
        const auto& sb = rec.subgroups[b];
        lat.leq[a * n + b] = sa.isSubsetOf(sb);
        lat.meet[a * n + b] = lookup(rec.index, sa.bits() & sb.bits());
        lat.join[a * n + b] =
            b < a ? lat.join[b * n + a]
                  : lookup(rec.index, closure(rec.group, sa.bits() | sb.bits()).bits());
      }
    }
    lat.bottom = 0;
    lat.top = n - 1;
    rec.normal.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      rec.normal[i] = isNormalSubgroup(rec.group, rec.subgroups[i]);
    }
    return rec;
  });
  return ObjectId{id};
}

MorphismRef GroupForm::internMorphism(ObjectId domain, ObjectId codomain,
                                      std::vector<std::uint32_t> map) const {
  detail::Registry<MorphismRecord>::Key key{domain.value, codomain.value};
  key.insert(key.end(), map.begin(), map.end());
  const auto id = morphisms_.intern(key, [&] {
    const auto& dom = record(domain);
    const auto& cod = record(codomain);
    MorphismRecord rec{domain, codomain, std::move(map), {}, {}};
    rec.direct.reserve(dom.subgroups.size());
    for (const auto& s : dom.subgroups) {
      ElementBits image;
      for (const auto x : s.elements()) image.set(rec.map[x]);
      rec.direct.push_back(lookup(cod.index, closure(cod.group, image).bits()));
    }
    rec.inverse.reserve(cod.subgroups.size());
    for (const auto& t : cod.subgroups) {
      ElementBits pre;
      for (std::uint32_t x = 0; x < dom.group.order(); ++x) {
        if (t.contains(rec.map[x])) pre.set(x);
      }
      rec.inverse.push_back(lookup(dom.index, pre));
    }
    return rec;
  });
  return {domain, codomain, id};
}

const GroupForm::ObjectRecord& GroupForm::record(ObjectId object) const {
  return objects_.at(object.value, "object");
}

const GroupForm::ObjectRecord& GroupForm::record(SubobjectRef x) const {
  const auto& rec = record(x.object);
  if (x.id >= rec.subgroups.size()) {
    throw DomainError("unknown subobject " + toString(x));
  }
  return rec;
}

const GroupForm::MorphismRecord& GroupForm::record(MorphismRef f) const {
  const auto& rec = morphisms_.at(f.id, "morphism");
  if (rec.domain != f.domain || rec.codomain != f.codomain) {
    throw DomainError("morphism handle " + toString(f) +
                      " does not match its registered endpoints");
  }
  return rec;
}

std::string GroupForm::label() const {
  std::string out = "groups(";
  for (std::size_t i = 0; i < baseCount_; ++i) {
    if (i) out += ",";
    out += record(ObjectId{std::uint32_t(i)}).group.name();
  }
  return out + ")";
}

std::vector<ObjectId> GroupForm::baseObjects() const {
  std::vector<ObjectId> out;
  for (std::uint32_t i = 0; i < baseCount_; ++i) out.push_back({i});
  return out;
}

std::vector<ObjectId> GroupForm::objects() const {
  std::vector<ObjectId> out;
  const auto n = objects_.size();
  for (std::uint32_t i = 0; i < n; ++i) out.push_back({i});
  return out;
}

bool GroupForm::contains(ObjectId object) const {
  return objects_.contains(object.value);
}

bool GroupForm::contains(MorphismRef f) const {
  if (!morphisms_.contains(f.id)) return false;
  const auto& rec = morphisms_.at(f.id, "morphism");
  return rec.domain == f.domain && rec.codomain == f.codomain;
}

std::size_t GroupForm::fiberSize(ObjectId object) const {
  return record(object).subgroups.size();
}

bool GroupForm::leq(SubobjectRef a, SubobjectRef b) const {
  requireSameFiber(a, b);
  record(b);
  return record(a).lattice.le(a.id, b.id);
}

SubobjectRef GroupForm::meet(SubobjectRef a, SubobjectRef b) const {
  requireSameFiber(a, b);
  record(b);
  return {a.object, record(a).lattice.m(a.id, b.id)};
}

SubobjectRef GroupForm::join(SubobjectRef a, SubobjectRef b) const {
  requireSameFiber(a, b);
  record(b);
  return {a.object, record(a).lattice.j(a.id, b.id)};
}

SubobjectRef GroupForm::bottom(ObjectId object) const {
  return {object, record(object).lattice.bottom};
}

SubobjectRef GroupForm::top(ObjectId object) const {
  return {object, record(object).lattice.top};
}

MorphismRef GroupForm::identity(ObjectId object) const {
  std::vector<std::uint32_t> map(record(object).group.order());
  for (std::uint32_t i = 0; i < map.size(); ++i) map[i] = i;
  return internMorphism(object, object, std::move(map));
}

MorphismRef GroupForm::compose(MorphismRef after, MorphismRef before) const {
  if (before.codomain != after.domain) {
    throw DomainError("cannot compose " + toString(after) + " after " +
                      toString(before));
  }
  const auto& f = record(after);
  const auto& g = record(before);
  std::vector<std::uint32_t> map(g.map.size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = f.map[g.map[x]];
  return internMorphism(before.domain, after.codomain, std::move(map));
}

SubobjectRef GroupForm::directImage(MorphismRef f, SubobjectRef x) const {
  if (x.object != f.domain) {
    throw DomainError(toString(x) + " is not in the domain of " + toString(f));
  }
  record(x);
  return {f.codomain, record(f).direct[x.id]};
}

SubobjectRef GroupForm::inverseImage(MorphismRef f, SubobjectRef y) const {
  if (y.object != f.codomain) {
    throw DomainError(toString(y) + " is not in the codomain of " +
                      toString(f));
  }
  record(y);
  return {f.domain, record(f).inverse[y.id]};
}

std::vector<MorphismRef> GroupForm::registeredMorphisms() const {
  std::lock_guard lock(registeredMutex_);
  return registered_;
}

Normality GroupForm::normality(SubobjectRef x) const {
  const bool normal = record(x).normal[x.id];
  return {normal, true, projection(x), embedding(x)};
}

MorphismRef GroupForm::inclusionOf(SubobjectRef x) const {
  const auto& parent = record(x);
  if (x.id == parent.lattice.top) return identity(x.object);
  auto realized = realizeSubgroup(parent.group, parent.subgroups[x.id]);
  const auto object = internObject({kSubgroupKey, x.object.value, x.id},
                                   std::move(realized.group),
                                   {ObjectKind::kSubgroup, x});
  return internMorphism(object, x.object, std::move(realized.inclusion));
}

MorphismRef GroupForm::quotientBy(SubobjectRef n) const {
  const auto& parent = record(n);
  if (!parent.normal[n.id]) {
    throw DomainError(describe(n) + " is not normal");
  }
  if (n.id == parent.lattice.bottom) return identity(n.object);
  auto q = quotientGroup(parent.group, parent.subgroups[n.id]);
  const auto object = internObject({kQuotientKey, n.object.value, n.id},
                                   std::move(q.group),
                                   {ObjectKind::kQuotient, n});
  return internMorphism(n.object, object, std::move(q.projection));
}

std::optional<MorphismRef> GroupForm::embedding(SubobjectRef x) const {
  return inclusionOf(x);
}

std::optional<MorphismRef> GroupForm::projection(SubobjectRef x) const {
  if (!record(x).normal[x.id]) return std::nullopt;
  return quotientBy(x);
}

FactorizationTriple GroupForm::factorize(MorphismRef f) const {
  const auto& rec = record(f);
  const auto ker = inverseImage(f, bottom(f.codomain));
  const auto im = directImage(f, top(f.domain));
  const auto pi = projection(ker);
  if (!pi) {
    throw InstanceIntegrityError("kernel of " + describe(f) +
                                 " has no projection");
  }
  const auto iota = inclusionOf(im);
  const auto& piMap = record(*pi).map;
  const auto& iotaMap = record(iota).map;

  // h(q) = iota^-1(f(x)) for any x with pi(x) = q.
  std::vector<std::uint32_t> h(record(pi->codomain).group.order());
  std::vector<std::uint32_t> position(record(f.codomain).group.order());
  for (std::uint32_t i = 0; i < iotaMap.size(); ++i) position[iotaMap[i]] = i;
  for (std::uint32_t x = static_cast<std::uint32_t>(piMap.size()); x-- > 0;) {
    h[piMap[x]] = position[rec.map[x]];
  }
  const auto iso = homFromMap(pi->codomain, iota.domain, h);
  if (!iso) {
    throw InstanceIntegrityError("induced map of " + describe(f) +
                                 " is not a homomorphism");
  }
  return {*pi, *iso, iota};
}

std::optional<MorphismRef> GroupForm::realizeInduced(
    ObjectId from, ObjectId to, std::span<const ZigzagLeg> legs) const {
  const auto rel = relationalComposite(*this, from, legs);
  if (rel.cols != carrierSize(to) || !rel.isFunctional()) return std::nullopt;
  const auto map = rel.asMap();
  return homFromMap(from, to, map);
}

std::size_t GroupForm::carrierSize(ObjectId object) const {
  return record(object).group.order();
}

std::vector<std::uint32_t> GroupForm::elementMap(MorphismRef f) const {
  return record(f).map;
}

std::optional<MorphismRef> GroupForm::homFromMap(
    ObjectId domain, ObjectId codomain,
    std::span<const std::uint32_t> map) const {
  if (!isHomomorphism(record(domain).group, record(codomain).group, map)) {
    return std::nullopt;
  }
  return internMorphism(domain, codomain, {map.begin(), map.end()});
}

const FiniteGroup& GroupForm::group(ObjectId object) const {
  return record(object).group;
}

const SubgroupSet& GroupForm::subgroup(SubobjectRef x) const {
  return record(x).subgroups[x.id];
}

SubobjectRef GroupForm::subobject(ObjectId object, const SubgroupSet& set) const {
  const auto& rec = record(object);
  const auto it = rec.index.find(set.bits());
  if (it == rec.index.end()) {
    throw DomainError(formatElements(set) + " is not a subgroup of " +
                      rec.group.name());
  }
  return {object, it->second};
}

SubobjectRef GroupForm::subobject(ObjectId object,
                                  std::span<const std::uint32_t> elements) const {
  return subobject(object, SubgroupSet::fromElements(elements));
}

GroupForm::Provenance GroupForm::provenance(ObjectId object) const {
  return record(object).provenance;
}

MorphismRef GroupForm::registerHom(ObjectId domain, ObjectId codomain,
                                   std::vector<std::uint32_t> map) {
  const auto f = homFromMap(domain, codomain, map);
  if (!f) {
    throw ValidationError("map from " + describe(domain) + " to " +
                          describe(codomain) + " is not a homomorphism");
  }
  std::lock_guard lock(registeredMutex_);
  if (std::find(registered_.begin(), registered_.end(), *f) ==
      registered_.end()) {
    registered_.push_back(*f);
  }
  return *f;
}

std::string GroupForm::describe(ObjectId object) const {
  return record(object).group.name();
}

std::string GroupForm::describe(SubobjectRef x) const {
  return formatElements(subgroup(x)) + " in " + describe(x.object);
}

std::string GroupForm::describe(MorphismRef f) const {
  std::string out = describe(f.domain) + " -> " + describe(f.codomain) + " [";
  const auto& map = record(f).map;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(map[i]);
  }
  return out + "]";
}

std::shared_ptr<GroupForm> asGroupForm(std::vector<FiniteGroup> groups,
                                       GroupFormOptions options) {
  return std::make_shared<GroupForm>(std::move(groups), options);
}

}  // namespace noether
