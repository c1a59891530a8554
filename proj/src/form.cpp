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

#include "noether/form.hpp"

#include "noether/errors.hpp"

namespace noether {

std::optional<MorphismRef> Form::realizeInduced(
    ObjectId /*from*/, ObjectId /*to*/,
    std::span<const ZigzagLeg> /*legs*/) const {
  return std::nullopt;
}

FiberView::FiberView(const Form& form, ObjectId object)
    : form_(&form), object_(object) {
  if (!form.contains(object)) {
    throw DomainError("unknown object " + toString(object));
  }
  size_ = form.fiberSize(object);
}

SubobjectRef FiberView::at(std::size_t i) const {
  if (i >= size_) throw DomainError("fiber index out of range");
  return {object_, static_cast<std::uint32_t>(i)};
}

std::vector<SubobjectRef> FiberView::elements() const {
  std::vector<SubobjectRef> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(at(i));
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FiberView::covers() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const auto all = elements();
  for (const auto a : all) {
    for (const auto b : all) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (const auto c : all) {
        if (c != a && c != b && leq(a, c) && leq(c, b)) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(a.id, b.id);
    }
  }
  return out;
}

FiberView fiberLattice(const Form& form, ObjectId object) {
  return FiberView(form, object);
}

ImageMaps images(const Form& form, MorphismRef f) {
  if (!form.contains(f)) throw DomainError("unknown morphism " + toString(f));
  ImageMaps maps{f, {}, {}};
  const auto domSize = form.fiberSize(f.domain);
  const auto codSize = form.fiberSize(f.codomain);
  maps.direct.reserve(domSize);
  maps.inverse.reserve(codSize);
  for (std::uint32_t i = 0; i < domSize; ++i) {
    maps.direct.push_back(form.directImage(f, {f.domain, i}));
  }
  for (std::uint32_t i = 0; i < codSize; ++i) {
    maps.inverse.push_back(form.inverseImage(f, {f.codomain, i}));
  }
  return maps;
}

KernelImage kernelImage(const Form& form, MorphismRef f) {
  return {form.inverseImage(f, form.bottom(f.codomain)),
          form.directImage(f, form.top(f.domain))};
}

bool isEmbedding(const Form& form, MorphismRef f) {
  return kernelImage(form, f).kernel == form.bottom(f.domain);
}

bool isProjection(const Form& form, MorphismRef f) {
  return kernelImage(form, f).image == form.top(f.codomain);
}

bool isIsomorphism(const Form& form, MorphismRef f) {
  return isEmbedding(form, f) && isProjection(form, f);
}

void requireSameFiber(SubobjectRef a, SubobjectRef b) {
  if (a.object != b.object) {
    throw DomainError("subobjects " + toString(a) + " and " + toString(b) +
                      " live in different fibers");
  }
}

bool relativeNormal(const Form& form, SubobjectRef x, SubobjectRef y) {
  requireSameFiber(x, y);
  if (!form.leq(x, y)) return false;
  if (!form.normality(y).isConormal) return false;
  const auto iota = form.embedding(y);
  if (!iota) return false;
  return form.normality(form.inverseImage(*iota, x)).isNormal;
}

bool Relation::isFunctional() const {
  for (const auto& row : related) {
    std::size_t count = 0;
    for (bool b : row) count += b ? 1 : 0;
    if (count != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> Relation::asMap() const {
  if (!isFunctional()) throw DomainError("relation is not a function");
  std::vector<std::uint32_t> map(rows);
  for (std::size_t x = 0; x < rows; ++x) {
    for (std::size_t y = 0; y < cols; ++y) {
      if (related[x][y]) map[x] = static_cast<std::uint32_t>(y);
    }
  }
  return map;
}

Relation relationalComposite(const ElementView& view, ObjectId from,
                             std::span<const ZigzagLeg> legs) {
  const auto n = view.carrierSize(from);
  Relation rel{n, n, std::vector<std::vector<bool>>(n, std::vector<bool>(n))};
  for (std::size_t x = 0; x < n; ++x) rel.related[x][x] = true;

  ObjectId node = from;
  for (const auto& leg : legs) {
    const bool rightward = leg.direction == LegDirection::kRightward;
    const ObjectId source = rightward ? leg.hom.domain : leg.hom.codomain;
    const ObjectId target = rightward ? leg.hom.codomain : leg.hom.domain;
    if (source != node) {
      throw DomainError("zigzag leg " + toString(leg.hom) +
                        " does not start at node " + toString(node));
    }
    const auto map = view.elementMap(leg.hom);
    const auto targetSize = view.carrierSize(target);
    std::vector<std::vector<bool>> next(rel.rows,
                                        std::vector<bool>(targetSize));
    for (std::size_t x = 0; x < rel.rows; ++x) {
      for (std::size_t y = 0; y < rel.cols; ++y) {
        if (!rel.related[x][y]) continue;
        if (rightward) {
          next[x][map[y]] = true;
        } else {
          for (std::size_t z = 0; z < targetSize; ++z) {
            if (map[z] == y) next[x][z] = true;
          }
        }
      }
    }
    rel.related = std::move(next);
    rel.cols = targetSize;
    node = target;
  }
  return rel;
}

std::string toString(ObjectId object) {
  return "obj#" + std::to_string(object.value);
}

std::string toString(SubobjectRef x) {
  return toString(x.object) + ".sub#" + std::to_string(x.id);
}

std::string toString(MorphismRef f) {
  return "hom#" + std::to_string(f.id) + "(" + toString(f.domain) + "->" +
         toString(f.codomain) + ")";
}

}  // namespace noether
