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

#include <algorithm>

#include "noether/form.hpp"

namespace noether {
namespace {

MorphismRef flip(MorphismRef f) { return {f.codomain, f.domain, f.id}; }

std::optional<MorphismRef> flip(std::optional<MorphismRef> f) {
  if (!f) return std::nullopt;
  return flip(*f);
}

class DualForm final : public Form {
 public:
  explicit DualForm(std::shared_ptr<const Form> inner)
      : inner_(std::move(inner)) {}

  const std::shared_ptr<const Form>& inner() const { return inner_; }

  std::string label() const override {
    return "dual(" + inner_->label() + ")";
  }
  std::vector<ObjectId> baseObjects() const override {
    return inner_->baseObjects();
  }
  std::vector<ObjectId> objects() const override { return inner_->objects(); }
  bool contains(ObjectId o) const override { return inner_->contains(o); }
  bool contains(MorphismRef f) const override {
    return inner_->contains(flip(f));
  }

  std::size_t fiberSize(ObjectId o) const override {
    return inner_->fiberSize(o);
  }
  bool leq(SubobjectRef a, SubobjectRef b) const override {
    return inner_->leq(b, a);
  }
  SubobjectRef meet(SubobjectRef a, SubobjectRef b) const override {
    return inner_->join(a, b);
  }
  SubobjectRef join(SubobjectRef a, SubobjectRef b) const override {
    return inner_->meet(a, b);
  }
  SubobjectRef bottom(ObjectId o) const override { return inner_->top(o); }
  SubobjectRef top(ObjectId o) const override { return inner_->bottom(o); }

  MorphismRef identity(ObjectId o) const override {
    return flip(inner_->identity(o));
  }
  MorphismRef compose(MorphismRef after, MorphismRef before) const override {
    return flip(inner_->compose(flip(before), flip(after)));
  }
  SubobjectRef directImage(MorphismRef f, SubobjectRef x) const override {
    return inner_->inverseImage(flip(f), x);
  }
  SubobjectRef inverseImage(MorphismRef f, SubobjectRef y) const override {
    return inner_->directImage(flip(f), y);
  }
  std::vector<MorphismRef> registeredMorphisms() const override {
    auto out = inner_->registeredMorphisms();
    std::transform(out.begin(), out.end(), out.begin(),
                   [](MorphismRef f) { return flip(f); });
    return out;
  }

  Normality normality(SubobjectRef x) const override {
    const auto n = inner_->normality(x);
    return {n.isConormal, n.isNormal, flip(n.embeddingWitness),
            flip(n.projectionWitness)};
  }
  std::optional<MorphismRef> embedding(SubobjectRef x) const override {
    return flip(inner_->projection(x));
  }
  std::optional<MorphismRef> projection(SubobjectRef x) const override {
    return flip(inner_->embedding(x));
  }
  FactorizationTriple factorize(MorphismRef f) const override {
    const auto t = inner_->factorize(flip(f));
    return {flip(t.embeddingPart), flip(t.isoPart), flip(t.projectionPart)};
  }

  std::optional<MorphismRef> realizeInduced(
      ObjectId from, ObjectId to,
      std::span<const ZigzagLeg> legs) const override {
    // The same diagram read in the original category from the far end.
    std::vector<ZigzagLeg> original;
    original.reserve(legs.size());
    for (auto it = legs.rbegin(); it != legs.rend(); ++it) {
      original.push_back({flip(it->hom), it->direction});
    }
    return flip(inner_->realizeInduced(to, from, original));
  }

  std::string describe(ObjectId o) const override {
    return inner_->describe(o);
  }
  std::string describe(SubobjectRef x) const override {
    return inner_->describe(x);
  }
  std::string describe(MorphismRef f) const override {
    return "op(" + inner_->describe(flip(f)) + ")";
  }

 private:
  std::shared_ptr<const Form> inner_;
};

}  // namespace

std::shared_ptr<const Form> dualize(std::shared_ptr<const Form> form) {
  return std::make_shared<DualForm>(std::move(form));
}

std::shared_ptr<const Form> dualSource(const Form& form) {
  const auto* dual = dynamic_cast<const DualForm*>(&form);
  return dual ? dual->inner() : nullptr;
}

}  // namespace noether
