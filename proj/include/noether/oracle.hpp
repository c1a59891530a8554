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

#include <memory>
#include <string>

#include "noether/form.hpp"

namespace noether {

/// Second implementation of the image maps, fiber operations and normality
/// flags of an instance, written straight from the raw data (Cayley tables,
/// connection tables) without the instance's precomputed structure. Used
/// only by the verifier as an independent reference.
class IndependentOracle {
 public:
  virtual ~IndependentOracle() = default;
  virtual std::string name() const = 0;
  virtual SubobjectRef directImage(MorphismRef f, SubobjectRef x) const = 0;
  virtual SubobjectRef inverseImage(MorphismRef f, SubobjectRef y) const = 0;
  virtual SubobjectRef meet(SubobjectRef a, SubobjectRef b) const = 0;
  virtual SubobjectRef join(SubobjectRef a, SubobjectRef b) const = 0;
  virtual bool isNormal(SubobjectRef x) const = 0;
  virtual bool isConormal(SubobjectRef x) const = 0;
};

/// Oracle for the group and lattice instances and their duals; nullptr for
/// any other form.
std::unique_ptr<IndependentOracle> makeOracle(const Form& form);

}  // namespace noether
