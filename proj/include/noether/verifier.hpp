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

#include <cstdint>
#include <string>
#include <vector>

#include "noether/form.hpp"

namespace noether {

struct VerifyOptions {
  /// Maximum number of checked tuples across all checks of one run.
  std::uint64_t budget = 50'000'000;
  /// Maximum size of the generated morphism family.
  std::size_t maxFamily = 4000;
};

enum class CheckStatus { kPass, kFail, kSkipped };

std::string toString(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::uint64_t tuples = 0;
  /// Handles and descriptions of a failing tuple; empty otherwise.
  std::string witness;
  std::string detail;
};

struct ConformanceReport {
  std::string instance;
  std::string morphismFamily;
  std::string oracle;
  std::vector<CheckResult> checks;
  /// Informational results that never make the report fail.
  std::vector<CheckResult> observations;
  std::uint64_t tuplesChecked = 0;
  double elapsedMs = 0;

  /// No check failed.
  bool ok() const;
  const CheckResult* find(const std::string& name) const;
  /// Deterministic unless timing is requested.
  std::string toJson(bool includeTiming = false) const;
  std::string toText() const;
};

/// Morphisms over which quantified checks range.
struct MorphismFamily {
  std::vector<MorphismRef> morphisms;
  std::vector<ObjectId> objects;
  std::string label;
};

/// Identities of the base objects, embeddings and projections of their
/// subobjects, registered morphisms, the factorization parts of all of
/// these, and composites of two or three of them, up to `cap` morphisms.
MorphismFamily buildMorphismFamily(const Form& form, std::size_t cap);

/// Lattice structure of the fibers, the Galois connection of every morphism,
/// functoriality, the image identities, factorizations, closure of normal
/// joins and conormal meets, normality witnesses and agreement with an
/// independent oracle where one exists.
ConformanceReport verifyAxioms(const Form& form, VerifyOptions options = {});

/// Derived laws: lattice isomorphism along morphisms, the restricted and
/// less restricted modular laws, Frobenius reciprocity for conormal
/// subobjects and its dual for normal ones, meet and join stability of
/// relative normality and the canonical subfactor zigzag identity. The
/// unrestricted modular law is reported as an observation.
ConformanceReport verifyTheorems(const Form& form, VerifyOptions options = {});

}  // namespace noether
