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

#include <optional>
#include <string>
#include <vector>

#include "noether/finite_group.hpp"

namespace noether {

/// Brute-force isomorphism search: generator images are tried by
/// backtracking and extended along words.
std::optional<std::vector<std::uint32_t>> findIsomorphism(const FiniteGroup& a,
                                                          const FiniteGroup& b);

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/// Catalogue label of the isomorphism class of g. Throws UnsupportedError
/// beyond the catalogue's range.
std::string identifyGroup(const FiniteGroup& g);

}  // namespace noether
