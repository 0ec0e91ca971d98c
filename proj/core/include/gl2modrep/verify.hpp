/*
 * Copyright 2026 The gl2modrep Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "gl2modrep/brauer.hpp"
#include "gl2modrep/k0.hpp"

namespace gl2modrep {

/// Outcome of checking one identity instance along both routes.
struct IdentityCheck {
  VirtualRep lhs;  // standard form of the left side
  VirtualRep rhs;  // standard form of the right side
  bool standard_forms_equal = false;
  bool characters_equal = false;  // raw sides compared on all regular classes
  bool fidelity = false;          // char(standard form) == char(raw side), both sides

  bool holds() const { return standard_forms_equal && characters_equal && fidelity; }
};

IdentityCheck check_identity(Normalizer& norm, Identity id, const std::vector<std::int64_t>& params);

/// True iff both sides normalize to the same standard form and have equal
/// Brauer characters on all regular classes.
bool verify_identity(Normalizer& norm, Identity id, const std::vector<std::int64_t>& params);

}  // namespace gl2modrep
