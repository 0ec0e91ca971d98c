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

#include "gl2modrep/verify.hpp"

namespace gl2modrep {

IdentityCheck check_identity(Normalizer& norm, Identity id,
                             const std::vector<std::int64_t>& params) {
  const PrimePower& pp = norm.pp();
  const IdentityInstance inst = identity_instance(pp, id, params);
  IdentityCheck out;
  out.lhs = norm.normalize(inst.lhs);
  out.rhs = norm.normalize(inst.rhs);
  out.standard_forms_equal = out.lhs == out.rhs;
  out.characters_equal = char_equal(pp, inst.lhs, inst.rhs);
  out.fidelity = char_equal(out.lhs, inst.lhs) && char_equal(out.rhs, inst.rhs);
  return out;
}

bool verify_identity(Normalizer& norm, Identity id, const std::vector<std::int64_t>& params) {
  return check_identity(norm, id, params).holds();
}

}  // namespace gl2modrep
