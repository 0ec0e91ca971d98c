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

#include <json.hpp>

#include "gl2modrep/brauer.hpp"
#include "gl2modrep/k0.hpp"
#include "gl2modrep/modrep.hpp"
#include "gl2modrep/shift.hpp"

namespace gl2modrep::cli {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, others strings.
json integer_json(const Integer& x);
Integer integer_from_json(const json& j);

/// {"p", "g", "terms": [{"coeff", "m", "ks"}]} sorted by (m, ks).
json to_json(const VirtualRep& v);
VirtualRep vrep_from_json(const json& j);

/// {"p", "g", "M", "classes": [{"kind", "u", "v", "value": [...]}]}.
json to_json(const BrauerOracle& oracle, const CharVector& chars);

json to_json(const ModuleSpec& spec);
/// {"p", "g", "src", "dst", "det_twist", "rows", "cols", "data"}, data row-major.
json to_json(const LinMap& map);

json to_json(const ShiftPlan& plan);
json to_json(const F2Plan& plan);
json to_json(const ShiftTables& tables, std::int64_t g);
json to_json(const LambdaReport& rep);

}  // namespace gl2modrep::cli
