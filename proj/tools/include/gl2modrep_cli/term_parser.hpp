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

#include <string>
#include <utility>
#include <vector>

#include "gl2modrep/k0.hpp"

namespace gl2modrep::cli {

/// Parses expressions such as "2*e^3*M5[0]*M2[1] - M-3[1] + 4".
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT | 'e' ['^' INT] | 'M' INT ['[' INT ']']
///
/// Whitespace is ignored. A factor without a twist index has twist 0.
Expr parse_expr(const std::string& text);

/// "a..b" (inclusive) or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);
/// Comma-separated integers.
std::vector<std::int64_t> parse_int_list(const std::string& text);
/// Blocks separated by ';', each a comma-separated list.
std::vector<std::vector<std::int64_t>> parse_blocks(const std::string& text);
std::vector<std::vector<std::string>> parse_word_blocks(const std::string& text);

}  // namespace gl2modrep::cli
