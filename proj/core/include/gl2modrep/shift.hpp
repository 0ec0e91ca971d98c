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
#include <optional>
#include <string>
#include <vector>

#include "gl2modrep/modrep.hpp"

namespace gl2modrep {

/// Residue degrees f_1..f_r of the primes above an odd prime p.
struct PrimeSplit {
  std::int64_t p = 3;
  std::vector<std::int64_t> f;

  static PrimeSplit make(std::int64_t p, std::vector<std::int64_t> f);
  std::int64_t g() const;
  std::int64_t min_f() const;
};

/// Holomorphic weight (k, w): k[j] has length f_j.
struct WeightParams {
  std::vector<std::vector<std::int64_t>> k;
  std::int64_t w = 0;

  bool operator==(const WeightParams& o) const { return k == o.k && w == o.w; }
};

/// Returns the common value of k + 2 w_vec - 1; throws ArgumentError if it
/// is not constant, if shapes differ, or if some k entry is below 2.
std::int64_t validate_holomorphic(const std::vector<std::vector<std::int64_t>>& k,
                                  const std::vector<std::vector<std::int64_t>>& w_vec);

/// Per-embedding det exponents w_i = (w + 1 - k_i) / 2.
std::vector<std::vector<std::int64_t>> weight_exponents(const WeightParams& wp);

struct ShiftChoice {
  std::int64_t beta = 1;
  /// a[j][i] is p^beta + 1 (theta) or p^beta - 1 (D).
  std::vector<std::vector<std::int64_t>> a;

  /// theta[j][i] selects p^beta + 1.
  static ShiftChoice from_selectors(std::int64_t p, std::int64_t beta,
                                    const std::vector<std::vector<bool>>& theta);
};

/// One intertwining operator of a recipe, on the block GL_2(F_{p^f}).
struct OpStep {
  OperatorKind kind = OperatorKind::kTheta;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;  // unused for the classical operators

  std::string name() const { return operator_name(kind, alpha, beta); }
  bool operator==(const OpStep& o) const {
    return kind == o.kind && alpha == o.alpha && beta == o.beta;
  }
};

struct ShiftPlan {
  PrimeSplit split;
  WeightParams input;
  ShiftChoice choice;
  bool accepted = false;
  std::optional<std::string> condition;  // "(*)" or "(**)"
  std::optional<std::string> rejection;
  WeightParams target;
  /// recipe[j]: operators of block j in application order.
  std::vector<std::vector<OpStep>> recipe;
};

ShiftPlan plan_general(const PrimeSplit& split, const WeightParams& wp, const ShiftChoice& choice);

struct F2Params {
  std::int64_t p = 3;
  std::int64_t k0 = 2, k1 = 2, w = 1;
  std::int64_t n = 0, m = 0, r = 0, s = 0, t = 0, u = 0, v = 0, z = 0;
  std::int64_t alpha0 = 0;
  /// Det exponent multiple on the second factor; defaults to alpha0.
  std::optional<std::int64_t> alpha1;
};

struct F2Plan {
  F2Params params;
  bool accepted = false;
  std::optional<std::string> condition;
  std::optional<std::string> rejection;
  std::int64_t k0 = 0, k1 = 0, w = 0;
  /// False when alpha1 != alpha0: the weight may still be valid, but
  /// positivity of the target is not guaranteed by the theory.
  bool verified = true;
  /// Scalar c of the D-part on the highest-weight vector, under (**).
  std::optional<std::int64_t> c;
};

F2Plan plan_f2(const F2Params& params);

/// Falling-factorial product c mod p; true iff c != 0. Throws ArgumentError
/// when an intermediate exponent is negative.
bool check_c_nonzero(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t s,
                     std::int64_t v, std::int64_t z, std::int64_t p);
std::int64_t c_value(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t s,
                     std::int64_t v, std::int64_t z, std::int64_t p);

struct ShiftRow {
  std::string name;
  OpStep op;
  std::vector<std::string> entries;
};

struct ShiftTables {
  std::vector<ShiftRow> theta;
  std::vector<ShiftRow> d;
};

/// The g^2 theta rows and g^2 D rows, with symbolic entries in p and q.
ShiftTables shift_vector_tables(std::int64_t g);
/// Numeric shift vector of an operator on GL_2(F_{p^g}).
std::vector<std::int64_t> shift_vector(const OpStep& op, std::int64_t p, std::int64_t g);

struct LambdaReport {
  std::vector<OpStep> steps;
  ModuleSpec src;
  ModuleSpec dst;
  std::int64_t src_dim = 0;
  std::int64_t dst_dim = 0;
  std::int64_t rank = 0;
  bool injective = false;
  bool equivariant = false;
  /// "composite" or "per-stage".
  std::string equivariance_mode;
  LinMap map;
};

/// Composite of the given operators applied in order to the block with
/// degrees `degrees` (twist i at position i).
LambdaReport compile_steps(std::int64_t p, const std::vector<std::int64_t>& degrees,
                           const std::vector<OpStep>& steps);
/// Lambda_j of a plan: block j with degrees k - 2.
LambdaReport compile_lambda(const ShiftPlan& plan, std::size_t j);

/// Operators realizing the two-embedding shift, in application order.
std::vector<OpStep> main2_steps(const F2Params& params);

}  // namespace gl2modrep
