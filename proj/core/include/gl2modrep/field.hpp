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
#include <string>
#include <vector>

#include "gl2modrep/common.hpp"

namespace gl2modrep {

bool is_prime(std::int64_t n);

/// q = p^g together with the cached orders q and M = q^2 - 1.
struct PrimePower {
  std::int64_t p = 0;
  std::int64_t g = 0;
  std::int64_t q = 0;
  std::int64_t M = 0;

  static PrimePower make(std::int64_t p, std::int64_t g);

  bool operator==(const PrimePower& o) const { return p == o.p && g == o.g; }
  bool operator!=(const PrimePower& o) const { return !(*this == o); }
};

/// p^e reduced modulo mod (mod > 0). Used for twisted determinant exponents.
std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t mod);

/// 2x2 matrix over F_q, entries are F_q element indices.
struct Mat2 {
  int a = 0, b = 0, c = 0, d = 0;

  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

/// Arithmetic in F_q and F_{q^2}.
///
/// An element of F_q is the integer whose base-p digits are its coordinates
/// in the power basis of F_p[x]/(f). An element x + y*theta of F_{q^2} is the
/// integer x + q*y, so F_q sits inside F_{q^2} with the same indices.
class FieldCtx {
 public:
  FieldCtx(std::int64_t p, std::int64_t g);

  const PrimePower& pp() const { return pp_; }
  int p() const { return static_cast<int>(pp_.p); }
  int q() const { return static_cast<int>(pp_.q); }
  std::int64_t M() const { return pp_.M; }

  /// Coefficients c_0..c_{g-1} of the monic defining polynomial of F_q/F_p.
  const std::vector<int>& fq_modulus() const { return fq_modulus_; }
  /// theta^2 + b*theta + c = 0 defines F_{q^2}/F_q.
  int quad_b() const { return quad_b_; }
  int quad_c() const { return quad_c_; }

  int add(int x, int y) const { return add_[x * q_ + y]; }
  int mul(int x, int y) const { return mul_[x * q_ + y]; }
  int neg(int x) const { return neg_[x]; }
  int sub(int x, int y) const { return add(x, neg(y)); }
  int inv(int x) const;
  int pow(int x, std::int64_t e) const;
  /// Image of the integer n under Z -> F_p -> F_q.
  int from_int(std::int64_t n) const { return static_cast<int>(mod_floor(n, pp_.p)); }

  bool in_fq(int x) const { return x < q_; }
  int add2(int x, int y) const;
  int neg2(int x) const;
  int sub2(int x, int y) const { return add2(x, neg2(y)); }
  int mul2(int x, int y) const;
  int pow2(int x, std::int64_t e) const;

  /// The fixed generator of F_{q^2}^x.
  int gamma2() const { return pow_[1]; }
  /// gamma2^(q+1), a generator of F_q^x.
  int fq_generator() const { return gen_pow(q_ + 1); }
  /// gamma2^e for any integer e.
  int gen_pow(std::int64_t e) const { return pow_[mod_floor(e, pp_.M)]; }
  /// Discrete logarithm base gamma2 of a nonzero element of F_{q^2}.
  std::int64_t dlog(int x) const;

  /// x^(p^n).
  int frobenius(int x, std::int64_t n) const;

  /// Matrix of multiplication by c on the F_q-basis {1, theta}.
  Mat2 embed_iota(int c) const;

  Mat2 mat_mul(const Mat2& x, const Mat2& y) const;
  int det(const Mat2& x) const { return sub(mul(x.a, x.d), mul(x.b, x.c)); }
  int trace(const Mat2& x) const { return add(x.a, x.d); }
  bool invertible(const Mat2& x) const { return det(x) != 0; }
  Mat2 mat_inv(const Mat2& x) const;
  /// Entrywise x -> x^(p^n).
  Mat2 mat_frobenius(const Mat2& x, std::int64_t n) const;
  Mat2 identity() const { return {1, 0, 0, 1}; }

  std::string element_str(int x) const;

 private:
  PrimePower pp_;
  int q_ = 0;
  std::vector<int> fq_modulus_;
  int quad_b_ = 0, quad_c_ = 0;
  std::vector<int> add_, mul_, neg_;
  std::vector<int> pow_;
  std::vector<std::int64_t> dlog_;
};

}  // namespace gl2modrep
