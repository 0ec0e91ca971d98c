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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gl2modrep/common.hpp"

namespace gl2modrep {

/// Integer polynomial, lowest degree first.
using IntPoly = std::vector<Integer>;

/// The M-th cyclotomic polynomial, by exact division of x^M - 1 by the
/// cyclotomic polynomials of the proper divisors of M.
IntPoly cyclotomic_poly(std::int64_t M);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Shared data for Z[zeta_M] = Z[x]/(Phi_M).
class CycloRing {
 public:
  explicit CycloRing(std::int64_t M);

  /// Process-wide cached instance.
  static std::shared_ptr<const CycloRing> get(std::int64_t M);

  std::int64_t M() const { return M_; }
  std::size_t degree() const { return degree_; }
  const IntPoly& phi() const { return phi_; }

  /// Canonical representative of sum_i a[i] x^i, any length.
  std::vector<Integer> reduce(std::vector<Integer> a) const;
  std::vector<Integer> reduce(const std::vector<std::int64_t>& a) const;

 private:
  std::int64_t M_;
  std::size_t degree_;
  IntPoly phi_;
  // Nonzero non-leading terms of Phi_M.
  std::vector<std::pair<std::size_t, Integer>> tail_;
};

/// Element of Z[zeta_M] stored as its canonical representative of degree
/// below phi(M).
class CycloInt {
 public:
  CycloInt() = default;
  explicit CycloInt(std::shared_ptr<const CycloRing> ring);

  static CycloInt from_int(std::shared_ptr<const CycloRing> ring, const Integer& n);
  static CycloInt zeta_pow(std::shared_ptr<const CycloRing> ring, std::int64_t e);
  /// sum_e counts[e] zeta^e where counts is indexed by exponent.
  static CycloInt from_exponents(std::shared_ptr<const CycloRing> ring,
                                 const std::vector<std::int64_t>& counts);

  const std::shared_ptr<const CycloRing>& ring() const { return ring_; }
  std::int64_t M() const { return ring_ ? ring_->M() : 0; }
  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const;

  CycloInt operator+(const CycloInt& o) const;
  CycloInt operator-(const CycloInt& o) const;
  CycloInt operator-() const;
  CycloInt operator*(const CycloInt& o) const;
  CycloInt& operator+=(const CycloInt& o);
  CycloInt& operator-=(const CycloInt& o);
  bool operator==(const CycloInt& o) const;
  bool operator!=(const CycloInt& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_same(const CycloInt& o) const;

  std::shared_ptr<const CycloRing> ring_;
  std::vector<Integer> c_;
};

}  // namespace gl2modrep
