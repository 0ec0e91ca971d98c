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
#include <vector>

#include "gl2modrep/cyclo.hpp"
#include "gl2modrep/field.hpp"
#include "gl2modrep/k0.hpp"

namespace gl2modrep {

/// A semisimple conjugacy class of GL_2(F_q), described by the discrete
/// logarithms u, v (base gamma2) of its two eigenvalues.
///   kCentral:  diag(a, a), u = v = dlog a.
///   kSplit:    diag(a, b), u = dlog a < v = dlog b.
///   kNonSplit: iota(c), u = min(dlog c, dlog c^q), v = u*q mod M.
struct ConjClass {
  enum class Kind { kCentral, kSplit, kNonSplit };
  Kind kind = Kind::kCentral;
  std::int64_t u = 0;
  std::int64_t v = 0;

  bool operator==(const ConjClass& o) const { return kind == o.kind && u == o.u && v == o.v; }
  std::string describe() const;
};

std::string kind_name(ConjClass::Kind k);

/// Canonical representatives: central, then split, then non-split classes.
std::vector<ConjClass> regular_classes(const FieldCtx& ctx);
Mat2 class_representative(const FieldCtx& ctx, const ConjClass& cls);

/// Values of a virtual character on every regular class, aligned with
/// BrauerOracle::classes().
struct CharVector {
  std::vector<CycloInt> values;

  bool operator==(const CharVector& o) const { return values == o.values; }
  bool operator!=(const CharVector& o) const { return !(*this == o); }
  bool is_zero() const;
  CharVector operator-(const CharVector& o) const;
};

/// Per-class Brauer character evaluation with exact values in Z[zeta_M].
/// The Teichmueller lift is pinned by chi(gamma2^e) = zeta^e.
class BrauerOracle {
 public:
  explicit BrauerOracle(std::shared_ptr<const FieldCtx> ctx);

  const FieldCtx& ctx() const { return *ctx_; }
  const std::vector<ConjClass>& classes() const { return classes_; }
  const std::shared_ptr<const CycloRing>& ring() const { return ring_; }

  CycloInt char_sym(std::int64_t k, const ConjClass& cls, std::int64_t twist = 0) const;
  CycloInt char_term(const RawTerm& t, const ConjClass& cls) const;
  CycloInt char_expr(const Expr& e, const ConjClass& cls) const;

  CharVector char_expr(const Expr& e) const;
  CharVector char_vrep(const VirtualRep& v) const;

  bool char_equal(const Expr& a, const Expr& b) const;
  bool char_equal(const VirtualRep& a, const VirtualRep& b) const;

 private:
  // Adds coeff times the exponent multiset of the term at cls into counts.
  void accumulate(const RawTerm& t, const ConjClass& cls, std::vector<std::int64_t>& counts) const;

  std::shared_ptr<const FieldCtx> ctx_;
  std::shared_ptr<const CycloRing> ring_;
  std::vector<ConjClass> classes_;
};

/// Image of a virtual character in Z[C_{q-1} x C_{q-1}] x Z[C_M].
///
/// A character polynomial P(a, b) in the eigenvalue lifts is reduced with
/// exponents mod q-1 in each variable (central and split classes) and via
/// a^i b^j -> x^{i + q j mod M} (central and non-split classes). By Fourier
/// inversion on these cyclic groups, the virtual character vanishes on every
/// regular class iff both reductions are zero.
class GroupRingImage {
 public:
  explicit GroupRingImage(const PrimePower& pp);

  void add(const RawTerm& t);
  void add(const Expr& e);
  void add(const VirtualRep& v, const Integer& scale = 1);

  bool is_zero() const;
  bool operator==(const GroupRingImage& o) const;
  bool operator!=(const GroupRingImage& o) const { return !(*this == o); }
  GroupRingImage operator-(const GroupRingImage& o) const;
  std::size_t hash() const;

  const std::vector<std::int64_t>& split_part() const { return split_; }
  const std::vector<std::int64_t>& nonsplit_part() const { return nonsplit_; }

 private:
  // Monomials a^i b^j with exponents reduced mod M.
  struct Mono {
    std::int64_t i, j, c;
  };
  void add_monos(const std::vector<Mono>& monos);

  PrimePower pp_;
  std::vector<std::int64_t> split_;
  std::vector<std::int64_t> nonsplit_;
};

GroupRingImage char_image(const PrimePower& pp, const Expr& e);
GroupRingImage char_image(const VirtualRep& v);

/// Exact equality of virtual characters on all regular classes.
bool char_equal(const PrimePower& pp, const Expr& a, const Expr& b);
bool char_equal(const VirtualRep& a, const VirtualRep& b);
bool char_equal(const VirtualRep& a, const Expr& b);

}  // namespace gl2modrep
