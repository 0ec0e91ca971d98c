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
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gl2modrep/common.hpp"
#include "gl2modrep/field.hpp"

namespace gl2modrep {

/// det^m (x) M_{ks[0]} (x) M_{ks[1]}^[1] (x) ... with 0 <= m < q-1 and
/// 0 <= ks[i] <= p-1.
struct BasisLabel {
  std::int64_t m = 0;
  std::vector<int> ks;

  bool operator==(const BasisLabel& o) const { return m == o.m && ks == o.ks; }
  bool operator<(const BasisLabel& o) const {
    return m != o.m ? m < o.m : ks < o.ks;
  }
};

/// One tensor factor M_k^[twist]; k may be negative.
struct Factor {
  std::int64_t k = 0;
  std::int64_t twist = 0;
};

/// coeff * e^m * prod factors. Several factors may share a twist.
struct RawTerm {
  Integer coeff = 1;
  std::int64_t m = 0;
  std::vector<Factor> factors;

  /// The term coeff * e^m * prod_i M_{ks[i]}^[i].
  static RawTerm from_ks(Integer coeff, std::int64_t m, const std::vector<std::int64_t>& ks);
};

/// A sum of raw terms.
using Expr = std::vector<RawTerm>;

Expr operator+(Expr a, const Expr& b);
Expr operator-(Expr a, const Expr& b);
/// Product of two expressions, term by term (factor lists are concatenated).
Expr operator*(const Expr& a, const Expr& b);
Expr expr_term(Integer coeff, std::int64_t m, std::vector<Factor> factors);

/// Bijection between basis labels and integers m*q + sum ks[i] p^i.
class LabelCodec {
 public:
  explicit LabelCodec(const PrimePower& pp);

  std::uint32_t encode(std::int64_t m, const std::vector<int>& ks) const;
  BasisLabel decode(std::uint32_t code) const;
  std::int64_t m_of(std::uint32_t code) const { return code / q_; }
  std::uint32_t ks_code(std::uint32_t code) const { return code % q_; }
  int k_at(std::uint32_t code, int i) const {
    return static_cast<int>((code % q_) / pow_p_[i] % p_);
  }
  std::uint32_t with_m(std::uint32_t code, std::int64_t m) const {
    return static_cast<std::uint32_t>(mod_floor(m, q_ - 1) * q_ + code % q_);
  }
  std::uint32_t size() const { return static_cast<std::uint32_t>((q_ - 1) * q_); }

 private:
  std::int64_t p_, g_, q_;
  std::vector<std::int64_t> pow_p_;
};

/// An element of K_0(GL_2(F_q)) in standard form.
class VirtualRep {
 public:
  using Entry = std::pair<std::uint32_t, Integer>;

  VirtualRep() = default;
  explicit VirtualRep(const PrimePower& pp) : pp_(pp) {}

  static VirtualRep label(const PrimePower& pp, const BasisLabel& l, const Integer& coeff = 1);
  /// Builds from unsorted (code, coeff) pairs; duplicates are summed, zeros dropped.
  static VirtualRep from_entries(const PrimePower& pp, std::vector<Entry> entries);

  const PrimePower& pp() const { return pp_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  /// Entries sorted by code.
  const std::vector<Entry>& entries() const { return entries_; }
  /// (label, coeff) pairs sorted by (m, ks).
  std::vector<std::pair<BasisLabel, Integer>> terms() const;
  Integer coeff(const BasisLabel& l) const;

  VirtualRep operator+(const VirtualRep& o) const;
  VirtualRep operator-(const VirtualRep& o) const;
  VirtualRep operator-() const;
  VirtualRep operator*(const Integer& c) const;
  bool operator==(const VirtualRep& o) const {
    return pp_ == o.pp_ && entries_ == o.entries_;
  }
  bool operator!=(const VirtualRep& o) const { return !(*this == o); }

 private:
  PrimePower pp_;
  std::vector<Entry> entries_;
};

/// Virtual dimension.
Integer dim(const VirtualRep& v);
/// Multiplies every label by e^m.
VirtualRep det_shift(const VirtualRep& v, std::int64_t m);
VirtualRep frobenius_twist(const VirtualRep& v, std::int64_t n);
/// Human-readable form such as "M1^[1] + e*M1".
std::string to_text(const VirtualRep& v);
std::string to_text(const BasisLabel& l);

/// Which reduction identity is used for out-of-range degrees.
///   kFrobenius: M_k = M_{k-p} M_1^[1] - e^p M_{k-2p}       (any g)
///   kSerre:     M_k = M_{k-q+1} + e M_{k-q-1} - e M_{k-2q}  (g = 1 only)
/// Negative degrees and products always use the reflection and product
/// identities.
enum class RuleSet { kFrobenius, kSerre };

/// Rewrites expressions into standard form. Thread-safe; results are memoized.
class Normalizer {
 public:
  explicit Normalizer(const PrimePower& pp, RuleSet rules = RuleSet::kFrobenius);

  const PrimePower& pp() const { return pp_; }
  RuleSet rules() const { return rules_; }

  /// Standard form of M_k^[twist].
  VirtualRep sym(std::int64_t k, std::int64_t twist = 0);
  VirtualRep normalize(const RawTerm& t);
  VirtualRep normalize(const Expr& e);
  VirtualRep mul(const VirtualRep& a, const VirtualRep& b);
  /// Standard form of prod_i M_{ks[i]}^[i], all ks[i] >= 0.
  VirtualRep normal_form(const std::vector<std::int64_t>& ks);

  std::size_t memo_entries() const;

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept;
  };
  using Acc = std::vector<VirtualRep::Entry>;

  VirtualRep sym0(std::int64_t k);
  VirtualRep pair_product(std::uint32_t ks_a, std::uint32_t ks_b);
  // Adds coeff * e^det * prod M_{ks[i]}^[i] (standard form) into acc.
  void add_product(Acc& acc, const Integer& coeff, std::int64_t det,
                   const std::vector<std::int64_t>& ks);
  // Expands coeff * e^det * prod factors with the product identity and adds
  // the standard form into acc. Factors must have k >= 0.
  void add_factors(Acc& acc, const Integer& coeff, std::int64_t det,
                   const std::vector<Factor>& factors);
  void add_shifted(Acc& acc, const VirtualRep& v, const Integer& coeff, std::int64_t det) const;
  std::int64_t twist_det(std::int64_t e, std::int64_t twist) const;

  PrimePower pp_;
  RuleSet rules_;
  LabelCodec codec_;

  mutable std::shared_mutex mu_;
  std::unordered_map<std::int64_t, VirtualRep> sym0_memo_;
  std::unordered_map<std::vector<std::int64_t>, VirtualRep, VecHash> nf_memo_;
  std::unordered_map<std::uint64_t, VirtualRep> pair_memo_;
};

/// The identity families that can be checked by verify_identity.
enum class Identity { kDelta, kSigma, kPi, kPhi, kPhiPrime, kInttt };

std::string identity_name(Identity id);
/// Accepts "delta", "sigma", "pi", "phi", "phiprime" (or "phi'"), "inttt".
Identity parse_identity(const std::string& s);

/// Both sides of an identity as raw expressions.
struct IdentityInstance {
  Expr lhs;
  Expr rhs;
};

/// Parameters: kDelta {k}, kSigma {k}, kPi {n, m}, kPhi {k}, kPhiPrime {k, h},
/// kInttt {k, h, i}.
IdentityInstance identity_instance(const PrimePower& pp, Identity id,
                                   const std::vector<std::int64_t>& params);

}  // namespace gl2modrep
