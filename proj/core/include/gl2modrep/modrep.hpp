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

#include "gl2modrep/brauer.hpp"
#include "gl2modrep/field.hpp"
#include "gl2modrep/linalg.hpp"

namespace gl2modrep {

/// Cap on explicit matrix dimensions, read from GL2MODREP_MAX_DIM (default 2048).
std::int64_t max_explicit_dim();

/// One tensor factor M_degree^[twist]. Degree -1 denotes the zero module.
struct ModFactor {
  std::int64_t degree = 0;
  std::int64_t twist = 0;

  bool operator==(const ModFactor& o) const { return degree == o.degree && twist == o.twist; }
};

/// det^det_power (x) factors[0] (x) factors[1] (x) ...
///
/// Basis: tensor products of monomials X^{k-j} Y^j, j ascending within a
/// factor, factor 0 most significant.
struct ModuleSpec {
  PrimePower pp;
  std::int64_t det_power = 0;
  std::vector<ModFactor> factors;

  /// Factor i has degree ks[i] and twist i.
  static ModuleSpec from_degrees(const PrimePower& pp, const std::vector<std::int64_t>& ks,
                                 std::int64_t det_power = 0);

  std::int64_t dim() const;
  /// Index of the unique factor with twist == t (mod g); throws otherwise.
  std::size_t factor_at_twist(std::int64_t t) const;
  std::string describe() const;

  bool operator==(const ModuleSpec& o) const {
    return pp == o.pp && det_power == o.det_power && factors == o.factors;
  }
  bool operator!=(const ModuleSpec& o) const { return !(*this == o); }
};

/// An F_q-linear map A: src -> dst with rho_dst(x) A = det(x)^det_twist A rho_src(x).
struct LinMap {
  ModuleSpec src;
  ModuleSpec dst;
  std::int64_t det_twist = 0;
  FqMatrix mat;
};

/// rho(x) for one module, applied lazily through per-factor images.
class ModuleAction {
 public:
  ModuleAction(const FieldCtx& F, const ModuleSpec& spec, const Mat2& x);

  std::uint32_t dim() const { return dim_; }
  /// rho(x) e_idx.
  SparseVec apply_basis(std::uint32_t idx) const;
  SparseVec apply(const SparseVec& v) const;
  FqMatrix matrix() const;

 private:
  const FieldCtx& F_;
  std::uint32_t dim_ = 0;
  int scalar_ = 1;
  std::vector<std::uint32_t> sizes_;
  std::vector<std::uint32_t> strides_;
  // images_[f][j]: image of the j-th monomial of factor f.
  std::vector<std::vector<SparseVec>> images_;
};

FqMatrix action_matrix(const FieldCtx& F, const ModuleSpec& spec, const Mat2& x);

/// Operator constructors fill only the listed source columns when given one.
using ColumnSubset = std::vector<std::uint32_t>;

/// Theta_beta^[alpha]: multiplication by X (x) Y^P - Y (x) X^P on the factors
/// of twist alpha and alpha+beta, P = p^(g-beta). det_twist p^alpha.
LinMap theta_op(const ModuleSpec& src, std::int64_t alpha, std::int64_t beta,
                const ColumnSubset* only = nullptr);
/// Theta^[alpha]: multiplication by X Y^q - Y X^q on the twist-alpha factor.
LinMap dickson_op(const ModuleSpec& src, std::int64_t alpha, const ColumnSubset* only = nullptr);
/// D_beta^[alpha] = d/dX (x) X^P + d/dY (x) Y^P. det_twist 0.
LinMap d_op(const ModuleSpec& src, std::int64_t alpha, std::int64_t beta,
            const ColumnSubset* only = nullptr);
/// D^[alpha] = X^q d/dX + Y^q d/dY on the twist-alpha factor. det_twist 0.
LinMap serre_d_op(const ModuleSpec& src, std::int64_t alpha, const ColumnSubset* only = nullptr);

enum class OperatorKind { kTheta, kDickson, kD, kSerreD };
/// beta is ignored for kDickson and kSerreD.
LinMap make_operator(OperatorKind kind, const ModuleSpec& src, std::int64_t alpha,
                     std::int64_t beta, const ColumnSubset* only = nullptr);
/// Table-style name such as "Theta_1^[2]", "Theta", "D_2", "D^[1]".
std::string operator_name(OperatorKind kind, std::int64_t alpha, std::int64_t beta);

/// B o A; requires A.dst and B.src to have the same factors.
LinMap compose(const FieldCtx& F, const LinMap& b, const LinMap& a);
/// The identification of src with the module whose factor i is
/// src.factors[perm[i]].
LinMap permute_factors(const ModuleSpec& src, const std::vector<std::size_t>& perm);

/// diag(gen, 1), the unipotent (1 1; 0 1) and the Weyl element (0 1; 1 0).
std::vector<Mat2> standard_generators(const FieldCtx& F);
/// Confirms that the standard generators generate GL_2(F_q): by closure
/// for q <= 27, otherwise by checking that gen has order q-1.
bool generators_generate(const FieldCtx& F);

bool check_equivariance(const FieldCtx& F, const LinMap& map, const std::vector<Mat2>& gens);
bool check_equivariance(const FieldCtx& F, const LinMap& map);

std::int64_t rank(const FieldCtx& F, const LinMap& map);
std::int64_t kernel_dim(const FieldCtx& F, const LinMap& map);
std::int64_t coker_dim(const FieldCtx& F, const LinMap& map);

/// Dimension of {A : rho_dst(x) A = det(x)^det_power A rho_src(x) for all x}.
std::int64_t hom_space_dim(const FieldCtx& F, const ModuleSpec& src, const ModuleSpec& dst,
                           std::int64_t det_power);

/// Brauer character value of a matrix representing a p-regular element:
/// roots of its characteristic polynomial in F_{q^2}, lifted through chi.
CycloInt explicit_brauer_value(const BrauerOracle& oracle, const std::vector<std::vector<int>>& a);
/// Brauer character of dst / im(map), computed from explicit quotient
/// matrices on every regular class.
CharVector cokernel_character(const BrauerOracle& oracle, const LinMap& map);
/// Brauer character of an explicit module from its action matrices.
CharVector module_character(const BrauerOracle& oracle, const ModuleSpec& spec);

/// Index of g.P for the points of P^1(F_q): P_x = [x : 1] has index x,
/// [1 : 0] has index q.
std::vector<int> p1_permutation(const FieldCtx& F, const Mat2& x);
/// Permutation matrix of x on F_q[P^1(F_q)].
FqMatrix perm_matrix_p1(const FieldCtx& F, const Mat2& x);
/// Brauer character of F_q[P^1(F_q)] by counting fixed points.
CharVector perm_module_character(const BrauerOracle& oracle);
/// Same character from the characteristic polynomials of the permutation matrices.
CharVector perm_module_character_explicit(const BrauerOracle& oracle);

/// Brauer character of Ind_B^G(eta^k), eta((a *; 0 d)) = a, summed over the
/// lines fixed by the class representative.
CycloInt induced_char(const BrauerOracle& oracle, std::int64_t k, const ConjClass& cls);

}  // namespace gl2modrep
