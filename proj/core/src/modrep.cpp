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

#include "gl2modrep/modrep.hpp"

#include <cstdlib>
#include <functional>
#include <unordered_map>

namespace gl2modrep {

namespace {

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

std::vector<std::uint32_t> strides_of(const std::vector<std::uint32_t>& sizes) {
  std::vector<std::uint32_t> s(sizes.size(), 1);
  for (std::size_t f = sizes.size(); f-- > 1;) s[f - 1] = s[f] * sizes[f];
  return s;
}

std::vector<std::uint32_t> sizes_of(const ModuleSpec& spec) {
  std::vector<std::uint32_t> sizes;
  for (const auto& f : spec.factors) sizes.push_back(static_cast<std::uint32_t>(f.degree + 1));
  return sizes;
}

// Linear form u X + w Y raised to the n-th power, indexed by Y-degree.
std::vector<std::vector<int>> linear_powers(const FieldCtx& F, int u, int w, std::int64_t n) {
  std::vector<std::vector<int>> out{{1}};
  for (std::int64_t e = 1; e <= n; ++e) {
    const auto& prev = out.back();
    std::vector<int> next(prev.size() + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] = F.add(next[i], F.mul(prev[i], u));
      next[i + 1] = F.add(next[i + 1], F.mul(prev[i], w));
    }
    out.push_back(std::move(next));
  }
  return out;
}

using Emit = std::function<void(const std::vector<std::int64_t>&, int)>;

// Builds a monomial-to-monomial-combination map. fn receives the source
// Y-degrees and emits destination Y-degrees with coefficients.
LinMap build_map(const ModuleSpec& src, const ModuleSpec& dst, std::int64_t det_twist,
                 const std::function<void(const std::vector<std::int64_t>&, const Emit&)>& fn,
                 const ColumnSubset* only = nullptr) {
  const std::int64_t sdim = src.dim(), ddim = dst.dim();
  LinMap out{src, dst, det_twist, FqMatrix(static_cast<std::uint32_t>(ddim),
                                           static_cast<std::uint32_t>(sdim))};
  if (ddim == 0 || sdim == 0) return out;
  const auto ssizes = sizes_of(src), dsizes = sizes_of(dst);
  const auto sstr = strides_of(ssizes), dstr = strides_of(dsizes);
  const std::int64_t p = src.pp.p;
  std::vector<std::int64_t> js(ssizes.size());
  const auto n_cols = only ? only->size() : static_cast<std::size_t>(sdim);
  for (std::size_t ci = 0; ci < n_cols; ++ci) {
    const std::uint32_t idx = only ? (*only)[ci] : static_cast<std::uint32_t>(ci);
    if (idx >= sdim) throw ArgumentError("column index out of range");
    for (std::size_t f = 0; f < ssizes.size(); ++f) js[f] = (idx / sstr[f]) % ssizes[f];
    SparseVec col;
    fn(js, [&](const std::vector<std::int64_t>& out_js, int coeff) {
      const int c = static_cast<int>(mod_floor(coeff, p));
      if (c == 0) return;
      std::uint32_t r = 0;
      for (std::size_t f = 0; f < dsizes.size(); ++f) {
        if (out_js[f] < 0 || out_js[f] >= static_cast<std::int64_t>(dsizes[f])) return;
        r += static_cast<std::uint32_t>(out_js[f]) * dstr[f];
      }
      col.emplace_back(r, c);
    });
    std::sort(col.begin(), col.end());
    // Coefficients are integers mod p, which are F_q indices 0..p-1; merge
    // duplicates by integer addition mod p.
    SparseVec merged;
    for (const auto& [r, c] : col) {
      if (!merged.empty() && merged.back().first == r) {
        merged.back().second = static_cast<int>((merged.back().second + c) % p);
      } else {
        merged.emplace_back(r, c);
      }
    }
    SparseVec clean;
    for (const auto& e : merged) {
      if (e.second != 0) clean.push_back(e);
    }
    out.mat.col(idx) = std::move(clean);
  }
  return out;
}

void check_alpha_beta(const PrimePower& pp, std::int64_t alpha, std::int64_t beta,
                      bool needs_beta) {
  if (alpha < 0 || alpha >= pp.g) {
    throw ArgumentError("alpha = " + std::to_string(alpha) + " outside [0, g-1]");
  }
  if (needs_beta) {
    if (pp.g < 2) throw ArgumentError("generalized operators need g > 1");
    if (beta < 1 || beta > pp.g - 1) {
      throw ArgumentError("beta = " + std::to_string(beta) + " outside [1, g-1]");
    }
  }
}

}  // namespace

std::int64_t max_explicit_dim() {
  if (const char* env = std::getenv("GL2MODREP_MAX_DIM")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 2048;
}

ModuleSpec ModuleSpec::from_degrees(const PrimePower& pp, const std::vector<std::int64_t>& ks,
                                    std::int64_t det_power) {
  ModuleSpec s;
  s.pp = pp;
  s.det_power = det_power;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    s.factors.push_back({ks[i], static_cast<std::int64_t>(i)});
  }
  return s;
}

std::int64_t ModuleSpec::dim() const {
  std::int64_t d = 1;
  for (const auto& f : factors) {
    if (f.degree < 0) return 0;
    d = checked_mul(d, f.degree + 1);
  }
  if (d > 0xffffffffLL) throw BudgetError("module dimension exceeds 2^32");
  return d;
}

std::size_t ModuleSpec::factor_at_twist(std::int64_t t) const {
  const std::int64_t want = mod_floor(t, pp.g);
  std::size_t found = factors.size();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (mod_floor(factors[i].twist, pp.g) == want) {
      if (found != factors.size()) {
        throw ArgumentError("several factors carry twist " + std::to_string(want));
      }
      found = i;
    }
  }
  if (found == factors.size()) throw ArgumentError("no factor with twist " + std::to_string(want));
  return found;
}

std::string ModuleSpec::describe() const {
  std::string out;
  if (det_power != 0) out = "det^" + std::to_string(det_power);
  for (const auto& f : factors) {
    if (!out.empty()) out += " x ";
    out += "M" + std::to_string(f.degree);
    if (f.twist != 0) out += "^[" + std::to_string(f.twist) + "]";
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

ModuleAction::ModuleAction(const FieldCtx& F, const ModuleSpec& spec, const Mat2& x) : F_(F) {
  if (!F.invertible(x)) throw ArgumentError("action of a singular matrix");
  dim_ = static_cast<std::uint32_t>(spec.dim());
  scalar_ = F.pow(F.det(x), spec.det_power);
  sizes_ = sizes_of(spec);
  strides_ = strides_of(sizes_);
  if (dim_ == 0) return;
  for (const auto& f : spec.factors) {
    const Mat2 y = F.mat_frobenius(x, f.twist);
    const auto p1 = linear_powers(F, y.a, y.c, f.degree);
    const auto p2 = linear_powers(F, y.b, y.d, f.degree);
    std::vector<SparseVec> imgs(f.degree + 1);
    for (std::int64_t j = 0; j <= f.degree; ++j) {
      const auto& u = p1[f.degree - j];
      const auto& w = p2[j];
      std::vector<int> prod(f.degree + 1, 0);
      for (std::size_t i1 = 0; i1 < u.size(); ++i1) {
        if (u[i1] == 0) continue;
        for (std::size_t i2 = 0; i2 < w.size(); ++i2) {
          if (w[i2] == 0) continue;
          prod[i1 + i2] = F.add(prod[i1 + i2], F.mul(u[i1], w[i2]));
        }
      }
      for (std::size_t i = 0; i < prod.size(); ++i) {
        if (prod[i] != 0) imgs[j].emplace_back(static_cast<std::uint32_t>(i), prod[i]);
      }
    }
    images_.push_back(std::move(imgs));
  }
}

SparseVec ModuleAction::apply_basis(std::uint32_t idx) const {
  SparseVec out{{0u, scalar_}};
  for (std::size_t f = 0; f < sizes_.size(); ++f) {
    const auto& img = images_[f][(idx / strides_[f]) % sizes_[f]];
    SparseVec next;
    next.reserve(out.size() * img.size());
    for (const auto& [r, c] : out) {
      for (const auto& [i, v] : img) next.emplace_back(r + i * strides_[f], F_.mul(c, v));
    }
    out = std::move(next);
  }
  return out;
}

SparseVec ModuleAction::apply(const SparseVec& v) const {
  SparseVec acc;
  for (const auto& [idx, c] : v) {
    for (const auto& [r, w] : apply_basis(idx)) acc.emplace_back(r, F_.mul(c, w));
  }
  return canonicalize(F_, std::move(acc));
}

FqMatrix ModuleAction::matrix() const {
  FqMatrix m(dim_, dim_);
  for (std::uint32_t c = 0; c < dim_; ++c) m.col(c) = apply_basis(c);
  return m;
}

FqMatrix action_matrix(const FieldCtx& F, const ModuleSpec& spec, const Mat2& x) {
  return ModuleAction(F, spec, x).matrix();
}

// ---------------------------------------------------------------------------

LinMap theta_op(const ModuleSpec& src, std::int64_t alpha, std::int64_t beta,
                const ColumnSubset* only) {
  const PrimePower& pp = src.pp;
  check_alpha_beta(pp, alpha, beta, true);
  const std::size_t fa = src.factor_at_twist(alpha), fb = src.factor_at_twist(alpha + beta);
  const std::int64_t P = ipow(pp.p, pp.g - beta);
  ModuleSpec dst = src;
  dst.factors[fa].degree += 1;
  dst.factors[fb].degree += P;
  return build_map(src, dst, ipow(pp.p, alpha), [&](const auto& js, const Emit& emit) {
    std::vector<std::int64_t> o = js;
    o[fb] = js[fb] + P;
    emit(o, 1);
    o = js;
    o[fa] = js[fa] + 1;
    emit(o, -1);
  }, only);
}

LinMap dickson_op(const ModuleSpec& src, std::int64_t alpha, const ColumnSubset* only) {
  const PrimePower& pp = src.pp;
  check_alpha_beta(pp, alpha, 0, false);
  const std::size_t fa = src.factor_at_twist(alpha);
  ModuleSpec dst = src;
  dst.factors[fa].degree += pp.q + 1;
  return build_map(src, dst, ipow(pp.p, alpha), [&](const auto& js, const Emit& emit) {
    std::vector<std::int64_t> o = js;
    o[fa] = js[fa] + pp.q;
    emit(o, 1);
    o[fa] = js[fa] + 1;
    emit(o, -1);
  }, only);
}

LinMap d_op(const ModuleSpec& src, std::int64_t alpha, std::int64_t beta,
            const ColumnSubset* only) {
  const PrimePower& pp = src.pp;
  check_alpha_beta(pp, alpha, beta, true);
  const std::size_t fa = src.factor_at_twist(alpha), fb = src.factor_at_twist(alpha + beta);
  const std::int64_t P = ipow(pp.p, pp.g - beta);
  const std::int64_t k = src.factors[fa].degree;
  ModuleSpec dst = src;
  dst.factors[fa].degree -= 1;
  dst.factors[fb].degree += P;
  return build_map(src, dst, 0, [&](const auto& js, const Emit& emit) {
    std::vector<std::int64_t> o = js;
    emit(o, static_cast<int>(mod_floor(k - js[fa], pp.p)));
    o[fa] = js[fa] - 1;
    o[fb] = js[fb] + P;
    emit(o, static_cast<int>(mod_floor(js[fa], pp.p)));
  }, only);
}

LinMap serre_d_op(const ModuleSpec& src, std::int64_t alpha, const ColumnSubset* only) {
  const PrimePower& pp = src.pp;
  check_alpha_beta(pp, alpha, 0, false);
  const std::size_t fa = src.factor_at_twist(alpha);
  const std::int64_t k = src.factors[fa].degree;
  ModuleSpec dst = src;
  dst.factors[fa].degree += pp.q - 1;
  return build_map(src, dst, 0, [&](const auto& js, const Emit& emit) {
    std::vector<std::int64_t> o = js;
    emit(o, static_cast<int>(mod_floor(k - js[fa], pp.p)));
    o[fa] = js[fa] - 1 + pp.q;
    emit(o, static_cast<int>(mod_floor(js[fa], pp.p)));
  }, only);
}

LinMap make_operator(OperatorKind kind, const ModuleSpec& src, std::int64_t alpha,
                     std::int64_t beta, const ColumnSubset* only) {
  switch (kind) {
    case OperatorKind::kTheta: return theta_op(src, alpha, beta, only);
    case OperatorKind::kDickson: return dickson_op(src, alpha, only);
    case OperatorKind::kD: return d_op(src, alpha, beta, only);
    case OperatorKind::kSerreD: return serre_d_op(src, alpha, only);
  }
  throw ArgumentError("unknown operator kind");
}

std::string operator_name(OperatorKind kind, std::int64_t alpha, std::int64_t beta) {
  const bool theta = kind == OperatorKind::kTheta || kind == OperatorKind::kDickson;
  std::string out = theta ? "Theta" : "D";
  if (kind == OperatorKind::kTheta || kind == OperatorKind::kD) out += "_" + std::to_string(beta);
  if (alpha != 0) out += "^[" + std::to_string(alpha) + "]";
  return out;
}

LinMap compose(const FieldCtx& F, const LinMap& b, const LinMap& a) {
  if (a.dst.factors != b.src.factors) {
    throw ArgumentError("cannot compose: " + b.src.describe() + " != " + a.dst.describe());
  }
  LinMap out;
  out.src = a.src;
  out.dst = b.dst;
  out.det_twist = a.det_twist + b.det_twist;
  out.mat = multiply(F, b.mat, a.mat);
  return out;
}

LinMap permute_factors(const ModuleSpec& src, const std::vector<std::size_t>& perm) {
  if (perm.size() != src.factors.size()) throw ArgumentError("permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (auto i : perm) {
    if (i >= perm.size() || seen[i]) throw ArgumentError("not a permutation");
    seen[i] = true;
  }
  ModuleSpec dst = src;
  for (std::size_t i = 0; i < perm.size(); ++i) dst.factors[i] = src.factors[perm[i]];
  return build_map(src, dst, 0, [&](const auto& js, const Emit& emit) {
    std::vector<std::int64_t> o(js.size());
    for (std::size_t i = 0; i < perm.size(); ++i) o[i] = js[perm[i]];
    emit(o, 1);
  });
}

// ---------------------------------------------------------------------------

std::vector<Mat2> standard_generators(const FieldCtx& F) {
  return {{F.fq_generator(), 0, 0, 1}, {1, 1, 0, 1}, {0, 1, 1, 0}};
}

bool generators_generate(const FieldCtx& F) {
  const std::int64_t q = F.q();
  const auto gens = standard_generators(F);
  if (q <= 27) {
    auto enc = [q](const Mat2& m) {
      return static_cast<std::size_t>(m.a + q * (m.b + q * (m.c + q * m.d)));
    };
    std::vector<bool> seen(static_cast<std::size_t>(q * q * q * q), false);
    std::vector<Mat2> frontier{F.identity()};
    seen[enc(F.identity())] = true;
    std::int64_t count = 1;
    while (!frontier.empty()) {
      std::vector<Mat2> next;
      for (const auto& m : frontier) {
        for (const auto& g : gens) {
          const Mat2 h = F.mat_mul(m, g);
          if (!seen[enc(h)]) {
            seen[enc(h)] = true;
            ++count;
            next.push_back(h);
          }
        }
      }
      frontier = std::move(next);
    }
    return count == (q * q - 1) * (q * q - q);
  }
  const int gen = gens[0].a;
  const std::int64_t n = q - 1;
  if (F.pow(gen, n) != 1) return false;
  std::int64_t m = n;
  for (std::int64_t d = 2; d <= m; ++d) {
    if (m % d != 0) continue;
    while (m % d == 0) m /= d;
    if (F.pow(gen, n / d) == 1) return false;
  }
  return true;
}

bool check_equivariance(const FieldCtx& F, const LinMap& map, const std::vector<Mat2>& gens) {
  if (map.mat.rows() != map.dst.dim() || map.mat.cols() != map.src.dim()) {
    throw ArgumentError("matrix shape does not match module specs");
  }
  for (const auto& x : gens) {
    const ModuleAction src_act(F, map.src, x), dst_act(F, map.dst, x);
    const int c = F.pow(F.det(x), map.det_twist);
    for (std::uint32_t s = 0; s < map.mat.cols(); ++s) {
      const SparseVec lhs = dst_act.apply(map.mat.col(s));
      SparseVec rhs;
      for (const auto& [r, v] : src_act.apply_basis(s)) {
        const int w = F.mul(c, v);
        for (const auto& [i, a] : map.mat.col(r)) rhs.emplace_back(i, F.mul(w, a));
      }
      if (lhs != canonicalize(F, std::move(rhs))) return false;
    }
  }
  return true;
}

bool check_equivariance(const FieldCtx& F, const LinMap& map) {
  return check_equivariance(F, map, standard_generators(F));
}

std::int64_t rank(const FieldCtx& F, const LinMap& map) { return rank(F, map.mat); }

std::int64_t kernel_dim(const FieldCtx& F, const LinMap& map) {
  return static_cast<std::int64_t>(map.mat.cols()) - rank(F, map);
}

std::int64_t coker_dim(const FieldCtx& F, const LinMap& map) {
  return static_cast<std::int64_t>(map.mat.rows()) - rank(F, map);
}

// ---------------------------------------------------------------------------

std::int64_t hom_space_dim(const FieldCtx& F, const ModuleSpec& src, const ModuleSpec& dst,
                           std::int64_t det_power) {
  const std::int64_t sdim = src.dim(), ddim = dst.dim();
  const std::int64_t budget = max_explicit_dim();
  if (sdim > budget || ddim > budget || sdim * ddim > 4'000'000) {
    throw BudgetError("hom_space_dim: " + std::to_string(ddim) + " x " + std::to_string(sdim) +
                      " unknowns exceed the explicit-matrix budget");
  }
  if (sdim == 0 || ddim == 0) return 0;
  const std::int64_t n = F.q() - 1;

  // Torus weights of diag(t, 1) and diag(1, t) on each monomial.
  auto weights = [&](const ModuleSpec& spec) {
    const auto sizes = sizes_of(spec);
    const auto str = strides_of(sizes);
    std::vector<std::pair<std::int64_t, std::int64_t>> w(spec.dim());
    for (std::uint32_t idx = 0; idx < w.size(); ++idx) {
      std::int64_t w1 = spec.det_power, w2 = spec.det_power;
      for (std::size_t f = 0; f < sizes.size(); ++f) {
        const std::int64_t j = (idx / str[f]) % sizes[f];
        const std::int64_t s = pow_mod(F.p(), mod_floor(spec.factors[f].twist, spec.pp.g), n);
        w1 += s * (spec.factors[f].degree - j);
        w2 += s * j;
      }
      w[idx] = {mod_floor(w1, n), mod_floor(w2, n)};
    }
    return w;
  };
  const auto ws = weights(src), wd = weights(dst);
  std::vector<std::int32_t> var(static_cast<std::size_t>(sdim * ddim), -1);
  std::int32_t nvars = 0;
  for (std::int64_t r = 0; r < ddim; ++r) {
    for (std::int64_t s = 0; s < sdim; ++s) {
      if (wd[r].first == mod_floor(ws[s].first + det_power, n) &&
          wd[r].second == mod_floor(ws[s].second + det_power, n)) {
        var[r * sdim + s] = nvars++;
      }
    }
  }
  if (nvars == 0) return 0;

  Echelon ech(F, static_cast<std::uint32_t>(nvars));
  const auto gens = standard_generators(F);
  for (std::size_t gi = 1; gi < gens.size(); ++gi) {
    const Mat2& x = gens[gi];
    const FqMatrix rd = action_matrix(F, dst, x);
    const FqMatrix rs_t = action_matrix(F, src, x).transpose();
    const int c = F.pow(F.det(x), det_power);
    std::unordered_map<std::int64_t, SparseVec> eqs;
    for (std::int64_t r1 = 0; r1 < ddim; ++r1) {
      for (std::int64_t s = 0; s < sdim; ++s) {
        const std::int32_t v = var[r1 * sdim + s];
        if (v < 0) continue;
        // (rho_dst A)[r][s] picks up rd[r][r1] * A[r1][s].
        for (const auto& [r, a] : rd.col(static_cast<std::uint32_t>(r1))) {
          eqs[static_cast<std::int64_t>(r) * sdim + s].emplace_back(v, a);
        }
        // (A rho_src)[r1][s2] picks up A[r1][s] * rs[s][s2].
        for (const auto& [s2, a] : rs_t.col(static_cast<std::uint32_t>(s))) {
          eqs[r1 * sdim + s2].emplace_back(v, F.neg(F.mul(c, a)));
        }
      }
    }
    for (auto& [key, row] : eqs) {
      SparseVec clean;
      for (auto [v, a] : row) clean.emplace_back(static_cast<std::uint32_t>(v), a);
      ech.add(canonicalize(F, std::move(clean)));
    }
  }
  return nvars - static_cast<std::int64_t>(ech.rank());
}

// ---------------------------------------------------------------------------

CycloInt explicit_brauer_value(const BrauerOracle& oracle,
                               const std::vector<std::vector<int>>& a) {
  const FieldCtx& F = oracle.ctx();
  std::vector<std::int64_t> counts(F.M(), 0);
  if (!a.empty()) {
    for (const auto& [lambda, mult] : roots_in_fq2(F, charpoly(F, a))) {
      if (lambda == 0) throw ArgumentError("explicit_brauer_value of a singular matrix");
      counts[F.dlog(lambda)] += mult;
    }
  }
  return CycloInt::from_exponents(oracle.ring(), counts);
}

CharVector cokernel_character(const BrauerOracle& oracle, const LinMap& map) {
  const FieldCtx& F = oracle.ctx();
  const std::int64_t ddim = map.dst.dim();
  if (ddim > max_explicit_dim()) {
    throw BudgetError("cokernel_character: dimension " + std::to_string(ddim) +
                      " exceeds the explicit-matrix budget");
  }
  Echelon ech(F, static_cast<std::uint32_t>(ddim));
  for (std::uint32_t c = 0; c < map.mat.cols(); ++c) ech.add(map.mat.col(c));
  std::vector<std::int64_t> qidx(ddim, -1);
  std::vector<std::uint32_t> free_rows;
  for (std::uint32_t r = 0; r < ddim; ++r) {
    if (!ech.is_pivot(r)) {
      qidx[r] = static_cast<std::int64_t>(free_rows.size());
      free_rows.push_back(r);
    }
  }
  const std::size_t n = free_rows.size();
  CharVector out;
  for (const auto& cls : oracle.classes()) {
    const ModuleAction act(F, map.dst, class_representative(F, cls));
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    for (std::size_t col = 0; col < n; ++col) {
      for (const auto& [r, v] : ech.reduce(act.apply_basis(free_rows[col]))) {
        b[qidx[r]][col] = v;
      }
    }
    out.values.push_back(explicit_brauer_value(oracle, b));
  }
  return out;
}

CharVector module_character(const BrauerOracle& oracle, const ModuleSpec& spec) {
  const FieldCtx& F = oracle.ctx();
  if (spec.dim() > max_explicit_dim()) {
    throw BudgetError("module_character: dimension exceeds the explicit-matrix budget");
  }
  CharVector out;
  for (const auto& cls : oracle.classes()) {
    out.values.push_back(
        explicit_brauer_value(oracle, action_matrix(F, spec, class_representative(F, cls)).dense()));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<int> p1_permutation(const FieldCtx& F, const Mat2& x) {
  const int q = F.q();
  std::vector<int> out(q + 1);
  for (int i = 0; i <= q; ++i) {
    const int v0 = i < q ? i : 1;
    const int v1 = i < q ? 1 : 0;
    const int w0 = F.add(F.mul(x.a, v0), F.mul(x.b, v1));
    const int w1 = F.add(F.mul(x.c, v0), F.mul(x.d, v1));
    out[i] = w1 != 0 ? F.mul(w0, F.inv(w1)) : q;
  }
  return out;
}

FqMatrix perm_matrix_p1(const FieldCtx& F, const Mat2& x) {
  const auto perm = p1_permutation(F, x);
  FqMatrix m(static_cast<std::uint32_t>(perm.size()), static_cast<std::uint32_t>(perm.size()));
  for (std::size_t i = 0; i < perm.size(); ++i) {
    m.col(static_cast<std::uint32_t>(i)).emplace_back(static_cast<std::uint32_t>(perm[i]), 1);
  }
  return m;
}

CharVector perm_module_character(const BrauerOracle& oracle) {
  const FieldCtx& F = oracle.ctx();
  CharVector out;
  for (const auto& cls : oracle.classes()) {
    const auto perm = p1_permutation(F, class_representative(F, cls));
    std::int64_t fixed = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) fixed += perm[i] == static_cast<int>(i);
    out.values.push_back(CycloInt::from_int(oracle.ring(), fixed));
  }
  return out;
}

CharVector perm_module_character_explicit(const BrauerOracle& oracle) {
  const FieldCtx& F = oracle.ctx();
  CharVector out;
  for (const auto& cls : oracle.classes()) {
    out.values.push_back(
        explicit_brauer_value(oracle, perm_matrix_p1(F, class_representative(F, cls)).dense()));
  }
  return out;
}

CycloInt induced_char(const BrauerOracle& oracle, std::int64_t k, const ConjClass& cls) {
  const FieldCtx& F = oracle.ctx();
  const Mat2 x = class_representative(F, cls);
  const int q = F.q();
  std::vector<std::int64_t> counts(F.M(), 0);
  for (int i = 0; i <= q; ++i) {
    const int v0 = i < q ? i : 1;
    const int v1 = i < q ? 1 : 0;
    const int w0 = F.add(F.mul(x.a, v0), F.mul(x.b, v1));
    const int w1 = F.add(F.mul(x.c, v0), F.mul(x.d, v1));
    // x fixes the line iff (w0, w1) is proportional to (v0, v1).
    if (F.sub(F.mul(w0, v1), F.mul(w1, v0)) != 0) continue;
    const int lambda = v1 != 0 ? F.mul(w1, F.inv(v1)) : F.mul(w0, F.inv(v0));
    counts[mod_floor(static_cast<std::int64_t>((__int128)k * F.dlog(lambda) % F.M()), F.M())] += 1;
  }
  return CycloInt::from_exponents(oracle.ring(), counts);
}

}  // namespace gl2modrep
