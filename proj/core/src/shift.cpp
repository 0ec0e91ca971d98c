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


#include "gl2modrep/shift.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

namespace gl2modrep {

namespace {

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

std::string kname(std::int64_t i, std::size_t j) {
  return "k_" + std::to_string(i) + "^(" + std::to_string(j + 1) + ")";
}

std::shared_ptr<const FieldCtx> field_for(std::int64_t p, std::int64_t g) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const FieldCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, g}];
  if (!slot) slot = std::make_shared<const FieldCtx>(p, g);
  return slot;
}

// Equivariance of an operator restricted to the factors it touches; the
// full operator is this core tensored with the identity on the rest.
bool core_equivariant(const FieldCtx& F, const ModuleSpec& spec, const OpStep& step) {
  static std::mutex mu;
  static std::map<std::string, bool> memo;
  ModuleSpec core;
  core.pp = spec.pp;
  core.factors.push_back(spec.factors[spec.factor_at_twist(step.alpha)]);
  const bool pair = step.kind == OperatorKind::kTheta || step.kind == OperatorKind::kD;
  if (pair) core.factors.push_back(spec.factors[spec.factor_at_twist(step.alpha + step.beta)]);
  std::ostringstream key;
  key << spec.pp.p << '/' << spec.pp.g << '/' << static_cast<int>(step.kind) << '/' << step.alpha
      << '/' << step.beta;
  for (const auto& f : core.factors) key << '/' << f.degree << ':' << f.twist;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(key.str()); it != memo.end()) return it->second;
  }
  const LinMap op = make_operator(step.kind, core, step.alpha, step.beta);
  const std::int64_t budget = max_explicit_dim();
  if (op.src.dim() > budget || op.dst.dim() > budget) {
    throw BudgetError("operator " + step.name() + " on " + core.describe() +
                      " exceeds the explicit-matrix budget");
  }
  const bool ok = check_equivariance(F, op);
  std::lock_guard<std::mutex> lock(mu);
  memo[key.str()] = ok;
  return ok;
}

}  // namespace

PrimeSplit PrimeSplit::make(std::int64_t p, std::vector<std::int64_t> f) {
  if (p < 3 || !is_prime(p)) throw ArgumentError("p = " + std::to_string(p) + " is not an odd prime");
  if (f.empty()) throw ArgumentError("at least one residue degree is required");
  for (auto x : f) {
    if (x < 1) throw ArgumentError("residue degrees must be positive");
  }
  return PrimeSplit{p, std::move(f)};
}

std::int64_t PrimeSplit::g() const {
  std::int64_t s = 0;
  for (auto x : f) s += x;
  return s;
}

std::int64_t PrimeSplit::min_f() const { return *std::min_element(f.begin(), f.end()); }

std::int64_t validate_holomorphic(const std::vector<std::vector<std::int64_t>>& k,
                                  const std::vector<std::vector<std::int64_t>>& w_vec) {
  if (k.empty() || k.size() != w_vec.size()) throw ArgumentError("k and w_vec shapes differ");
  std::optional<std::int64_t> w;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j].size() != w_vec[j].size() || k[j].empty()) {
      throw ArgumentError("k and w_vec shapes differ");
    }
    for (std::size_t i = 0; i < k[j].size(); ++i) {
      if (k[j][i] < 2) throw ArgumentError(kname(i, j) + " = " + std::to_string(k[j][i]) + " < 2");
      const std::int64_t c = k[j][i] + 2 * w_vec[j][i] - 1;
      if (w && *w != c) {
        throw ArgumentError("k + 2w - 1 is not constant: " + std::to_string(*w) + " != " +
                            std::to_string(c) + " at " + kname(i, j));
      }
      w = c;
    }
  }
  return *w;
}

std::vector<std::vector<std::int64_t>> weight_exponents(const WeightParams& wp) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& block : wp.k) {
    std::vector<std::int64_t> row;
    for (auto k : block) {
      if (mod_floor(wp.w + 1 - k, 2) != 0) throw ArgumentError("w + 1 - k is odd");
      row.push_back((wp.w + 1 - k) / 2);
    }
    out.push_back(std::move(row));
  }
  return out;
}

ShiftChoice ShiftChoice::from_selectors(std::int64_t p, std::int64_t beta,
                                        const std::vector<std::vector<bool>>& theta) {
  ShiftChoice c;
  c.beta = beta;
  const std::int64_t pb = ipow(p, beta);
  for (const auto& block : theta) {
    std::vector<std::int64_t> row;
    for (bool t : block) row.push_back(t ? pb + 1 : pb - 1);
    c.a.push_back(std::move(row));
  }
  return c;
}

// ---------------------------------------------------------------------------

ShiftPlan plan_general(const PrimeSplit& split, const WeightParams& wp, const ShiftChoice& choice) {
  const std::size_t r = split.f.size();
  if (wp.k.size() != r || choice.a.size() != r) {
    throw ArgumentError("weight and choice must have one block per prime");
  }
  for (std::size_t j = 0; j < r; ++j) {
    if (static_cast<std::int64_t>(wp.k[j].size()) != split.f[j] ||
        static_cast<std::int64_t>(choice.a[j].size()) != split.f[j]) {
      throw ArgumentError("block " + std::to_string(j + 1) + " must have f_j = " +
                          std::to_string(split.f[j]) + " entries");
    }
  }
  ShiftPlan plan;
  plan.split = split;
  plan.input = wp;
  plan.choice = choice;
  const std::int64_t p = split.p, beta = choice.beta;
  auto reject = [&](std::string why) {
    plan.accepted = false;
    plan.rejection = std::move(why);
    return plan;
  };

  // parity
  if (mod_floor(wp.w, 2) != 1) return reject("parity: w = " + std::to_string(wp.w) + " is even");
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < wp.k[j].size(); ++i) {
      if (mod_floor(wp.w + 1 - wp.k[j][i], 2) != 0) {
        return reject("parity: w + 1 - " + kname(i, j) + " is odd");
      }
    }
  }
  // range
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < wp.k[j].size(); ++i) {
      if (wp.k[j][i] < 2) return reject("range: " + kname(i, j) + " < 2");
    }
  }
  if (beta < 1 || beta > split.min_f()) {
    return reject("range: beta = " + std::to_string(beta) + " outside [1, " +
                  std::to_string(split.min_f()) + "]");
  }
  const std::int64_t pb = ipow(p, beta);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < choice.a[j].size(); ++i) {
      const auto a = choice.a[j][i];
      if (a != pb + 1 && a != pb - 1) {
        return reject("range: a_" + std::to_string(i) + "^(" + std::to_string(j + 1) + ") = " +
                      std::to_string(a) + " is not p^beta +- 1");
      }
    }
  }

  // Recipe: D operators first, then theta operators, each by ascending i.
  for (std::size_t j = 0; j < r; ++j) {
    const std::int64_t f = split.f[j];
    std::vector<OpStep> steps;
    for (int pass = 0; pass < 2; ++pass) {
      const bool theta = pass == 1;
      for (std::int64_t i = 0; i < f; ++i) {
        if ((choice.a[j][i] == pb + 1) != theta) continue;
        if (beta < f) {
          steps.push_back({theta ? OperatorKind::kTheta : OperatorKind::kD, i, f - beta});
        } else {
          steps.push_back({theta ? OperatorKind::kDickson : OperatorKind::kSerreD, i, 0});
        }
      }
    }
    plan.recipe.push_back(std::move(steps));
  }

  auto generic = [&](std::int64_t k) { return 2 < k && k <= p + 1; };
  // (*)
  std::optional<std::string> star_fail;
  for (std::size_t j = 0; j < r && !star_fail; ++j) {
    const std::int64_t f = split.f[j];
    const auto& k = wp.k[j];
    for (std::int64_t i = 0; i < f && !star_fail; ++i) {
      if (choice.a[j][i] != pb - 1) continue;
      if (!generic(k[i])) {
        star_fail = "(*): " + kname(i, j) + " = " + std::to_string(k[i]) + " not in (2, p+1]";
        break;
      }
      if (beta == f) continue;
      const std::int64_t t = (i + f - beta) % f;
      if (k[t] < 2 || k[t] > p + 1) {
        star_fail = "(*): " + kname(t, j) + " = " + std::to_string(k[t]) + " not in [2, p+1]";
        break;
      }
      for (std::int64_t i2 = 0; i2 < f; ++i2) {
        if (i2 == i || choice.a[j][i2] != pb - 1) continue;
        if (mod_floor(i - (i2 - beta), f) == 0) {
          star_fail = "(*): i = " + std::to_string(i) + " is congruent to i' - beta for i' = " +
                      std::to_string(i2) + " (mod f_" + std::to_string(j + 1) + ")";
          break;
        }
      }
    }
  }
  // (**)
  std::optional<std::string> star2_fail;
  for (std::size_t j = 0; j < r && !star2_fail; ++j) {
    for (std::size_t i = 0; i < wp.k[j].size(); ++i) {
      if (!generic(wp.k[j][i])) {
        star2_fail = "(**): " + kname(i, j) + " = " + std::to_string(wp.k[j][i]) +
                     " not in (2, p+1]";
        break;
      }
    }
  }
  if (!star_fail) {
    plan.condition = "(*)";
  } else if (!star2_fail) {
    plan.condition = "(**)";
  } else {
    return reject(*star_fail + "; " + *star2_fail);
  }

  plan.target.w = wp.w + pb - 1;
  plan.target.k = wp.k;
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < wp.k[j].size(); ++i) plan.target.k[j][i] += choice.a[j][i];
  }
  weight_exponents(plan.target);  // re-validates parity of the target
  plan.accepted = true;
  return plan;
}

// ---------------------------------------------------------------------------

std::int64_t c_value(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t s,
                     std::int64_t v, std::int64_t z, std::int64_t p) {
  if (r < 0 || s < 0 || v < 0 || z < 0) throw ArgumentError("r, s, v, z must be non-negative");
  const std::int64_t x1 = a, x2 = b + p * r, x3 = a - r + p * s, x4 = b + p * r - s;
  if (a - r < 0 || x2 - s < 0 || x3 - v < 0 || x4 - z < 0) {
    throw ArgumentError("negative exponent: the bounds r+v+2 <= k0, s+z+2 <= k1 are violated");
  }
  std::int64_t c = 1;
  auto falling = [&](std::int64_t top, std::int64_t len) {
    for (std::int64_t j = 0; j < len; ++j) c = c * mod_floor(top - j, p) % p;
  };
  falling(x1, r);
  falling(x2, s);
  falling(x3, v);
  falling(x4, z);
  return c;
}

bool check_c_nonzero(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t s,
                     std::int64_t v, std::int64_t z, std::int64_t p) {
  return c_value(a, b, r, s, v, z, p) != 0;
}

F2Plan plan_f2(const F2Params& in) {
  F2Plan out;
  out.params = in;
  const std::int64_t p = in.p;
  const std::int64_t a0 = in.alpha0, a1 = in.alpha1.value_or(in.alpha0);
  out.verified = a0 == a1;
  auto reject = [&](std::string why) {
    out.accepted = false;
    out.rejection = std::move(why);
    return out;
  };
  if (p < 3 || !is_prime(p)) return reject("range: p = " + std::to_string(p) + " is not an odd prime");
  if (mod_floor(in.w, 2) != 1) return reject("parity: w = " + std::to_string(in.w) + " is even");
  if (mod_floor(in.w + 1 - in.k0, 2) != 0 || mod_floor(in.w + 1 - in.k1, 2) != 0) {
    return reject("parity: w + 1 - k_i is odd");
  }
  if (in.k0 < 2 || in.k1 < 2) return reject("range: k0, k1 must be >= 2");
  for (auto x : {in.n, in.m, in.r, in.s, in.t, in.u, in.v, in.z}) {
    if (x < 0) return reject("range: n, m, r, s, t, u, v, z must be non-negative");
  }
  const std::int64_t spade = (in.m - in.n) + (in.s - in.r) +
                             (p - 1) * ((in.t - in.u) + (in.v - in.z) + 2 * (a0 - a1));
  if (spade != 0) {
    return reject("(♠): (m-n)+(s-r)+(p-1)((t-u)+(v-z)+2(alpha0-alpha1)) = " +
                  std::to_string(spade) + " != 0");
  }
  const bool star = in.r == 0 && in.s == 0 && in.v == 0 && in.z == 0;
  const bool generic = 2 < in.k0 && in.k0 <= p + 1 && 2 < in.k1 && in.k1 <= p + 1;
  const bool star2 = generic && in.r + in.v <= in.k0 - 2 && in.s + in.z <= in.k1 - 2;
  if (star) {
    out.condition = "(*)";
  } else if (star2) {
    out.condition = "(**)";
  } else if (!generic) {
    return reject("(*): r, s, v, z are not all zero; (**): k0, k1 not in (2, p+1]");
  } else {
    return reject("(*): r, s, v, z are not all zero; (**): r+v <= k0-2 and s+z <= k1-2 fail");
  }

  const std::int64_t pp = p * p;
  // Direct weight bookkeeping of the composite operator.
  const std::int64_t k0 = in.k0 + in.n + p * in.m - in.r + p * in.s + (pp + 1) * in.t + (pp - 1) * in.v;
  const std::int64_t k1 = in.k1 + p * in.n + in.m + p * in.r - in.s + (pp + 1) * in.u + (pp - 1) * in.z;
  const std::int64_t w0 = (in.w + 1 - in.k0) / 2 - in.n - in.t + a0 * (pp - 1);
  const std::int64_t w1 = (in.w + 1 - in.k1) / 2 - in.m - in.u + a1 * (pp - 1);
  // Closed forms after eliminating m and r.
  out.k0 = in.k0 + (p + 1) * (in.n + in.t) + (p - 1) * (in.r + in.v) +
           p * (p - 1) * (in.u + in.z + 2 * (a1 - a0));
  out.k1 = in.k1 + (p + 1) * (in.m + in.u) + (p - 1) * (in.s + in.z) +
           p * (p - 1) * (in.t + in.v + 2 * (a0 - a1));
  out.w = in.w + (p - 1) * (in.n + in.t + in.r + in.v + 2 * a0 + p * (in.u + in.z + 2 * a1));
  if (out.k0 != k0 || out.k1 != k1 || k0 + 2 * w0 - 1 != out.w || k1 + 2 * w1 - 1 != out.w) {
    throw Error("internal: target weight formulas disagree");
  }
  if (out.k0 < 2 || out.k1 < 2) {
    return reject("(B): target k = (" + std::to_string(out.k0) + "," + std::to_string(out.k1) +
                  ") has an entry below 2");
  }
  if (out.condition == "(**)") out.c = c_value(in.k0 - 2, in.k1 - 2, in.r, in.s, in.v, in.z, p);
  out.accepted = true;
  return out;
}

std::vector<OpStep> main2_steps(const F2Params& in) {
  std::vector<OpStep> steps;
  auto push = [&](OperatorKind kind, std::int64_t alpha, std::int64_t beta, std::int64_t times) {
    for (std::int64_t i = 0; i < times; ++i) steps.push_back({kind, alpha, beta});
  };
  push(OperatorKind::kD, 0, 1, in.r);
  push(OperatorKind::kD, 1, 1, in.s);
  push(OperatorKind::kSerreD, 0, 0, in.v);
  push(OperatorKind::kSerreD, 1, 0, in.z);
  push(OperatorKind::kTheta, 0, 1, in.n);
  push(OperatorKind::kTheta, 1, 1, in.m);
  push(OperatorKind::kDickson, 0, 0, in.t);
  push(OperatorKind::kDickson, 1, 0, in.u);
  return steps;
}

// ---------------------------------------------------------------------------

ShiftTables shift_vector_tables(std::int64_t g) {
  if (g < 1) throw ArgumentError("g must be positive");
  auto pow_str = [](std::int64_t e) { return e == 1 ? std::string("p") : "p^" + std::to_string(e); };
  ShiftTables t;
  for (int side = 0; side < 2; ++side) {
    const bool theta = side == 0;
    auto& rows = theta ? t.theta : t.d;
    for (std::int64_t beta = 1; beta < g; ++beta) {
      for (std::int64_t alpha = 0; alpha < g; ++alpha) {
        ShiftRow row;
        row.op = {theta ? OperatorKind::kTheta : OperatorKind::kD, alpha, beta};
        row.name = row.op.name();
        row.entries.assign(g, "0");
        row.entries[alpha] = theta ? "1" : "-1";
        row.entries[(alpha + beta) % g] = pow_str(g - beta);
        rows.push_back(std::move(row));
      }
    }
    for (std::int64_t alpha = 0; alpha < g; ++alpha) {
      ShiftRow row;
      row.op = {theta ? OperatorKind::kDickson : OperatorKind::kSerreD, alpha, 0};
      row.name = row.op.name();
      row.entries.assign(g, "0");
      row.entries[alpha] = theta ? "q+1" : "q-1";
      rows.push_back(std::move(row));
    }
  }
  return t;
}

std::vector<std::int64_t> shift_vector(const OpStep& op, std::int64_t p, std::int64_t g) {
  std::vector<std::int64_t> v(g, 0);
  const std::int64_t q = ipow(p, g);
  switch (op.kind) {
    case OperatorKind::kTheta:
    case OperatorKind::kD:
      if (op.beta < 1 || op.beta >= g) throw ArgumentError("beta outside [1, g-1]");
      v[op.alpha] = op.kind == OperatorKind::kTheta ? 1 : -1;
      v[(op.alpha + op.beta) % g] = ipow(p, g - op.beta);
      break;
    case OperatorKind::kDickson: v[op.alpha] = q + 1; break;
    case OperatorKind::kSerreD: v[op.alpha] = q - 1; break;
  }
  return v;
}

// ---------------------------------------------------------------------------

LambdaReport compile_steps(std::int64_t p, const std::vector<std::int64_t>& degrees,
                           const std::vector<OpStep>& steps) {
  const auto g = static_cast<std::int64_t>(degrees.size());
  const PrimePower pp = PrimePower::make(p, g);
  const auto F = field_for(p, g);
  const std::int64_t budget = max_explicit_dim();
  LambdaReport rep;
  rep.steps = steps;
  rep.src = ModuleSpec::from_degrees(pp, degrees);
  rep.src_dim = rep.src.dim();
  if (rep.src_dim > budget) {
    throw BudgetError("source " + rep.src.describe() + " of dimension " +
                      std::to_string(rep.src_dim) + " exceeds the explicit-matrix budget");
  }
  LinMap comp{rep.src, rep.src, 0,
              FqMatrix(static_cast<std::uint32_t>(rep.src_dim), static_cast<std::uint32_t>(rep.src_dim))};
  for (std::uint32_t c = 0; c < rep.src_dim; ++c) comp.mat.col(c).emplace_back(c, 1);
  bool stages_ok = true;
  for (const auto& step : steps) {
    std::set<std::uint32_t> used;
    for (std::uint32_t c = 0; c < comp.mat.cols(); ++c) {
      for (const auto& e : comp.mat.col(c)) used.insert(e.first);
    }
    const ColumnSubset cols(used.begin(), used.end());
    if (!core_equivariant(*F, comp.dst, step)) stages_ok = false;
    const LinMap op = make_operator(step.kind, comp.dst, step.alpha, step.beta, &cols);
    comp = compose(*F, op, comp);
  }
  rep.dst = comp.dst;
  rep.dst_dim = comp.dst.dim();
  if (rep.dst_dim <= budget) {
    rep.equivariance_mode = "composite";
    rep.equivariant = check_equivariance(*F, comp);
  } else {
    rep.equivariance_mode = "per-stage";
    rep.equivariant = stages_ok;
  }
  rep.rank = rank(*F, comp.mat);
  rep.injective = rep.rank == rep.src_dim;
  rep.map = std::move(comp);
  return rep;
}

LambdaReport compile_lambda(const ShiftPlan& plan, std::size_t j) {
  if (j >= plan.recipe.size()) {
    throw ArgumentError("plan has no recipe for block " + std::to_string(j + 1));
  }
  std::vector<std::int64_t> degrees;
  for (auto k : plan.input.k[j]) degrees.push_back(k - 2);
  return compile_steps(plan.split.p, degrees, plan.recipe[j]);
}

}  // namespace gl2modrep
