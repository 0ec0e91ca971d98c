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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gl2modrep/brauer.hpp"
#include "gl2modrep/k0.hpp"
#include "gl2modrep/modrep.hpp"
#include "gl2modrep/shift.hpp"
#include "gl2modrep/verify.hpp"

namespace {

using namespace gl2modrep;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Calls fn(point) for every point of the box [lo, hi]^dims.
void for_each_point(int dims, std::int64_t lo, std::int64_t hi,
                    const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> x(dims, lo);
  while (true) {
    fn(x);
    int i = dims - 1;
    while (i >= 0 && x[i] == hi) x[i--] = lo;
    if (i < 0) return;
    ++x[i];
  }
}

std::string first_failure(const std::string& prev, const std::string& now) {
  return prev.empty() ? now : prev;
}

// ---------------------------------------------------------------------------

std::int64_t run_identity_grid(Normalizer& norm, Identity id, std::string& fail) {
  const auto& pp = norm.pp();
  const std::int64_t p = pp.p;
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  switch (id) {
    case Identity::kDelta:
    case Identity::kSigma:
    case Identity::kPhi: ranges = {{-2 * p, 4 * p}}; break;
    case Identity::kPi: ranges = {{0, 2 * p}, {0, 2 * p}}; break;
    case Identity::kPhiPrime: ranges = {{-2 * p, 4 * p}, {-2 * p, 4 * p}}; break;
    case Identity::kInttt: ranges = {{-2 * p, 4 * p}, {-2 * p, 4 * p}, {0, pp.g - 1}}; break;
  }
  std::int64_t count = 0;
  std::vector<std::int64_t> params(ranges.size());
  std::function<void(std::size_t)> rec = [&](std::size_t d) {
    if (d == ranges.size()) {
      ++count;
      if (!check_identity(norm, id, params).holds()) {
        std::ostringstream os;
        os << identity_name(id) << " p=" << p << " g=" << pp.g;
        for (auto x : params) os << " " << x;
        fail = first_failure(fail, os.str());
      }
      return;
    }
    for (params[d] = ranges[d].first; params[d] <= ranges[d].second; ++params[d]) rec(d + 1);
  };
  rec(0);
  return count;
}

const std::vector<Identity> kAllIdentities = {Identity::kDelta,    Identity::kSigma,
                                              Identity::kPi,       Identity::kPhi,
                                              Identity::kPhiPrime, Identity::kInttt};

Outcome criterion1() {
  std::int64_t count = 0;
  std::string fail;
  for (std::int64_t p : {3, 5}) {
    for (std::int64_t g : {1, 2, 3}) {
      const auto pp = PrimePower::make(p, g);
      Normalizer frob(pp, RuleSet::kFrobenius);
      for (auto id : kAllIdentities) count += run_identity_grid(frob, id, fail);
      if (g == 1) {
        Normalizer serre(pp, RuleSet::kSerre);
        for (auto id : kAllIdentities) count += run_identity_grid(serre, id, fail);
      }
    }
  }
  return {fail.empty(), std::to_string(count) + " instances checked on both routes" +
                            (fail.empty() ? "" : "; first failure: " + fail)};
}

// ---------------------------------------------------------------------------

std::string char_key(const CharVector& c) {
  std::string key;
  for (const auto& v : c.values) key += v.str() + "|";
  return key;
}

Outcome criterion2() {
  std::int64_t products = 0, labels = 0;
  std::string fail;
  for (std::int64_t p : {3, 5}) {
    for (std::int64_t g : {1, 2}) {
      const auto pp = PrimePower::make(p, g);
      Normalizer norm(pp);
      const BrauerOracle oracle(std::make_shared<const FieldCtx>(p, g));
      for_each_point(static_cast<int>(g), -2, 2 * p, [&](const std::vector<std::int64_t>& ks) {
        ++products;
        const Expr x = {RawTerm::from_ks(1, 0, ks)};
        const VirtualRep v = norm.normalize(x);
        if (oracle.char_vrep(v) != oracle.char_expr(x) || !char_equal(v, x)) {
          std::ostringstream os;
          os << "p=" << p << " g=" << g << " ks=";
          for (auto k : ks) os << k << ",";
          fail = first_failure(fail, os.str());
        }
      });
      const LabelCodec codec(pp);
      std::set<std::string> seen;
      for (std::uint32_t c = 0; c < codec.size(); ++c) {
        ++labels;
        const auto v = VirtualRep::label(pp, codec.decode(c));
        if (!seen.insert(char_key(oracle.char_vrep(v))).second) {
          fail = first_failure(fail, "labels collide: " + to_text(v));
        }
      }
    }
  }
  return {fail.empty(), std::to_string(products) + " products sound, " + std::to_string(labels) +
                            " labels separated" + (fail.empty() ? "" : "; first failure: " + fail)};
}

// ---------------------------------------------------------------------------

Outcome criterion3() {
  std::string fail;
  int cases = 0;
  for (std::int64_t p : {3, 5}) {
    for (std::int64_t g : {2, 3}) {
      ++cases;
      const auto pp = PrimePower::make(p, g);
      Normalizer norm(pp);
      std::vector<int> twisted_one(g, 0), low(g, 0);
      twisted_one[1] = 1;
      low[0] = static_cast<int>(p - 2);
      const VirtualRep expected = VirtualRep::label(pp, BasisLabel{0, twisted_one}) +
                                  VirtualRep::label(pp, BasisLabel{1, low});
      const VirtualRep got = norm.sym(p, 0);
      if (got != expected || !char_equal(got, Expr{RawTerm::from_ks(1, 0, {p})})) {
        fail = first_failure(fail, "p=" + std::to_string(p) + " g=" + std::to_string(g) + ": " +
                                       to_text(got));
      }
    }
  }
  return {fail.empty(), std::to_string(cases) + " cases of M_p = M_1^[1] + e*M_{p-2}" +
                            (fail.empty() ? "" : "; got " + fail)};
}

// ---------------------------------------------------------------------------

std::vector<OpStep> theta_family(std::int64_t g) {
  std::vector<OpStep> ops;
  for (std::int64_t beta = 1; beta < g; ++beta) {
    for (std::int64_t alpha = 0; alpha < g; ++alpha) ops.push_back({OperatorKind::kTheta, alpha, beta});
  }
  for (std::int64_t alpha = 0; alpha < g; ++alpha) ops.push_back({OperatorKind::kDickson, alpha, 0});
  return ops;
}

std::vector<OpStep> d_family(std::int64_t g) {
  std::vector<OpStep> ops;
  for (std::int64_t beta = 1; beta < g; ++beta) {
    for (std::int64_t alpha = 0; alpha < g; ++alpha) ops.push_back({OperatorKind::kD, alpha, beta});
  }
  for (std::int64_t alpha = 0; alpha < g; ++alpha) ops.push_back({OperatorKind::kSerreD, alpha, 0});
  return ops;
}

LinMap build(const OpStep& s, const ModuleSpec& src) {
  return make_operator(s.kind, src, s.alpha, s.beta);
}

Outcome criterion4() {
  std::int64_t maps = 0, pairs = 0;
  std::string fail;
  for (std::int64_t p : {3, 5}) {
    for (std::int64_t g : {2, 3}) {
      const auto pp = PrimePower::make(p, g);
      const FieldCtx F(p, g);
      const auto thetas = theta_family(g), ds = d_family(g);
      for_each_point(static_cast<int>(g), 0, p - 1, [&](const std::vector<std::int64_t>& ks) {
        const ModuleSpec src = ModuleSpec::from_degrees(pp, ks);
        std::ostringstream where;
        where << "p=" << p << " g=" << g << " k=";
        for (auto k : ks) where << k << ",";
        auto others = [&](std::int64_t alpha) {
          std::int64_t d = 1;
          for (std::int64_t i = 0; i < g; ++i) d *= i == alpha ? 1 : ks[i] + 1;
          return d;
        };
        std::vector<LinMap> theta_maps;
        for (const auto& s : thetas) {
          ++maps;
          theta_maps.push_back(build(s, src));
          const LinMap& m = theta_maps.back();
          const std::int64_t r = rank(F, m);
          bool ok = check_equivariance(F, m) && r == src.dim();
          if (s.kind == OperatorKind::kDickson) {
            ok = ok && m.dst.dim() - r == (pp.q + 1) * others(s.alpha);
          }
          if (!ok) fail = first_failure(fail, s.name() + " at " + where.str());
        }
        for (std::size_t a = 0; a < thetas.size(); ++a) {
          for (std::size_t b = a + 1; b < thetas.size(); ++b) {
            ++pairs;
            const LinMap ba = compose(F, build(thetas[b], theta_maps[a].dst), theta_maps[a]);
            const LinMap ab = compose(F, build(thetas[a], theta_maps[b].dst), theta_maps[b]);
            if (ab.dst != ba.dst || ab.det_twist != ba.det_twist || ab.mat != ba.mat) {
              fail = first_failure(fail, thetas[a].name() + " and " + thetas[b].name() +
                                             " do not commute at " + where.str());
            }
          }
        }
        for (const auto& s : ds) {
          ++maps;
          const LinMap m = build(s, src);
          const std::int64_t r = rank(F, m);
          const bool injective = r == src.dim();
          bool ok = check_equivariance(F, m) && injective == (ks[s.alpha] > 0);
          if (ks[s.alpha] == 0) ok = ok && m.mat.nnz() == 0;
          if (s.kind == OperatorKind::kSerreD && ks[s.alpha] >= 1) {
            ok = ok && m.dst.dim() - r == (pp.q - 1) * others(s.alpha);
          }
          if (!ok) fail = first_failure(fail, s.name() + " at " + where.str());
        }
      });
    }
  }
  return {fail.empty(), std::to_string(maps) + " operators, " + std::to_string(pairs) +
                            " commuting theta pairs" +
                            (fail.empty() ? "" : "; first failure: " + fail)};
}

// ---------------------------------------------------------------------------

Outcome criterion5() {
  std::int64_t count = 0;
  std::string fail;
  for (std::int64_t p : {3, 5}) {
    const auto pp = PrimePower::make(p, 1);
    const BrauerOracle oracle(std::make_shared<const FieldCtx>(p, 1));
    const std::int64_t q = pp.q;
    for (std::int64_t k = q + 1; k <= q + p; ++k) {
      const Expr diff = Expr{RawTerm::from_ks(1, 0, {k})} - Expr{RawTerm::from_ks(1, 1, {k - q - 1})};
      const CharVector lhs = oracle.char_expr(diff);
      CharVector induced;
      for (const auto& cls : oracle.classes()) induced.values.push_back(induced_char(oracle, k, cls));
      const LinMap dickson = dickson_op(ModuleSpec::from_degrees(pp, {k - q - 1}), 0);
      ++count;
      if (lhs != induced || cokernel_character(oracle, dickson) != induced) {
        fail = first_failure(fail, "p=" + std::to_string(p) + " k=" + std::to_string(k));
      }
    }
  }
  return {fail.empty(), std::to_string(count) + " degrees, symbolic and explicit cokernel" +
                            (fail.empty() ? "" : "; first failure: " + fail)};
}

// ---------------------------------------------------------------------------

Outcome criterion6() {
  const std::int64_t p = 3, g = 3;
  const auto pp = PrimePower::make(p, g);
  const FieldCtx F(p, g);
  std::int64_t count = 0;
  std::string fail;
  for (std::int64_t alpha = 0; alpha < g; ++alpha) {
    const std::int64_t next = (alpha + 1) % g;
    for (std::int64_t k = 0; k < p; ++k) {
      for (std::int64_t h = 0; h < p; ++h) {
        std::vector<std::int64_t> s(g, 0), t_theta(g, 0), t_d(g, 0);
        s[alpha] = k;
        s[next] = h;
        t_theta[alpha] = k + 1;
        t_theta[next] = h + p;
        t_d[alpha] = k - 1;
        t_d[next] = h + p;
        const ModuleSpec src = ModuleSpec::from_degrees(pp, s);
        const ModuleSpec dst_theta = ModuleSpec::from_degrees(pp, t_theta);
        const ModuleSpec dst_d = ModuleSpec::from_degrees(pp, t_d);
        for (std::int64_t m = 0; m < pp.q - 1; ++m) {
          count += 2;
          if (hom_space_dim(F, src, dst_theta, m) != 0) {
            fail = first_failure(fail, "theta side alpha=" + std::to_string(alpha) + " k=" +
                                           std::to_string(k) + " h=" + std::to_string(h) +
                                           " m=" + std::to_string(m));
          }
          if (hom_space_dim(F, src, dst_d, m) != 0) {
            fail = first_failure(fail, "D side alpha=" + std::to_string(alpha) + " k=" +
                                           std::to_string(k) + " h=" + std::to_string(h) +
                                           " m=" + std::to_string(m));
          }
        }
      }
    }
  }
  return {fail.empty(), std::to_string(count) + " Hom spaces, all zero" +
                            (fail.empty() ? "" : "; nonzero: " + fail)};
}

// ---------------------------------------------------------------------------

Outcome criterion7() {
  std::string fail, done;
  for (auto [p, g] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 1}, {5, 1}, {3, 2}, {3, 3}}) {
    const auto pp = PrimePower::make(p, g);
    const BrauerOracle oracle(std::make_shared<const FieldCtx>(p, g));
    const Expr target = Expr{RawTerm::from_ks(1, 0, {0})} + Expr{RawTerm::from_ks(1, 0, {pp.q - 1})};
    const CharVector expected = oracle.char_expr(target);
    const bool ok = perm_module_character(oracle) == expected &&
                    perm_module_character_explicit(oracle) == expected;
    done += (done.empty() ? "" : ",") + std::to_string(pp.q);
    if (!ok) fail = first_failure(fail, "q=" + std::to_string(pp.q));
  }
  return {fail.empty(), "q in {" + done + "}, fixed points and charpoly routes" +
                            (fail.empty() ? "" : "; failed at " + fail)};
}

// ---------------------------------------------------------------------------

struct TableRow {
  std::int64_t g;
  const char* name;
  const char* entries;
};

// Written out from the operator definitions: Theta_beta^[alpha] adds 1 at
// alpha and p^(g-beta) at alpha+beta (mod g); D_beta^[alpha] has -1 at alpha.
const TableRow kTables[] = {
    // g = 1
    {1, "Theta", "q+1"},
    {1, "D", "q-1"},
    // g = 2
    {2, "Theta_1", "1,p"},
    {2, "Theta_1^[1]", "p,1"},
    {2, "Theta", "q+1,0"},
    {2, "Theta^[1]", "0,q+1"},
    {2, "D_1", "-1,p"},
    {2, "D_1^[1]", "p,-1"},
    {2, "D", "q-1,0"},
    {2, "D^[1]", "0,q-1"},
    // g = 3
    {3, "Theta_1", "1,p^2,0"},
    {3, "Theta_1^[1]", "0,1,p^2"},
    {3, "Theta_1^[2]", "p^2,0,1"},
    {3, "Theta_2", "1,0,p"},
    {3, "Theta_2^[1]", "p,1,0"},
    {3, "Theta_2^[2]", "0,p,1"},
    {3, "Theta", "q+1,0,0"},
    {3, "Theta^[1]", "0,q+1,0"},
    {3, "Theta^[2]", "0,0,q+1"},
    {3, "D_1", "-1,p^2,0"},
    {3, "D_1^[1]", "0,-1,p^2"},
    {3, "D_1^[2]", "p^2,0,-1"},
    {3, "D_2", "-1,0,p"},
    {3, "D_2^[1]", "p,-1,0"},
    {3, "D_2^[2]", "0,p,-1"},
    {3, "D", "q-1,0,0"},
    {3, "D^[1]", "0,q-1,0"},
    {3, "D^[2]", "0,0,q-1"},
    // g = 4
    {4, "Theta_1", "1,p^3,0,0"},
    {4, "Theta_1^[1]", "0,1,p^3,0"},
    {4, "Theta_1^[2]", "0,0,1,p^3"},
    {4, "Theta_1^[3]", "p^3,0,0,1"},
    {4, "Theta_2", "1,0,p^2,0"},
    {4, "Theta_2^[1]", "0,1,0,p^2"},
    {4, "Theta_2^[2]", "p^2,0,1,0"},
    {4, "Theta_2^[3]", "0,p^2,0,1"},
    {4, "Theta_3", "1,0,0,p"},
    {4, "Theta_3^[1]", "p,1,0,0"},
    {4, "Theta_3^[2]", "0,p,1,0"},
    {4, "Theta_3^[3]", "0,0,p,1"},
    {4, "Theta", "q+1,0,0,0"},
    {4, "Theta^[1]", "0,q+1,0,0"},
    {4, "Theta^[2]", "0,0,q+1,0"},
    {4, "Theta^[3]", "0,0,0,q+1"},
    {4, "D_1", "-1,p^3,0,0"},
    {4, "D_1^[1]", "0,-1,p^3,0"},
    {4, "D_1^[2]", "0,0,-1,p^3"},
    {4, "D_1^[3]", "p^3,0,0,-1"},
    {4, "D_2", "-1,0,p^2,0"},
    {4, "D_2^[1]", "0,-1,0,p^2"},
    {4, "D_2^[2]", "p^2,0,-1,0"},
    {4, "D_2^[3]", "0,p^2,0,-1"},
    {4, "D_3", "-1,0,0,p"},
    {4, "D_3^[1]", "p,-1,0,0"},
    {4, "D_3^[2]", "0,p,-1,0"},
    {4, "D_3^[3]", "0,0,p,-1"},
    {4, "D", "q-1,0,0,0"},
    {4, "D^[1]", "0,q-1,0,0"},
    {4, "D^[2]", "0,0,q-1,0"},
    {4, "D^[3]", "0,0,0,q-1"},
};

Outcome criterion8() {
  std::string fail;
  std::size_t compared = 0;
  for (std::int64_t g = 1; g <= 4; ++g) {
    const ShiftTables t = shift_vector_tables(g);
    std::vector<ShiftRow> rows = t.theta;
    rows.insert(rows.end(), t.d.begin(), t.d.end());
    std::vector<const TableRow*> expected;
    for (const auto& r : kTables) {
      if (r.g == g) expected.push_back(&r);
    }
    if (rows.size() != expected.size() || rows.size() != static_cast<std::size_t>(2 * g * g)) {
      fail = first_failure(fail, "g=" + std::to_string(g) + " has " + std::to_string(rows.size()) + " rows");
      continue;
    }
    const std::int64_t p = 3;
    const auto pp = PrimePower::make(p, g);
    const ModuleSpec generic = ModuleSpec::from_degrees(pp, std::vector<std::int64_t>(g, 1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ++compared;
      std::string entries;
      for (std::size_t j = 0; j < rows[i].entries.size(); ++j) {
        entries += (j ? "," : "") + rows[i].entries[j];
      }
      if (rows[i].name != expected[i]->name || entries != expected[i]->entries) {
        fail = first_failure(fail, "g=" + std::to_string(g) + " row " + rows[i].name + " (" +
                                       entries + ")");
      }
      // The numeric vector must match the degree change of the actual operator.
      const LinMap m = build(rows[i].op, generic);
      const auto shift = shift_vector(rows[i].op, p, g);
      for (std::int64_t a = 0; a < g; ++a) {
        if (m.dst.factors[m.dst.factor_at_twist(a)].degree - 1 != shift[a]) {
          fail = first_failure(fail, "g=" + std::to_string(g) + " operator " + rows[i].name +
                                         " moves degrees differently");
        }
      }
    }
  }
  return {fail.empty(), std::to_string(compared) + " rows for g=1..4" +
                            (fail.empty() ? "" : "; first mismatch: " + fail)};
}

// ---------------------------------------------------------------------------

Outcome criterion9() {
  const std::vector<std::vector<std::int64_t>> splits = {{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 1},
                                                         {2, 2}, {1, 3}, {3, 1}, {1, 1, 1}};
  std::int64_t accepted = 0, compiled = 0, c_cases = 0;
  std::string fail;
  std::map<std::string, bool> compiled_ok;
  for (std::int64_t p : {3, 5}) {
    for (const auto& f : splits) {
      const PrimeSplit split = PrimeSplit::make(p, f);
      const std::int64_t g = split.g();
      std::int64_t fmax = 0;
      for (auto x : f) fmax = std::max(fmax, x);
      for_each_point(static_cast<int>(g), 3, p + 1, [&](const std::vector<std::int64_t>& flat) {
        for (auto x : flat) {
          if ((x - flat[0]) % 2 != 0) return;
        }
        WeightParams wp;
        wp.w = flat[0] + 1;
        std::size_t pos = 0;
        for (auto fj : f) {
          wp.k.emplace_back(flat.begin() + pos, flat.begin() + pos + fj);
          pos += fj;
        }
        for (std::int64_t beta = 1; beta <= fmax; ++beta) {
          for (std::int64_t mask = 0; mask < (std::int64_t{1} << g); ++mask) {
            std::vector<std::vector<bool>> theta;
            std::int64_t bit = 0;
            for (auto fj : f) {
              theta.emplace_back();
              for (std::int64_t i = 0; i < fj; ++i) theta.back().push_back((mask >> bit++) & 1);
            }
            const ShiftPlan plan =
                plan_general(split, wp, ShiftChoice::from_selectors(p, beta, theta));
            if (!plan.accepted) continue;
            ++accepted;
            for (std::size_t j = 0; j < f.size(); ++j) {
              std::string key = std::to_string(p) + ":";
              for (auto k : wp.k[j]) key += std::to_string(k) + ",";
              key += ":";
              for (const auto& s : plan.recipe[j]) key += s.name() + " ";
              auto it = compiled_ok.find(key);
              if (it == compiled_ok.end()) {
                ++compiled;
                const LambdaReport rep = compile_lambda(plan, j);
                it = compiled_ok.emplace(key, rep.injective && rep.equivariant).first;
              }
              if (!it->second) fail = first_failure(fail, "Lambda " + key);
            }
          }
        }
      });
    }
    for (std::int64_t k0 = 3; k0 <= p + 1; ++k0) {
      for (std::int64_t k1 = 3; k1 <= p + 1; ++k1) {
        const std::int64_t a = k0 - 2, b = k1 - 2;
        for (std::int64_t r = 0; r <= a; ++r) {
          for (std::int64_t v = 0; r + v <= a; ++v) {
            for (std::int64_t s = 0; s <= b; ++s) {
              for (std::int64_t z = 0; s + z <= b; ++z) {
                ++c_cases;
                const std::int64_t c = c_value(a, b, r, s, v, z, p);
                F2Params fp;
                fp.p = p;
                fp.r = r;
                fp.s = s;
                fp.v = v;
                fp.z = z;
                // The D-part applied to X^a (x) X^b lands on the first basis vector.
                const LambdaReport rep = compile_steps(p, {a, b}, main2_steps(fp));
                const bool matches = rep.map.mat.at(0, 0) == c;
                if (!check_c_nonzero(a, b, r, s, v, z, p) || !matches) {
                  fail = first_failure(fail, "c at p=" + std::to_string(p) + " a=" +
                                                 std::to_string(a) + " b=" + std::to_string(b) +
                                                 " r,s,v,z=" + std::to_string(r) + "," +
                                                 std::to_string(s) + "," + std::to_string(v) +
                                                 "," + std::to_string(z));
                }
              }
            }
          }
        }
      }
    }
  }
  return {fail.empty(), std::to_string(accepted) + " accepted plans, " + std::to_string(compiled) +
                            " distinct Lambda compiled, " + std::to_string(c_cases) +
                            " values of c nonzero" + (fail.empty() ? "" : "; first failure: " + fail)};
}

// ---------------------------------------------------------------------------

Outcome criterion10() {
  std::int64_t count = 0;
  std::string fail;
  for (std::int64_t p : {3, 5}) {
    for (std::int64_t g : {1, 2, 3}) {
      Normalizer norm(PrimePower::make(p, g), RuleSet::kFrobenius);
      count += run_identity_grid(norm, Identity::kSigma, fail);
    }
  }
  return {fail.empty(), std::to_string(count) + " instances of Sigma with the reflection, "
                                                "Frobenius and product rules only" +
                            (fail.empty() ? "" : "; first failure: " + fail)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"identity suite", criterion1},
      {"standard-form soundness", criterion2},
      {"M_p factorization", criterion3},
      {"operator suite", criterion4},
      {"cokernel character law", criterion5},
      {"non-embedding", criterion6},
      {"permutation module", criterion7},
      {"shift tables", criterion8},
      {"planner/operator coherence", criterion9},
      {"Sigma from Delta, Phi, Pi", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %s: %s (%.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
