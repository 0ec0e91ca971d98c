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


#include "gl2modrep_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <sstream>

#include "gl2modrep/brauer.hpp"
#include "gl2modrep/k0.hpp"
#include "gl2modrep/modrep.hpp"
#include "gl2modrep/shift.hpp"
#include "gl2modrep/verify.hpp"
#include "gl2modrep_cli/json_io.hpp"
#include "gl2modrep_cli/term_parser.hpp"

namespace gl2modrep::cli {

namespace {

constexpr const char* kTermHelp =
    "Term grammar (whitespace is ignored):\n"
    "  expr   := ['+'|'-'] term (('+'|'-') term)*\n"
    "  term   := factor ('*' factor)*\n"
    "  factor := INT | e[^INT] | M<INT>[ '[' INT ']' ]\n"
    "Example: \"2*e^3*M5[0]*M2[1] - M-3\"";

struct Output {
  bool json = false;
  std::string file;
};

void add_output(CLI::App* sub, Output& o) {
  sub->add_flag("--json", o.json, "Machine-readable JSON output");
  sub->add_option("--out", o.file, "Write output to FILE instead of stdout");
}

RuleSet parse_rules(const std::string& s) {
  if (s == "frobenius") return RuleSet::kFrobenius;
  if (s == "serre") return RuleSet::kSerre;
  throw ArgumentError("unknown rule set '" + s + "' (expected frobenius or serre)");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string tuple_str(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// "8,8" for one block, "(4,4);(6)" for several.
std::string blocks_str(const std::vector<std::vector<std::int64_t>>& b) {
  if (b.size() == 1) {
    const std::string t = tuple_str(b[0]);
    return t.substr(1, t.size() - 2);
  }
  std::string out;
  for (std::size_t j = 0; j < b.size(); ++j) out += (j ? ";" : "") + tuple_str(b[j]);
  return out;
}

// ---------------------------------------------------------------------------

struct DecomposeArgs {
  std::int64_t p = 0, g = 1;
  std::string term, rules = "frobenius";
  bool check = false;
};

int do_decompose(const DecomposeArgs& a, const Output& o, std::ostream& out, std::ostream& err) {
  const auto pp = PrimePower::make(a.p, a.g);
  Normalizer norm(pp, parse_rules(a.rules));
  const Expr expr = parse_expr(a.term);
  const VirtualRep v = norm.normalize(expr);
  bool ok = true;
  if (a.check) ok = char_equal(v, expr);
  if (o.json) {
    json j = to_json(v);
    if (a.check) j["character_check"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << to_text(v) << "\n";
    if (a.check) out << "character check: " << (ok ? "ok" : "FAILED") << "\n";
  }
  if (!ok) {
    err << "error: character of the standard form differs from the input\n";
    return kRejected;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string identity, rules = "frobenius";
  std::int64_t p = 0, g = 1;
  std::string k, h, n, m, i;
};

int do_verify(const VerifyArgs& a, const Output& o, std::ostream& out) {
  const auto pp = PrimePower::make(a.p, a.g);
  const Identity id = parse_identity(a.identity);
  Normalizer norm(pp, parse_rules(a.rules));
  auto range_or = [](const std::string& s, std::int64_t lo, std::int64_t hi) {
    return s.empty() ? std::make_pair(lo, hi) : parse_range(s);
  };
  const auto kr = range_or(a.k, -2 * a.p, 4 * a.p);
  const auto hr = range_or(a.h, -2 * a.p, 4 * a.p);
  const auto nr = range_or(a.n, 0, 2 * a.p);
  const auto mr = range_or(a.m, 0, 2 * a.p);
  const auto ir = range_or(a.i, 0, a.g - 1);

  std::vector<std::string> names;
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  switch (id) {
    case Identity::kDelta:
    case Identity::kSigma:
    case Identity::kPhi: names = {"k"}; ranges = {kr}; break;
    case Identity::kPi: names = {"n", "m"}; ranges = {nr, mr}; break;
    case Identity::kPhiPrime: names = {"k", "h"}; ranges = {kr, hr}; break;
    case Identity::kInttt: names = {"k", "h", "i"}; ranges = {kr, hr, ir}; break;
  }
  std::vector<std::vector<std::int64_t>> grid{{}};
  for (const auto& [lo, hi] : ranges) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& prefix : grid) {
      for (std::int64_t x = lo; x <= hi; ++x) {
        next.push_back(prefix);
        next.back().push_back(x);
      }
    }
    grid = std::move(next);
  }

  json failures = json::array();
  std::ostringstream text;
  for (const auto& params : grid) {
    const IdentityCheck c = check_identity(norm, id, params);
    if (c.holds()) continue;
    json pj = json::object();
    std::string ptxt;
    for (std::size_t x = 0; x < names.size(); ++x) {
      pj[names[x]] = params[x];
      ptxt += (x ? " " : "") + names[x] + "=" + std::to_string(params[x]);
    }
    failures.push_back({{"params", pj},
                        {"standard_forms_equal", c.standard_forms_equal},
                        {"characters_equal", c.characters_equal},
                        {"fidelity", c.fidelity}});
    text << "FAIL " << identity_name(id) << " " << ptxt
         << ": standard forms " << (c.standard_forms_equal ? "agree" : "differ")
         << ", characters " << (c.characters_equal ? "agree" : "differ")
         << ", fidelity " << (c.fidelity ? "ok" : "broken") << "\n";
  }
  const bool all = failures.empty();
  if (o.json) {
    out << json{{"identity", identity_name(id)}, {"p", a.p},           {"g", a.g},
                {"rules", a.rules},              {"instances", grid.size()},
                {"failures", failures},          {"all_hold", all}}
               .dump(2)
        << "\n";
  } else {
    out << text.str();
    if (all) {
      out << "all hold (" << grid.size() << " instances)\n";
    } else {
      out << failures.size() << " of " << grid.size() << " instances fail\n";
    }
  }
  return all ? kOk : kRejected;
}

// ---------------------------------------------------------------------------

struct OperatorsArgs {
  std::int64_t p = 0, g = 1, det = 0;
  std::string k, op = "all";
  std::int64_t alpha = 0, beta = 1;
  bool dump = false;
};

OperatorKind parse_kind(const std::string& s) {
  if (s == "theta") return OperatorKind::kTheta;
  if (s == "dickson") return OperatorKind::kDickson;
  if (s == "d") return OperatorKind::kD;
  if (s == "serre-d") return OperatorKind::kSerreD;
  throw ArgumentError("unknown operator '" + s + "' (expected theta, dickson, d, serre-d or all)");
}

int do_operators(const OperatorsArgs& a, const Output& o, std::ostream& out) {
  const auto pp = PrimePower::make(a.p, a.g);
  const auto degrees = parse_int_list(a.k);
  if (static_cast<std::int64_t>(degrees.size()) != a.g) {
    throw ArgumentError("--k needs g = " + std::to_string(a.g) + " degrees");
  }
  for (auto d : degrees) {
    if (d < 0) throw ArgumentError("module degrees must be non-negative");
  }
  const FieldCtx F(a.p, a.g);
  const ModuleSpec src = ModuleSpec::from_degrees(pp, degrees, a.det);

  std::vector<OpStep> ops;
  if (a.op == "all") {
    for (int pass = 0; pass < 2; ++pass) {
      const bool theta = pass == 0;
      for (std::int64_t beta = 1; beta < a.g; ++beta) {
        for (std::int64_t alpha = 0; alpha < a.g; ++alpha) {
          ops.push_back({theta ? OperatorKind::kTheta : OperatorKind::kD, alpha, beta});
        }
      }
      for (std::int64_t alpha = 0; alpha < a.g; ++alpha) {
        ops.push_back({theta ? OperatorKind::kDickson : OperatorKind::kSerreD, alpha, 0});
      }
    }
  } else {
    ops.push_back({parse_kind(a.op), a.alpha, a.beta});
  }
  if (a.dump) {
    if (ops.size() != 1) throw ArgumentError("--dump needs a single --op");
    const LinMap map = make_operator(ops[0].kind, src, ops[0].alpha, ops[0].beta);
    out << to_json(map).dump() << "\n";
    return kOk;
  }
  const std::int64_t budget = max_explicit_dim();
  json reports = json::array();
  bool all_equivariant = true;
  for (const auto& step : ops) {
    const LinMap map = make_operator(step.kind, src, step.alpha, step.beta);
    const std::int64_t r = rank(F, map);
    json rep = {{"name", step.name()},
                {"src", to_json(map.src)},
                {"dst", to_json(map.dst)},
                {"src_dim", map.mat.cols()},
                {"dst_dim", map.mat.rows()},
                {"det_twist", map.det_twist},
                {"rank", r},
                {"kernel_dim", static_cast<std::int64_t>(map.mat.cols()) - r},
                {"coker_dim", static_cast<std::int64_t>(map.mat.rows()) - r},
                {"injective", r == map.mat.cols()}};
    if (map.mat.rows() <= budget) {
      const bool eq = check_equivariance(F, map);
      all_equivariant = all_equivariant && eq;
      rep["equivariant"] = eq;
    } else {
      rep["equivariant"] = nullptr;
    }
    if (!o.json) {
      out << step.name() << ": " << map.src.describe() << " -> " << map.dst.describe() << "  dim "
          << map.mat.cols() << " -> " << map.mat.rows() << ", det twist " << map.det_twist
          << ", rank " << r << ", kernel " << rep["kernel_dim"] << ", coker " << rep["coker_dim"]
          << ", equivariant "
          << (rep["equivariant"].is_null() ? "skipped (budget)" : yes_no(rep["equivariant"].get<bool>()))
          << "\n";
    }
    reports.push_back(std::move(rep));
  }
  if (o.json) {
    out << json{{"p", a.p}, {"g", a.g}, {"src", to_json(src)}, {"operators", reports}}.dump(2)
        << "\n";
  }
  return all_equivariant ? kOk : kRejected;
}

// ---------------------------------------------------------------------------

struct HomdimArgs {
  std::int64_t p = 0, g = 1;
  std::string src, dst, m;
};

int do_homdim(const HomdimArgs& a, const Output& o, std::ostream& out) {
  const auto pp = PrimePower::make(a.p, a.g);
  const FieldCtx F(a.p, a.g);
  const auto sd = parse_int_list(a.src), dd = parse_int_list(a.dst);
  if (static_cast<std::int64_t>(sd.size()) != a.g || static_cast<std::int64_t>(dd.size()) != a.g) {
    throw ArgumentError("--src and --dst need g = " + std::to_string(a.g) + " degrees");
  }
  const ModuleSpec src = ModuleSpec::from_degrees(pp, sd), dst = ModuleSpec::from_degrees(pp, dd);
  const auto mr = a.m.empty() ? std::make_pair<std::int64_t, std::int64_t>(0, pp.q - 2)
                              : parse_range(a.m);
  json results = json::array();
  for (std::int64_t m = mr.first; m <= mr.second; ++m) {
    const std::int64_t d = hom_space_dim(F, src, dst, m);
    results.push_back({{"m", m}, {"dim", d}});
    if (!o.json) out << "m=" << m << ": " << d << "\n";
  }
  if (o.json) {
    out << json{{"p", a.p}, {"g", a.g}, {"src", sd}, {"dst", dd}, {"results", results}}.dump(2)
        << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct PlanArgs {
  std::int64_t p = 0, w = 0, beta = 1;
  std::string f, k, choices;
  bool compile = false;
  bool main2 = false;
  std::int64_t n = 0, m = 0, r = 0, s = 0, t = 0, u = 0, v = 0, z = 0, alpha = 0;
  std::optional<std::int64_t> alpha1;
};

int do_plan_main2(const PlanArgs& a, const Output& o, std::ostream& out) {
  const auto k = parse_int_list(a.k);
  if (k.size() != 2) throw ArgumentError("--main2 needs --k k0,k1");
  F2Params in;
  in.p = a.p;
  in.k0 = k[0];
  in.k1 = k[1];
  in.w = a.w;
  in.n = a.n;
  in.m = a.m;
  in.r = a.r;
  in.s = a.s;
  in.t = a.t;
  in.u = a.u;
  in.v = a.v;
  in.z = a.z;
  in.alpha0 = a.alpha;
  in.alpha1 = a.alpha1;
  const F2Plan plan = plan_f2(in);
  json j = to_json(plan);
  std::optional<LambdaReport> rep;
  if (a.compile && plan.accepted) {
    rep = compile_steps(a.p, {in.k0 - 2, in.k1 - 2}, main2_steps(in));
    j["lambda"] = to_json(*rep);
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else if (plan.accepted) {
    out << "accepted via " << *plan.condition << ": target (" << plan.k0 << "," << plan.k1 << ";"
        << plan.w << ")";
    if (!plan.verified) out << " [unverified: alpha1 != alpha0]";
    out << "\n";
    if (plan.c) out << "c = " << *plan.c << " (mod " << a.p << ")\n";
    if (rep) {
      out << "lambda: dim " << rep->src_dim << " -> " << rep->dst_dim << ", rank " << rep->rank
          << ", injective " << yes_no(rep->injective) << ", equivariant "
          << yes_no(rep->equivariant) << " (" << rep->equivariance_mode << ")\n";
    }
  } else {
    out << "rejected: " << *plan.rejection << "\n";
  }
  return plan.accepted ? kOk : kRejected;
}

int do_plan(const PlanArgs& a, const Output& o, std::ostream& out) {
  if (a.main2) return do_plan_main2(a, o, out);
  if (a.choices.empty()) throw ArgumentError("--choices is required");
  const auto k = parse_blocks(a.k);
  std::vector<std::int64_t> f;
  if (a.f.empty()) {
    for (const auto& b : k) f.push_back(static_cast<std::int64_t>(b.size()));
  } else {
    f = parse_int_list(a.f);
  }
  const PrimeSplit split = PrimeSplit::make(a.p, f);
  std::vector<std::vector<bool>> theta;
  for (const auto& block : parse_word_blocks(a.choices)) {
    std::vector<bool> row;
    for (const auto& w : block) {
      if (w == "theta" || w == "t" || w == "+") {
        row.push_back(true);
      } else if (w == "d" || w == "D" || w == "-") {
        row.push_back(false);
      } else {
        throw ArgumentError("choice '" + w + "' is neither theta nor d");
      }
    }
    theta.push_back(std::move(row));
  }
  const ShiftPlan plan =
      plan_general(split, WeightParams{k, a.w}, ShiftChoice::from_selectors(a.p, a.beta, theta));
  json j = to_json(plan);
  std::vector<LambdaReport> reps;
  if (a.compile && plan.accepted) {
    json lam = json::array();
    for (std::size_t b = 0; b < plan.recipe.size(); ++b) {
      reps.push_back(compile_lambda(plan, b));
      lam.push_back(to_json(reps.back()));
    }
    j["lambda"] = lam;
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else if (plan.accepted) {
    out << "accepted via " << *plan.condition << ": target (" << blocks_str(plan.target.k) << ";"
        << plan.target.w << ")\n";
    for (std::size_t b = 0; b < plan.recipe.size(); ++b) {
      out << "block " << b + 1 << ":";
      for (const auto& s : plan.recipe[b]) out << " " << s.name();
      if (b < reps.size()) {
        out << "  [dim " << reps[b].src_dim << " -> " << reps[b].dst_dim << ", rank "
            << reps[b].rank << ", injective " << yes_no(reps[b].injective) << ", equivariant "
            << yes_no(reps[b].equivariant) << "]";
      }
      out << "\n";
    }
  } else {
    out << "rejected: " << *plan.rejection << "\n";
  }
  return plan.accepted ? kOk : kRejected;
}

// ---------------------------------------------------------------------------

int do_tables(std::int64_t g, std::optional<std::int64_t> p, const Output& o, std::ostream& out) {
  const ShiftTables t = shift_vector_tables(g);
  if (o.json) {
    json j = to_json(t, g);
    if (p) {
      j["p"] = *p;
      for (const char* side : {"theta", "d"}) {
        const auto& rows = std::string(side) == "theta" ? t.theta : t.d;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          j[side][i]["values"] = shift_vector(rows[i].op, *p, g);
        }
      }
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto* rows : {&t.theta, &t.d}) {
    for (const auto& row : *rows) {
      std::string entries;
      for (std::size_t i = 0; i < row.entries.size(); ++i) {
        entries += (i ? "," : "") + row.entries[i];
      }
      out << row.name << std::string(row.name.size() < 14 ? 14 - row.name.size() : 1, ' ') << "("
          << entries << ")";
      if (p) out << "  = " << tuple_str(shift_vector(row.op, *p, g));
      out << "\n";
    }
    if (rows == &t.theta) out << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int do_chartable(std::int64_t p, std::int64_t g, const std::string& term, const Output& o,
                 std::ostream& out) {
  PrimePower::make(p, g);
  const BrauerOracle oracle(std::make_shared<const FieldCtx>(p, g));
  const CharVector chars = oracle.char_expr(parse_expr(term));
  if (o.json) {
    out << to_json(oracle, chars).dump(2) << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < chars.values.size(); ++i) {
    out << oracle.classes()[i].describe() << ": " << chars.values[i].str() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for modular representations of GL_2(F_q)", "gl2modrep"};
  app.require_subcommand(1);
  app.footer(std::string("Exit codes: 0 success, 1 rejection, 2 usage error.\n"
                         "GL2MODREP_MAX_DIM caps explicit matrix dimensions (default 2048).\n\n") +
             kTermHelp);

  Output out_opts;

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Standard form of an expression in K_0");
  dec_cmd->add_option("--p", dec.p, "Prime p")->required();
  dec_cmd->add_option("--g", dec.g, "Degree g, q = p^g");
  dec_cmd->add_option("--term", dec.term, "Expression to decompose")->required();
  dec_cmd->add_option("--rules", dec.rules, "Reduction rules: frobenius (default) or serre");
  dec_cmd->add_flag("--check", dec.check, "Also compare Brauer characters with the input");
  dec_cmd->footer(kTermHelp);
  add_output(dec_cmd, out_opts);

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check an identity family over a parameter range");
  ver_cmd->set_help_flag("--help", "Print this help message and exit");
  ver_cmd->add_option("--identity", ver.identity, "delta, sigma, pi, phi, phiprime or inttt")
      ->required();
  ver_cmd->add_option("--p", ver.p, "Prime p")->required();
  ver_cmd->add_option("--g", ver.g, "Degree g");
  ver_cmd->add_option("--k", ver.k, "Range a..b for k (default -2p..4p)");
  ver_cmd->add_option("--h", ver.h, "Range for h (default -2p..4p)");
  ver_cmd->add_option("--n", ver.n, "Range for n (default 0..2p)");
  ver_cmd->add_option("--m", ver.m, "Range for m (default 0..2p)");
  ver_cmd->add_option("--i", ver.i, "Range for the twist index i (default 0..g-1)");
  ver_cmd->add_option("--rules", ver.rules, "Reduction rules: frobenius (default) or serre");
  add_output(ver_cmd, out_opts);

  OperatorsArgs ops;
  auto* ops_cmd = app.add_subcommand("operators", "Rank, cokernel and equivariance of operators");
  ops_cmd->add_option("--p", ops.p, "Prime p")->required();
  ops_cmd->add_option("--g", ops.g, "Degree g");
  ops_cmd->add_option("--k", ops.k, "Source degrees k_0,...,k_{g-1}")->required();
  ops_cmd->add_option("--det", ops.det, "det power of the source");
  ops_cmd->add_option("--op", ops.op, "theta, dickson, d, serre-d or all (default)");
  ops_cmd->add_option("--alpha", ops.alpha, "Twist alpha of a single operator");
  ops_cmd->add_option("--beta", ops.beta, "Index beta of a single theta or d operator");
  ops_cmd->add_flag("--dump", ops.dump, "Print the matrix of a single operator as JSON");
  add_output(ops_cmd, out_opts);

  HomdimArgs hom;
  auto* hom_cmd = app.add_subcommand("homdim", "Dimension of Hom_G(det^m (x) src, dst)");
  hom_cmd->add_option("--p", hom.p, "Prime p")->required();
  hom_cmd->add_option("--g", hom.g, "Degree g");
  hom_cmd->add_option("--src", hom.src, "Source degrees")->required();
  hom_cmd->add_option("--dst", hom.dst, "Destination degrees")->required();
  hom_cmd->add_option("--m", hom.m, "det power or range a..b (default 0..q-2)");
  add_output(hom_cmd, out_opts);

  PlanArgs plan;
  auto* plan_cmd = app.add_subcommand("plan", "Plan a holomorphic weight shift");
  plan_cmd->add_option("--p", plan.p, "Odd prime p")->required();
  plan_cmd->add_option("--f", plan.f, "Residue degrees f_1,...,f_r (default: from --k)");
  plan_cmd->add_option("--k", plan.k, "Weights, blocks separated by ';'")->required();
  plan_cmd->add_option("--w", plan.w, "Odd integer w")->required();
  plan_cmd->add_option("--beta", plan.beta, "Shift exponent beta (default 1)");
  plan_cmd->add_option("--choices", plan.choices, "theta or d per entry, blocks separated by ';'");
  plan_cmd->add_flag("--compile", plan.compile, "Build and check the composite operator");
  plan_cmd->add_flag("--main2", plan.main2, "Two-embedding shift with n, m, r, s, t, u, v, z");
  for (auto [name, ref] : std::vector<std::pair<const char*, std::int64_t*>>{
           {"--n", &plan.n}, {"--m", &plan.m}, {"--r", &plan.r}, {"--s", &plan.s},
           {"--t", &plan.t}, {"--u", &plan.u}, {"--v", &plan.v}, {"--z", &plan.z}}) {
    plan_cmd->add_option(name, *ref, "Operator multiplicity (with --main2)");
  }
  plan_cmd->add_option("--alpha", plan.alpha, "det multiple on the first factor (with --main2)");
  plan_cmd->add_option("--alpha1", plan.alpha1,
                       "det multiple on the second factor (default: --alpha; other values are unverified)");
  add_output(plan_cmd, out_opts);

  std::int64_t tab_g = 1;
  std::optional<std::int64_t> tab_p;
  auto* tab_cmd = app.add_subcommand("tables", "Shift-vector tables of the g^2 + g^2 operators");
  tab_cmd->add_option("--g", tab_g, "Degree g")->required();
  tab_cmd->add_option("--p", tab_p, "Also evaluate the entries at this prime");
  add_output(tab_cmd, out_opts);

  std::int64_t ch_p = 0, ch_g = 1;
  std::string ch_term;
  auto* ch_cmd = app.add_subcommand("chartable", "Brauer character of an expression");
  ch_cmd->add_option("--p", ch_p, "Prime p")->required();
  ch_cmd->add_option("--g", ch_g, "Degree g");
  ch_cmd->add_option("--term", ch_term, "Expression")->required();
  ch_cmd->footer(kTermHelp);
  add_output(ch_cmd, out_opts);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream buf;
  int code = kOk;
  try {
    if (*dec_cmd) {
      code = do_decompose(dec, out_opts, buf, err);
    } else if (*ver_cmd) {
      code = do_verify(ver, out_opts, buf);
    } else if (*ops_cmd) {
      code = do_operators(ops, out_opts, buf);
    } else if (*hom_cmd) {
      code = do_homdim(hom, out_opts, buf);
    } else if (*plan_cmd) {
      code = do_plan(plan, out_opts, buf);
    } else if (*tab_cmd) {
      code = do_tables(tab_g, tab_p, out_opts, buf);
    } else if (*ch_cmd) {
      code = do_chartable(ch_p, ch_g, ch_term, out_opts, buf);
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kRejected;
  }

  if (out_opts.file.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(out_opts.file, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_opts.file << "\n";
      return kUsage;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace gl2modrep::cli
