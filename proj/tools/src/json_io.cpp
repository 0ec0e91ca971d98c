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


#include "gl2modrep_cli/json_io.hpp"

namespace gl2modrep::cli {

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

json to_json(const VirtualRep& v) {
  json terms = json::array();
  for (const auto& [label, coeff] : v.terms()) {
    terms.push_back({{"coeff", integer_json(coeff)}, {"m", label.m}, {"ks", label.ks}});
  }
  return {{"p", v.pp().p}, {"g", v.pp().g}, {"terms", terms}};
}

VirtualRep vrep_from_json(const json& j) {
  const auto pp = PrimePower::make(j.at("p").get<std::int64_t>(), j.at("g").get<std::int64_t>());
  VirtualRep out(pp);
  for (const auto& t : j.at("terms")) {
    BasisLabel l{t.at("m").get<std::int64_t>(), t.at("ks").get<std::vector<int>>()};
    out = out + VirtualRep::label(pp, l, integer_from_json(t.at("coeff")));
  }
  return out;
}

json to_json(const BrauerOracle& oracle, const CharVector& chars) {
  const FieldCtx& F = oracle.ctx();
  json classes = json::array();
  for (std::size_t i = 0; i < oracle.classes().size(); ++i) {
    const auto& cls = oracle.classes()[i];
    json value = json::array();
    for (const auto& c : chars.values.at(i).coeffs()) value.push_back(integer_json(c));
    classes.push_back({{"kind", kind_name(cls.kind)}, {"u", cls.u}, {"v", cls.v}, {"value", value}});
  }
  return {{"p", F.pp().p}, {"g", F.pp().g}, {"M", F.M()}, {"classes", classes}};
}

json to_json(const ModuleSpec& spec) {
  json factors = json::array();
  for (const auto& f : spec.factors) factors.push_back({{"degree", f.degree}, {"twist", f.twist}});
  return {{"det_power", spec.det_power}, {"factors", factors}};
}

json to_json(const LinMap& map) {
  const auto dense = map.mat.dense();
  json data = json::array();
  for (const auto& row : dense) {
    for (int x : row) data.push_back(x);
  }
  return {{"p", map.src.pp.p},          {"g", map.src.pp.g},         {"src", to_json(map.src)},
          {"dst", to_json(map.dst)},    {"det_twist", map.det_twist}, {"rows", map.mat.rows()},
          {"cols", map.mat.cols()},     {"data", data}};
}

namespace {

json opt_string(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

}  // namespace

json to_json(const ShiftPlan& plan) {
  json recipe = json::array();
  for (const auto& block : plan.recipe) {
    json names = json::array();
    for (const auto& step : block) names.push_back(step.name());
    recipe.push_back(names);
  }
  json target = nullptr;
  if (plan.accepted) target = {{"k", plan.target.k}, {"w", plan.target.w}};
  return {{"input", {{"p", plan.split.p}, {"f", plan.split.f}, {"k", plan.input.k}, {"w", plan.input.w}}},
          {"beta", plan.choice.beta},
          {"choices", plan.choice.a},
          {"accepted", plan.accepted},
          {"condition", opt_string(plan.condition)},
          {"rejection", opt_string(plan.rejection)},
          {"target", target},
          {"recipe", recipe}};
}

json to_json(const F2Plan& plan) {
  const auto& in = plan.params;
  json target = nullptr;
  if (plan.accepted) target = {{"k", {plan.k0, plan.k1}}, {"w", plan.w}};
  return {{"input",
           {{"p", in.p}, {"k", {in.k0, in.k1}}, {"w", in.w}, {"n", in.n}, {"m", in.m}, {"r", in.r},
            {"s", in.s}, {"t", in.t}, {"u", in.u}, {"v", in.v}, {"z", in.z},
            {"alpha0", in.alpha0}, {"alpha1", in.alpha1.value_or(in.alpha0)}}},
          {"accepted", plan.accepted},
          {"condition", opt_string(plan.condition)},
          {"rejection", opt_string(plan.rejection)},
          {"target", target},
          {"verified", plan.verified},
          {"c", plan.c ? json(*plan.c) : json(nullptr)}};
}

json to_json(const ShiftTables& tables, std::int64_t g) {
  auto rows = [](const std::vector<ShiftRow>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back({{"name", r.name}, {"entries", r.entries}});
    return out;
  };
  return {{"g", g}, {"theta", rows(tables.theta)}, {"d", rows(tables.d)}};
}

json to_json(const LambdaReport& rep) {
  json steps = json::array();
  for (const auto& s : rep.steps) steps.push_back(s.name());
  return {{"steps", steps},
          {"src", to_json(rep.src)},
          {"dst", to_json(rep.dst)},
          {"src_dim", rep.src_dim},
          {"dst_dim", rep.dst_dim},
          {"rank", rep.rank},
          {"injective", rep.injective},
          {"equivariant", rep.equivariant},
          {"equivariance_mode", rep.equivariance_mode}};
}

}  // namespace gl2modrep::cli
