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


#include <benchmark/benchmark.h>

#include <memory>

#include "gl2modrep/brauer.hpp"
#include "gl2modrep/k0.hpp"
#include "gl2modrep/modrep.hpp"
#include "gl2modrep/shift.hpp"
#include "gl2modrep/verify.hpp"

namespace {

using namespace gl2modrep;

void BM_NormalizeSym(benchmark::State& state) {
  const auto pp = PrimePower::make(5, 3);
  const std::int64_t k = state.range(0);
  for (auto _ : state) {
    Normalizer norm(pp);
    benchmark::DoNotOptimize(norm.sym(k));
  }
}
BENCHMARK(BM_NormalizeSym)->Arg(50)->Arg(200)->Arg(800);

void BM_NormalizeProduct(benchmark::State& state) {
  const auto pp = PrimePower::make(3, 3);
  const Expr x = {RawTerm::from_ks(1, 0, {state.range(0), state.range(0), state.range(0)})};
  for (auto _ : state) {
    Normalizer norm(pp);
    benchmark::DoNotOptimize(norm.normalize(x));
  }
}
BENCHMARK(BM_NormalizeProduct)->Arg(6)->Arg(12)->Arg(24);

void BM_IdentitySweep(benchmark::State& state) {
  const auto pp = PrimePower::make(5, 2);
  for (auto _ : state) {
    Normalizer norm(pp);
    bool all = true;
    for (std::int64_t k = -10; k <= 20; ++k) {
      for (std::int64_t h = -10; h <= 20; h += 3) {
        all = all && verify_identity(norm, Identity::kPhiPrime, {k, h});
      }
    }
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_IdentitySweep)->Unit(benchmark::kMillisecond);

void BM_OracleCharVector(benchmark::State& state) {
  const BrauerOracle oracle(std::make_shared<const FieldCtx>(state.range(0), state.range(1)));
  const Expr x = expr_term(1, 1, {{7, 0}, {4, 1 % state.range(1)}});
  for (auto _ : state) benchmark::DoNotOptimize(oracle.char_expr(x));
}
BENCHMARK(BM_OracleCharVector)->Args({5, 1})->Args({3, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);

void BM_GroupRingImage(benchmark::State& state) {
  const auto pp = PrimePower::make(state.range(0), state.range(1));
  const Expr x = expr_term(1, 1, {{7, 0}, {4, 1 % state.range(1)}});
  for (auto _ : state) benchmark::DoNotOptimize(char_image(pp, x));
}
BENCHMARK(BM_GroupRingImage)->Args({5, 1})->Args({3, 2})->Args({5, 2});

void BM_DicksonEquivariance(benchmark::State& state) {
  const std::int64_t p = state.range(0), g = state.range(1);
  const FieldCtx F(p, g);
  const ModuleSpec src = ModuleSpec::from_degrees(F.pp(), std::vector<std::int64_t>(g, p - 1));
  for (auto _ : state) {
    const LinMap m = dickson_op(src, 0);
    benchmark::DoNotOptimize(check_equivariance(F, m));
  }
}
BENCHMARK(BM_DicksonEquivariance)->Args({3, 2})->Args({5, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

void BM_HomSpaceDim(benchmark::State& state) {
  const FieldCtx F(3, 3);
  const ModuleSpec src = ModuleSpec::from_degrees(F.pp(), {2, 2, 0});
  const ModuleSpec dst = ModuleSpec::from_degrees(F.pp(), {3, 5, 0});
  for (auto _ : state) {
    for (std::int64_t m = 0; m < F.q() - 1; ++m) benchmark::DoNotOptimize(hom_space_dim(F, src, dst, m));
  }
}
BENCHMARK(BM_HomSpaceDim)->Unit(benchmark::kMillisecond);

void BM_CompileLambda(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  const ShiftPlan plan =
      plan_general(PrimeSplit::make(p, {3}), WeightParams{{{p + 1, p + 1, p + 1}}, p + 2},
                   ShiftChoice::from_selectors(p, 1, {{true, false, true}}));
  for (auto _ : state) benchmark::DoNotOptimize(compile_lambda(plan, 0));
}
BENCHMARK(BM_CompileLambda)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
