// Copyright 2026 The Orlicz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "orlicz/family.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/operators.hpp"
#include "orlicz/symbol_conditions.hpp"
#include "orlicz/symbols.hpp"
#include "orlicz/young_calculus.hpp"

namespace {

using namespace orlicz;

GridFunction gaussian(std::size_t n) {
  return GridFunction::sample(1, 8.0, n, [](auto x) { return std::exp(-x[0] * x[0]); });
}

void BM_Exponents(benchmark::State& state) {
  const YoungFunction phi = make_builtin(Builtin::counterexample);
  GridConfig cfg;
  cfg.n_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_exponents(phi, cfg));
}
BENCHMARK(BM_Exponents)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Luxemburg(benchmark::State& state) {
  const YoungFunction phi = make_builtin(Builtin::counterexample);
  const GridFunction f = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_norm(f, phi));
}
BENCHMARK(BM_Luxemburg)->RangeMultiplier(4)->Range(256, 16384);

void BM_WeakOrlicz(benchmark::State& state) {
  const YoungFunction phi = make_builtin(Builtin::counterexample);
  const GridFunction f = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weak_orlicz_norm(f, phi));
}
BENCHMARK(BM_WeakOrlicz)->RangeMultiplier(4)->Range(256, 16384);

void BM_Multiplier(benchmark::State& state) {
  const SymbolDescriptor a = make_symbol("sgn", 1, {});
  const GridFunction f = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_multiplier(a, f));
}
BENCHMARK(BM_Multiplier)->RangeMultiplier(4)->Range(256, 65536);

void BM_PsdoKn(benchmark::State& state) {
  const SymbolDescriptor a = make_symbol("smooth-s0", 1, {});
  const GridFunction f = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_psdo_kn(a, f));
}
BENCHMARK(BM_PsdoKn)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);

void BM_PsdoGeneral(benchmark::State& state) {
  const SymbolDescriptor a = make_symbol("smooth-s0", 1, {});
  const GridFunction f = gaussian(static_cast<std::size_t>(state.range(0)));
  const auto A = QuantizationMatrix::scalar(1, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(apply_psdo_general(a, A, f));
}
BENCHMARK(BM_PsdoGeneral)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_Fio(benchmark::State& state) {
  SymbolDescriptor a = make_symbol("identity", 1, {});
  a.support_cutoff = 0.5;
  const auto phase = ValidatedPhase::accept(make_phase("perturbed", 1, {}));
  const GridFunction f = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_fio(a, phase, f));
}
BENCHMARK(BM_Fio)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Mihlin(benchmark::State& state) {
  const SymbolDescriptor a = make_symbol("unimodular-power", 1, std::vector<double>{1.0});
  for (auto _ : state) benchmark::DoNotOptimize(mihlin_functional(a, 1));
}
BENCHMARK(BM_Mihlin)->Unit(benchmark::kMillisecond);

void BM_Family(benchmark::State& state) {
  const FamilyConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(generate_family(cfg, 1, 8.0, 256));
}
BENCHMARK(BM_Family);

}  // namespace

BENCHMARK_MAIN();
