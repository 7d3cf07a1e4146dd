/*
 * Copyright 2026 The measure-audit Authors
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

#include "maudit/inconsistency.hpp"
#include "maudit/properties.hpp"

namespace {

using namespace maudit;

const ConfusionMatrix kBinary(BinaryCounts(30, 20, 10, 40));
const ConfusionMatrix kThree = ConfusionMatrix::from_rows({{30, 10, 0}, {20, 40, 10}, {0, 20, 50}});

void BM_Evaluate(benchmark::State& state, const char* id, const ConfusionMatrix* c) {
  const MeasureDescriptor d = parse_measure(id);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(d, *c));
}
BENCHMARK_CAPTURE(BM_Evaluate, acc, "acc", &kBinary);
BENCHMARK_CAPTURE(BM_Evaluate, cc_binary, "cc", &kBinary);
BENCHMARK_CAPTURE(BM_Evaluate, cc_three, "cc", &kThree);
BENCHMARK_CAPTURE(BM_Evaluate, ce_three, "ce", &kThree);
BENCHMARK_CAPTURE(BM_Evaluate, gm_r2, "gm:r=2", &kBinary);
BENCHMARK_CAPTURE(BM_Evaluate, f1_macro, "f1:macro", &kThree);

void BM_BaselineExpectation(benchmark::State& state) {
  const MeasureDescriptor d = parse_measure("cc");
  const int n = static_cast<int>(state.range(0));
  std::vector<std::int64_t> a{n / 3, n / 3, n - 2 * (n / 3)}, b{n / 2, n / 4, n - n / 2 - n / 4};
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(exact_baseline_expectation(d, a, b, budget));
  }
}
BENCHMARK(BM_BaselineExpectation)->Arg(6)->Arg(9)->Arg(12);

void BM_CheckMonotone(benchmark::State& state) {
  AuditSpace s;
  s.n_max = static_cast<int>(state.range(0));
  const MeasureDescriptor d = parse_measure("cc");
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(check_property(d, Property::Mon, s, budget));
  }
}
BENCHMARK(BM_CheckMonotone)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Groups(benchmark::State& state) {
  std::vector<MeasureDescriptor> ms = parse_measure_list("acc,ba,f1,kappa,ce,gm:r=1,cc,sba");
  const int n = static_cast<int>(state.range(0));
  const auto method = state.range(1) ? GroupMethod::MatrixClasses : GroupMethod::Labelings;
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(indistinguishable_groups(n, ms, method, budget));
  }
}
BENCHMARK(BM_Groups)->Args({6, 0})->Args({6, 1})->Args({10, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
