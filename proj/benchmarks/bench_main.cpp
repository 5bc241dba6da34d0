// Copyright 2026 The sigma3 Authors
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


#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "sigma3/classgroup.hpp"
#include "sigma3/fpgroup.hpp"
#include "sigma3/pcgroup.hpp"
#include "sigma3/pgen.hpp"
#include "sigma3/pquotient.hpp"
#include "sigma3/sl2.hpp"
#include "sigma3/subgroup.hpp"

namespace {

using namespace sigma3;

void BM_Collect(benchmark::State& state) {
  const PcGroup g = p_quotient(gn_presentation(static_cast<int>(state.range(0))), 12).quotient;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(0, 2);
  std::vector<PcElement> xs;
  for (int i = 0; i < 256; ++i) {
    NormalWord w;
    for (int k = 0; k < g.num_gens(); ++k) {
      if (int x = e(rng)) w.push_back({k, x});
    }
    xs.push_back(g.element(w));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.multiply(xs[i % 256], xs[(i + 1) % 256]));
    ++i;
  }
}
BENCHMARK(BM_Collect)->DenseRange(1, 4);

void BM_PQuotient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p_quotient(gn_presentation(n), 2 * n + 2).quotient.order_log3());
}
BENCHMARK(BM_PQuotient)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_MaximalSubgroupInvariants(benchmark::State& state) {
  const PcGroup g = p_quotient(gn_presentation(static_cast<int>(state.range(0))), 12).quotient;
  for (auto _ : state) benchmark::DoNotOptimize(maximal_subgroup_invariants(g));
}
BENCHMARK(BM_MaximalSubgroupInvariants)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_DescendantSearch(benchmark::State& state) {
  const AQIConstraint c = AQIConstraint::parse("whole: 3,3\nmax: 3,9 | 3,9 | 3,9 | 3,3,3\n");
  for (auto _ : state) benchmark::DoNotOptimize(constrained_search(PcGroup::elementary_abelian(2), c).terminal.size());
}
BENCHMARK(BM_DescendantSearch)->Unit(benchmark::kMillisecond);

void BM_SylowBfs(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sylow_subgroup(m).order());
}
BENCHMARK(BM_SylowBfs)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ClassGroupScan(benchmark::State& state) {
  const std::int64_t width = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan(-width, -1, [](const ScanRecord&) { return false; }, 1).size());
  }
}
BENCHMARK(BM_ClassGroupScan)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
