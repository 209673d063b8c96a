// Copyright 2026 The entfact Authors
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

#include "entfact/circuits.hpp"
#include "entfact/rng.hpp"

using namespace entfact;

namespace {

ComplexMatrix random_hermitian(int n, std::uint64_t seed) {
  SplitMix64 g(seed);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = g.next_complex_gaussian();
  return hermitize(m);
}

void BM_EigHermitian(benchmark::State& state) {
  const ComplexMatrix h = random_hermitian(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_hermitian(h));
  }
}
BENCHMARK(BM_EigHermitian)->Arg(4)->Arg(16);

void BM_SqrtmPsd(benchmark::State& state) {
  const DensityMatrix rho = random_mixed(2, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqrtm_psd(rho.mat));
  }
}
BENCHMARK(BM_SqrtmPsd);

void BM_Concurrence(benchmark::State& state) {
  const DensityMatrix rho = random_mixed(3, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence(rho));
  }
}
BENCHMARK(BM_Concurrence);

void BM_ApplyOneSided(benchmark::State& state) {
  const KrausChannel ch = random_channel(4, 4);
  const DensityMatrix rho = random_mixed(5, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_one_sided(ch, rho, Side::Right));
  }
}
BENCHMARK(BM_ApplyOneSided);

void BM_FactorizationResidual(benchmark::State& state) {
  const KrausChannel ch = random_channel(6, 3);
  const PureState psi = random_pure(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorization_residual(ch, psi));
  }
}
BENCHMARK(BM_FactorizationResidual);

void BM_DualCheck(benchmark::State& state) {
  const KrausChannel ch = random_channel(8, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_check(ch, 0.37));
  }
}
BENCHMARK(BM_DualCheck);

void BM_EntanglementSwap(benchmark::State& state) {
  const KrausChannel ch = random_channel(9, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(entanglement_swap(0.3, ch));
  }
}
BENCHMARK(BM_EntanglementSwap);

}  // namespace

BENCHMARK_MAIN();
