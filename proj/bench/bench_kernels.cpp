// Copyright 2026 The invphase Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference loops vs the OpenMP kernels.
//   ./bench_kernels --benchmark_filter=Gemm

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "invphase/kernels.hpp"

namespace {

using invphase::kernels::Complex;

std::vector<Complex> random_values(std::size_t count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> v(count);
    for (auto &z : v) {
        z = {g(rng), g(rng)};
    }
    return v;
}

template <auto Kernel> void BM_Gemm(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_values(n * n, 1);
    const auto b = random_values(n * n, 2);
    std::vector<Complex> c(n * n);
    for (auto _ : state) {
        Kernel(a, b, c, n);
        benchmark::DoNotOptimize(c.data());
    }
    state.counters["threads"] = invphase::kernels::max_threads();
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}

template <auto Kernel> void BM_PhaseDensity(benchmark::State &state) {
    const auto amps = random_values(64, 3);
    std::vector<double> density(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        Kernel(amps, 0, density);
        benchmark::DoNotOptimize(density.data());
    }
}

} // namespace

BENCHMARK(BM_Gemm<invphase::kernels::serial::gemm>)->Name("Gemm/serial")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_Gemm<invphase::kernels::parallel::gemm>)->Name("Gemm/parallel")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_PhaseDensity<invphase::kernels::serial::phase_density>)->Name("PhaseDensity/serial")->Arg(256)->Arg(4096);
BENCHMARK(BM_PhaseDensity<invphase::kernels::parallel::phase_density>)->Name("PhaseDensity/parallel")->Arg(256)->Arg(4096);

BENCHMARK_MAIN();
