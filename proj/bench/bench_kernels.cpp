/**************************************************************************
 * bench_kernels.cpp
 *
 * Copyright 2026 The satgeom Authors
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
 **************************************************************************/

#include <benchmark/benchmark.h>

#include "satgeom/covcode.hpp"
#include "satgeom/kernels.hpp"
#include "satgeom/saturate.hpp"

using namespace satgeom;

namespace {

struct Instance {
    std::size_t n, rho;
    std::uint32_t q_sub;
};

// Indexed by benchmark argument.
constexpr Instance kInstances[] = {{3, 2, 2}, {4, 2, 2}, {4, 3, 2}, {5, 2, 2}};

const sat::SaturatingSet &set_for(std::int64_t i) {
    static std::vector<sat::SaturatingSet> cache = [] {
        std::vector<sat::SaturatingSet> v;
        for (auto c : kInstances)
            v.push_back(sat::build_saturating_set(c.n, c.rho, c.q_sub));
        return v;
    }();
    return cache[static_cast<std::size_t>(i)];
}

void label(benchmark::State &state, const sat::SaturatingSet &s) {
    state.SetLabel("PG(" + std::to_string(s.n) + "," + std::to_string(s.tower.big().order()) +
                   ") |S|=" + std::to_string(s.size()));
}

template <auto Kernel>
void BM_coverage(benchmark::State &state) {
    const auto &s = set_for(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(s.tower.big(), s.n, s.points, s.rho + 1));
    label(state, s);
}

template <auto Kernel>
void BM_syndrome(benchmark::State &state) {
    const auto &s = set_for(state.range(0));
    const auto code = cc::parity_check_matrix(s);
    const auto cols = code.columns();
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(code.field, cols));
    label(state, s);
}

}  // namespace

BENCHMARK(BM_coverage<kern::serial::coverage_mark>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coverage<kern::omp::coverage_mark>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_syndrome<kern::serial::syndrome_bfs>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_syndrome<kern::omp::syndrome_bfs>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
