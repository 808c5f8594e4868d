/*
   Copyright 2026 The pfactor Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference vs OpenMP kernel for each parallel code path.

#include <benchmark/benchmark.h>

#include "pfactor/appendix.hpp"
#include "pfactor/measure.hpp"
#include "pfactor/pythagoras.hpp"
#include "pfactor/random.hpp"

namespace {

using namespace pfactor;

Execution exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "openmp"); }

void BM_MonteCarloMeasure(benchmark::State& state) {
    Rng rng(11);
    auto s = hexagram_set(random_subspace<double>(6, 2, rng), 1.0);
    s.sample_count = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(monte_carlo_measure(s, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
    label(state);
}
BENCHMARK(BM_MonteCarloMeasure)->ArgsProduct({{0, 1}, {100'000, 1'000'000}})->Unit(benchmark::kMillisecond);

void BM_ResampledProjection(benchmark::State& state) {
    Rng rng(12);
    const auto v = random_subspace<double>(5, 2, rng);
    const auto w = random_subspace<double>(5, 3, rng);
    auto s = ball_set(v, 1.0);
    s.sample_count = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(resampled_projected_measure(s, w, 5, exec_of(state)));
    }
    label(state);
}
BENCHMARK(BM_ResampledProjection)->ArgsProduct({{0, 1}, {1'000'000}})->Unit(benchmark::kMillisecond);

template <Scalar T>
void BM_CoordinateTerms(benchmark::State& state) {
    Rng rng(13);
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto v = random_subspace<T>(n, n / 2, rng);
    const CoordinateFamily<T> family(random_unitary<T>(n, rng), n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coordinate_terms(v, family, TermDirection::VOntoMember, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(family.members().size()));
    label(state);
}
BENCHMARK(BM_CoordinateTerms<double>)->ArgsProduct({{0, 1}, {8, 12}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoordinateTerms<Complex>)->ArgsProduct({{0, 1}, {8, 12}})->Unit(benchmark::kMillisecond);

template <Scalar T>
void BM_AppendixSuite(benchmark::State& state) {
    const auto trials = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_appendix_suite<T>(trials, 3, 8, kAppendixTolerance, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
    label(state);
}
BENCHMARK(BM_AppendixSuite<double>)->ArgsProduct({{0, 1}, {100}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AppendixSuite<Complex>)->ArgsProduct({{0, 1}, {100}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
