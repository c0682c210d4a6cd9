// Copyright 2026 The EJM Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <numbers>

#include <benchmark/benchmark.h>

#include "ejm/analysis.hpp"
#include "ejm/bases.hpp"
#include "ejm/network.hpp"
#include "ejm/optimize.hpp"

using namespace ejm;
using std::numbers::pi;

namespace {

const bases::EjmParams kParams(0.85, 0.3, 0.8, 0.5);

void BM_VerifySerial(benchmark::State &state) {
    const auto fam = bases::n_qubit_ejm(kParams, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analysis::reference::verify_orthonormal_complete(fam));
    }
}

void BM_VerifyParallel(benchmark::State &state) {
    const auto fam = bases::n_qubit_ejm(kParams, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analysis::verify_orthonormal_complete(fam));
    }
}

void BM_ReductionsSerial(benchmark::State &state) {
    const auto fam = bases::n_qubit_ejm(kParams, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analysis::reference::reduced_bloch_vectors(fam));
    }
}

void BM_ReductionsParallel(benchmark::State &state) {
    const auto fam = bases::n_qubit_ejm(kParams, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analysis::reduced_bloch_vectors(fam));
    }
}

void BM_BruteForceSerial(benchmark::State &state) {
    const auto s = network::StarScenario::standard(kParams);
    for (auto _ : state) {
        benchmark::DoNotOptimize(network::reference::correlations_bruteforce(s));
    }
}

void BM_BruteForceParallel(benchmark::State &state) {
    const auto s = network::StarScenario::standard(kParams);
    for (auto _ : state) {
        benchmark::DoNotOptimize(network::correlations_bruteforce(s));
    }
}

optimize::SweepSpec sweep_spec() {
    return {optimize::Param::phi, 0.0, pi, 2000, bases::EjmParams(1.0, 0.0, pi / 2, pi / 4)};
}

void BM_SweepSerial(benchmark::State &state) {
    const auto spec = sweep_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize::reference::sweep(spec));
    }
}

void BM_SweepParallel(benchmark::State &state) {
    const auto spec = sweep_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize::sweep(spec));
    }
}

} // namespace

BENCHMARK(BM_VerifySerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReductionsSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReductionsParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
