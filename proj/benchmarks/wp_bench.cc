// Copyright 2026 The qwp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "benchmark/benchmark.h"
#include "qwp/campaigns.h"
#include "qwp/wp.h"

using namespace qwp;

static void wp_superoperator_route(benchmark::State &state) {
    auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    auto c = random_cp_program(d, rng);
    auto f = random_predicate(d, 4, true, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wp(c, f));
    }
}
BENCHMARK(wp_superoperator_route)->DenseRange(2, 6);

static void wp_kraus_route(benchmark::State &state) {
    auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    auto c = random_cp_program(d, rng);
    auto f = random_predicate(d, 4, true, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wp_kraus(c, f));
    }
}
BENCHMARK(wp_kraus_route)->DenseRange(2, 6);

static void positivity_sampling_transpose(benchmark::State &state) {
    auto d = static_cast<std::size_t>(state.range(0));
    ToleranceConfig tol;
    tol.sample_count = 1000;
    auto t = transpose_program(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_positive_sampled(t, tol, 7));
    }
}
BENCHMARK(positivity_sampling_transpose)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void duality_campaign(benchmark::State &state) {
    ToleranceConfig tol;
    tol.sample_count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_duality_campaign({2, 3, 4}, 11, tol));
    }
}
BENCHMARK(duality_campaign)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
