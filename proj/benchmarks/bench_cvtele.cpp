// Copyright 2026 The cvtele Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvtele/fidelity.hpp"
#include "cvtele/gaussian_state.hpp"
#include "cvtele/oracle.hpp"
#include "cvtele/scan.hpp"
#include "cvtele/symmetry.hpp"
#include "cvtele/witness.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace cvtele;

const TwoModeState& tmss()
{
    static const TwoModeState state = two_mode_squeezed_state(1.0);
    return state;
}

void BM_MeanFidelity(benchmark::State& bench)
{
    const ChannelParams channel(0.8, 0.6);
    for (auto _ : bench) {
        benchmark::DoNotOptimize(mean_fidelity(tmss(), channel, Gain(1.0)));
    }
}
BENCHMARK(BM_MeanFidelity);

void BM_WitnessReport(benchmark::State& bench)
{
    const ChannelParams channel(0.8, 0.6);
    for (auto _ : bench) {
        benchmark::DoNotOptimize(witness_report(tmss(), channel, Gain(1.0)));
    }
}
BENCHMARK(BM_WitnessReport);

void BM_SymplecticInvariants(benchmark::State& bench)
{
    for (auto _ : bench) {
        benchmark::DoNotOptimize(symplectic_invariants(tmss()));
    }
}
BENCHMARK(BM_SymplecticInvariants);

void BM_Classify(benchmark::State& bench)
{
    const ChannelParams channel(0.8, 0.6);
    for (auto _ : bench) {
        benchmark::DoNotOptimize(classify(tmss(), channel, Gain(1.0)));
    }
}
BENCHMARK(BM_Classify);

void BM_Canonicalize(benchmark::State& bench)
{
    const TwoModeState rotated = local_rotation(tmss(), 0.4, 0.1);
    const ChannelParams channel(0.8, 0.6);
    for (auto _ : bench) {
        benchmark::DoNotOptimize(canonicalize(rotated, channel, Gain(1.2)));
    }
}
BENCHMARK(BM_Canonicalize);

void BM_RegionScan(benchmark::State& bench)
{
    const auto n = static_cast<std::size_t>(bench.range(0));
    for (auto _ : bench) {
        benchmark::DoNotOptimize(region_scan(SymmetricFamilyParams{}, ChannelParams(1.0, 1.0), Gain(1.0), n));
    }
    bench.SetItemsProcessed(bench.iterations() * static_cast<std::int64_t>(n * n));
}
BENCHMARK(BM_RegionScan)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_MaximizeFidelityRatio(benchmark::State& bench)
{
    const ChannelParams channel(0.5, 0.3);
    for (auto _ : bench) {
        benchmark::DoNotOptimize(maximize_fidelity_ratio(tmss(), channel));
    }
}
BENCHMARK(BM_MaximizeFidelityRatio)->Unit(benchmark::kMicrosecond);

void BM_McFidelity(benchmark::State& bench)
{
    const auto n = static_cast<std::size_t>(bench.range(0));
    const ChannelParams channel(0.8, 0.6);
    for (auto _ : bench) {
        benchmark::DoNotOptimize(mc_fidelity(tmss(), channel, Gain(1.0), {0.5, 0.25}, n, 42));
    }
    bench.SetItemsProcessed(bench.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_McFidelity)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_GridOverlap(benchmark::State& bench)
{
    const ChannelParams channel(0.8, 0.6);
    for (auto _ : bench) {
        benchmark::DoNotOptimize(grid_overlap_fidelity(tmss(), channel, Gain(1.0), {0.5, 0.25}));
    }
}
BENCHMARK(BM_GridOverlap)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
