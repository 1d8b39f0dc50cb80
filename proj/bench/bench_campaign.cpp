//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bench/bench_campaign.cpp
//! Serial reference kernels against their OpenMP counterparts.
//---------------------------------------------------------------------------//
#include <benchmark/benchmark.h>
#include <cmath>
#include <numbers>
#include <vector>

#include "trigzero/experiments.hpp"
#include "trigzero/quadrature.hpp"
#include "trigzero/rice.hpp"
#include "trigzero/sampling.hpp"

using namespace trigzero;

namespace
{
ExperimentConfig bench_config(int K)
{
    ExperimentConfig c;
    c.K_list = {K};
    c.replicates = 64;
    c.interval = IntervalSpec::parse("0:pi");
    c.seed = 1;
    return c;
}

void BM_campaign_serial(benchmark::State& state)
{
    auto const config = bench_config(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_campaign_serial(config));
    state.SetItemsProcessed(state.iterations() * config.replicates);
}

void BM_campaign_parallel(benchmark::State& state)
{
    auto const config = bench_config(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_campaign(config));
    state.SetItemsProcessed(state.iterations() * config.replicates);
}

std::vector<double> grid(std::size_t n)
{
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i)
        t[i] = 2 * std::numbers::pi * i / n;
    return t;
}

void BM_eval_grid_serial(benchmark::State& state)
{
    auto const c = draw_coefficients(static_cast<int>(state.range(0)),
                                     Ensemble::stationary, 2);
    auto const t = grid(16 * 2 * c.K);
    std::vector<double> v(t.size());
    for (auto _ : state)
    {
        eval_grid_serial(c, t, v);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_eval_grid_parallel(benchmark::State& state)
{
    auto const c = draw_coefficients(static_cast<int>(state.range(0)),
                                     Ensemble::stationary, 2);
    auto const t = grid(16 * 2 * c.K);
    std::vector<double> v(t.size());
    for (auto _ : state)
    {
        eval_grid(c, t, v);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_rice_panels_serial(benchmark::State& state)
{
    int const K = static_cast<int>(state.range(0));
    Kernel const k = Kernel::cosine_ensemble(K);
    auto const b = uniform_breaks(0, K * std::numbers::pi, 1.0);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(integrate_panels_serial(
            [&k](double t) { return rice_density(k, t); }, b));
    }
}

void BM_rice_panels_parallel(benchmark::State& state)
{
    int const K = static_cast<int>(state.range(0));
    Kernel const k = Kernel::cosine_ensemble(K);
    auto const b = uniform_breaks(0, K * std::numbers::pi, 1.0);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(integrate_panels(
            [&k](double t) { return rice_density(k, t); }, b));
    }
}
}  // namespace

BENCHMARK(BM_campaign_serial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_campaign_parallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eval_grid_serial)->Arg(400)->Arg(1600);
BENCHMARK(BM_eval_grid_parallel)->Arg(400)->Arg(1600);
BENCHMARK(BM_rice_panels_serial)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rice_panels_parallel)->Arg(300)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
