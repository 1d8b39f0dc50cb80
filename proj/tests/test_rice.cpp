//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/test_rice.cpp
//---------------------------------------------------------------------------//
#include "trigzero/rice.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>
#include <gtest/gtest.h>

#include "trigzero/errors.hpp"
#include "trigzero/experiments.hpp"
#include "trigzero/quadrature.hpp"

using namespace trigzero;
using std::numbers::pi;

namespace
{
double const sqrt3 = std::sqrt(3.0);

double chop_ratio(int K, double alpha)
{
    double const full = rice_mean(K, {0, K * pi}).value;
    double const win = rice_mean(K, window(K, alpha)).value;
    return (full - win) / std::sqrt(K * pi);
}
}  // namespace

//---------------------------------------------------------------------------//
TEST(RiceMean, single_cosine)
{
    EXPECT_EQ(1.0, rice_mean(1, {0, pi}).value);
    EXPECT_EQ(2.0, rice_mean(1, {0, 2 * pi}).value);
    EXPECT_EQ(0.0, rice_mean(1, {0, 1.0}).value);
}

TEST(RiceMean, leading_order_scaling)
{
    int const K = 300;
    auto const r = rice_mean(K, to_rescaled({0, pi}, K));
    double const ratio = r.value / (K / sqrt3);
    EXPECT_GE(ratio, 0.999);
    EXPECT_LE(ratio, 1.003);
    EXPECT_LT(r.error_estimate, 1e-6 * r.value);
    EXPECT_EQ(K, r.K);
}

TEST(RiceMean, wilkins)
{
    EXPECT_NEAR(201.23 / sqrt3, wilkins_mean(100), 1e-12);
    EXPECT_NEAR(116.18, wilkins_mean(100), 5e-3);
    EXPECT_NEAR(1.0, wilkins_mean(1000000) / (2e6 / sqrt3), 1e-6);
    double const r100 = rice_mean(100, to_rescaled({0, 2 * pi}, 100)).value;
    EXPECT_LT(std::abs(r100 - wilkins_mean(100)), 0.5);
    double const r300 = rice_mean(300, to_rescaled({0, 2 * pi}, 300)).value;
    EXPECT_LT(std::abs(r300 - wilkins_mean(300)), 0.05);
    EXPECT_THROW(wilkins_mean(0), UsageError);
}

TEST(RiceMean, scale_consistency)
{
    int const K = 40;
    Kernel const k = Kernel::cosine_ensemble(K);
    // Same integral on the original axis: rho(K t) K dt over [0, pi]
    auto const b = uniform_breaks(0.0, pi, 1.0 / K);
    double const original = sum_panels(integrate_panels(
        [&](double t) { return K * rice_density(k, K * t); }, b)).value;
    EXPECT_NEAR(original, rice_mean(K, {0, K * pi}).value, 1e-8);
}

TEST(RiceMean, monotone_in_upper_limit)
{
    int const K = 60;
    double previous = 0;
    for (int i = 1; i <= 40; ++i)
    {
        double const x = K * pi * i / 40;
        double const v = rice_mean(K, {0, x}).value;
        EXPECT_GE(v, previous - 1e-9);
        previous = v;
    }
}

TEST(RiceMean, density_tends_to_stationary_value)
{
    Kernel const k = Kernel::cosine_ensemble(500);
    EXPECT_NEAR(1 / (pi * sqrt3), rice_density(k, 400.0), 1e-3);
    EXPECT_NEAR(1 / (pi * sqrt3), rice_density(Kernel::stationary_sinc(), 3.0),
                1e-14);
}

TEST(RiceMean, validation)
{
    EXPECT_THROW(rice_mean(0, {0, 1}), UsageError);
    EXPECT_THROW(rice_mean(5, {2, 1}), UsageError);
    EXPECT_THROW(window(10, 0.5), UsageError);
    EXPECT_THROW(window(10, 0.0), UsageError);
    EXPECT_THROW(rice_variance(1, 0.25), UsageError);
}

//---------------------------------------------------------------------------//
TEST(ConditionalMoment, closed_form_limits)
{
    EXPECT_NEAR(2 / pi, conditional_abs_moment(1, 1, 0), 1e-15);
    EXPECT_NEAR(1.0, conditional_abs_moment(1, 1, 1), 1e-15);
    EXPECT_NEAR(1.0, conditional_abs_moment(1, 1, -1), 1e-15);
    EXPECT_NEAR(6.0, conditional_abs_moment(2, 3, 1), 1e-14);
    EXPECT_THROW(conditional_abs_moment(1, 1, 1.5), UsageError);
}

TEST(ConditionalMoment, monte_carlo)
{
    std::mt19937_64 gen(3);
    std::normal_distribution<double> n;
    for (double rho : {-0.7, 0.2, 0.9})
    {
        double sum = 0, sum2 = 0;
        int const reps = 400000;
        for (int i = 0; i < reps; ++i)
        {
            double const u = n(gen);
            double const v = rho * u + std::sqrt(1 - rho * rho) * n(gen);
            double const x = std::abs(1.5 * u * 0.5 * v);
            sum += x;
            sum2 += x * x;
        }
        double const mean = sum / reps;
        double const se = std::sqrt((sum2 / reps - mean * mean) / reps);
        EXPECT_NEAR(conditional_abs_moment(1.5, 0.5, rho), mean, 4 * se);
    }
}

TEST(PairDensity, finite_off_diagonal)
{
    Kernel const k = Kernel::cosine_ensemble(50);
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> u(3.0, 50 * pi - 3.0);
    for (int i = 0; i < 2000; ++i)
    {
        double const s = u(gen), t = u(gen);
        double const g = rice_pair_covariance_density(k, s, t);
        ASSERT_TRUE(std::isfinite(g)) << s << ' ' << t;
        EXPECT_EQ(g, rice_pair_covariance_density(k, t, s));
    }
}

TEST(PairDensity, diagonal_band_is_continuous)
{
    Kernel const k = Kernel::stationary_sinc();
    double const s = 10.0;
    double const inside = rice_pair_covariance_density(k, s, s + 5e-4);
    double const edge = rice_pair_covariance_density(k, s, s + 1e-3);
    double const out = rice_pair_covariance_density(k, s, s + 1.5e-3);
    EXPECT_NEAR(edge, inside, 1e-4 * (1 + std::abs(edge)));
    EXPECT_NEAR(edge, out, 1e-4 * (1 + std::abs(edge)));
    // Zeros repel: rho_2 -> 0 on the diagonal, so g -> -rho_1^2
    double const rho1 = 1 / (pi * sqrt3);
    EXPECT_NEAR(-rho1 * rho1, rice_pair_covariance_density(k, s, s), 1e-4);
}

TEST(PairDensity, decorrelates_at_large_lag)
{
    Kernel const k = Kernel::stationary_sinc();
    EXPECT_LT(std::abs(rice_pair_covariance_density(k, 5.0, 505.0)), 1e-5);
}

//---------------------------------------------------------------------------//
TEST(RiceVariance, small_degree_against_monte_carlo)
{
    int const K = 50;
    double const alpha = 0.25;
    RiceVariance const rv = rice_variance(K, alpha);
    EXPECT_GT(rv.factorial_moment.value, 0.0);
    EXPECT_GE(rv.variance, 0.0);
    EXPECT_LT(rv.variance_error, 1e-6);
    EXPECT_NEAR(rv.factorial_moment.value,
                rice_second_moment(K, alpha).value, 1e-12);

    ExperimentConfig config;
    config.K_list = {K};
    config.replicates = 100000;
    config.interval = IntervalSpec::parse("window");
    config.alpha = alpha;
    config.seed = 501;
    auto const result = run_campaign(config);
    KSummary const& s = result.summaries.front();
    EXPECT_EQ(0u, s.excluded);
    EXPECT_LT(std::abs(s.variance - rv.variance), 4 * s.variance_se)
        << s.variance << " +- " << s.variance_se << " vs " << rv.variance;
    EXPECT_LT(std::abs(s.mean - rv.mean.value), 4 * s.mean_se);
}

//---------------------------------------------------------------------------//
TEST(WindowChop, decreasing_in_K)
{
    double const r100 = chop_ratio(100, 0.25);
    double const r400 = chop_ratio(400, 0.25);
    double const r1600 = chop_ratio(1600, 0.25);
    EXPECT_GT(r100, r400);
    EXPECT_GT(r400, r1600);
    EXPECT_LT(r1600, 0.05);
}

TEST(WindowChop, slow_quarter_power_decay)
{
    // Boundary length 2 (K pi)^{1/4} at density about 1/(pi sqrt 3) gives a
    // ratio near 0.06 at K = 400; the decay is only (K pi)^{-1/4}
    double const r400 = chop_ratio(400, 0.25);
    EXPECT_GT(r400, 0.05);
    EXPECT_LT(r400, 0.06);
    double const r1600 = chop_ratio(1600, 0.25);
    EXPECT_NEAR(std::pow(4.0, -0.25), r1600 / r400, 0.03);
}

TEST(WindowChop, vanishing_window)
{
    EXPECT_LT(chop_ratio(400, 0.01), 0.01);
}
