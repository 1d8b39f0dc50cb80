//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/test_zeros.cpp
//---------------------------------------------------------------------------//
#include "trigzero/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>
#include <gtest/gtest.h>

#include "trigzero/errors.hpp"
#include "trigzero/rice.hpp"
#include "trigzero/stats.hpp"

using namespace trigzero;
using std::numbers::pi;

namespace
{
CoefficientVector single_mode(int K, int n)
{
    std::vector<double> a(K, 0.0);
    a[n - 1] = std::sqrt(static_cast<double>(K));
    return make_coefficients(a);
}

double max_abs_on_grid(CoefficientVector const& c)
{
    double m = 0;
    for (int i = 0; i <= 4000; ++i)
    {
        m = std::max(m, std::abs(eval_path(c, 2 * pi * i / 4000,
                                           Axis::original).value));
    }
    return m;
}
}  // namespace

//---------------------------------------------------------------------------//
TEST(Zeros, single_mode_examples)
{
    for (int K : {1, 4, 17})
    {
        auto const low = single_mode(K, 1);
        auto const s = count_zeros_scan(low, {0, pi});
        ASSERT_EQ(1u, s.count);
        EXPECT_NEAR(pi / 2, s.roots[0], 1e-12);
        EXPECT_EQ(1u, count_zeros_eigen(low, {0, pi}).count);

        auto const high = single_mode(K, K);
        EXPECT_EQ(static_cast<std::size_t>(K), count_zeros_scan(high, {0, pi}).count);
        auto const e = count_zeros_eigen(high, {0, pi});
        EXPECT_EQ(static_cast<std::size_t>(K), e.count);
        for (std::size_t j = 0; j < e.count; ++j)
            EXPECT_NEAR((2 * j + 1) * pi / (2 * K), e.roots[j], 1e-10);
    }
}

TEST(Zeros, result_fields)
{
    auto const c = draw_coefficients(12, Ensemble::cosine, 1);
    auto const s = count_zeros_scan(c, {0.5, 2.5});
    EXPECT_EQ(ZeroMethod::scan_bisect, s.method);
    EXPECT_EQ(0.5, s.interval.lo);
    EXPECT_EQ(2.5, s.interval.hi);
    EXPECT_EQ(s.count, s.roots.size());
    EXPECT_TRUE(std::is_sorted(s.roots.begin(), s.roots.end()));
    EXPECT_TRUE(std::adjacent_find(s.roots.begin(), s.roots.end())
                == s.roots.end());
    for (double r : s.roots)
    {
        EXPECT_GE(r, 0.5);
        EXPECT_LE(r, 2.5);
    }
    auto const e = count_zeros_eigen(c, {0.5, 2.5});
    EXPECT_EQ(ZeroMethod::eigen_oracle, e.method);
    EXPECT_EQ("scan_bisect", to_string(ZeroMethod::scan_bisect));
    EXPECT_EQ("eigen_oracle", to_string(ZeroMethod::eigen_oracle));
}

TEST(Zeros, validation)
{
    auto const c = draw_coefficients(10, Ensemble::cosine, 1);
    ScanOptions low;
    low.oversample = 4;
    EXPECT_THROW(count_zeros_scan(c, {0, pi}, low), UsageError);
    EXPECT_THROW(count_zeros_scan(c, {1, 0}), UsageError);
    auto const big = draw_coefficients(max_eigen_degree + 1, Ensemble::cosine, 1);
    EXPECT_THROW(count_zeros_eigen(big, {0, pi}), UsageError);
}

TEST(Zeros, hidden_root_pair)
{
    // (1 - eps) cos t - cos 3t = cos t (4 - eps - 4 cos^2 t): a pair of roots
    // at pi -+ sqrt(eps)/2, far below the grid spacing
    double const eps = 1e-6;
    auto const c = make_coefficients({1 - eps, 0, -1});
    Interval const iv{2.0, 4.2};
    auto const scan = count_zeros_scan(c, iv);
    auto const eig = count_zeros_eigen(c, iv);
    EXPECT_EQ(2u, eig.count);
    ASSERT_EQ(2u, scan.count);
    EXPECT_TRUE(scan.warnings.empty());
    double const delta = std::acos(-std::sqrt(1 - eps / 4));
    EXPECT_NEAR(delta, scan.roots[0], 1e-10);
    EXPECT_NEAR(2 * pi - delta, scan.roots[1], 1e-10);
    for (std::size_t i = 0; i < 2; ++i)
        EXPECT_NEAR(eig.roots[i], scan.roots[i], 1e-8);
}

TEST(Zeros, tangency_is_even_and_audited)
{
    // eps = 0 gives the double root 4 cos t sin^2 t at pi
    auto const c = make_coefficients({1, 0, -1});
    auto const scan = count_zeros_scan(c, {2.0, 4.2});
    EXPECT_EQ(0u, scan.count % 2);
    if (scan.count == 0)
    {
        ASSERT_FALSE(scan.warnings.empty());
        EXPECT_LE(scan.warnings[0].lo, pi);
        EXPECT_GE(scan.warnings[0].hi, pi);
    }
    for (double r : scan.roots)
        EXPECT_NEAR(pi, r, 1e-6);
}

//---------------------------------------------------------------------------//
TEST(Zeros, method_agreement)
{
    for (int K : {5, 10, 20})
    {
        for (std::uint64_t seed = 0; seed < 1000; ++seed)
        {
            auto const c = draw_coefficients(K, Ensemble::cosine, seed);
            auto const scan = count_zeros_scan(c, {0, pi});
            auto const eig = count_zeros_eigen(c, {0, pi});
            ASSERT_EQ(eig.count, scan.count) << "K=" << K << " seed=" << seed;
            for (std::size_t i = 0; i < scan.count; ++i)
                ASSERT_NEAR(eig.roots[i], scan.roots[i], 1e-8);
            EXPECT_TRUE(scan.warnings.empty());
        }
    }
}

TEST(Zeros, stationary_method_agreement)
{
    for (int K : {8, 30})
    {
        for (std::uint64_t seed = 0; seed < 200; ++seed)
        {
            auto const c = draw_coefficients(K, Ensemble::stationary, seed);
            Interval const iv{0.3, 5.9};
            auto const scan = count_zeros_scan(c, iv);
            auto const eig = count_zeros_eigen(c, iv);
            ASSERT_EQ(eig.count, scan.count) << "K=" << K << " seed=" << seed;
            for (std::size_t i = 0; i < scan.count; ++i)
                ASSERT_NEAR(eig.roots[i], scan.roots[i], 1e-8);
        }
    }
}

TEST(Zeros, root_locations_K10)
{
    for (std::uint64_t seed = 0; seed < 10; ++seed)
    {
        auto const c = draw_coefficients(10, Ensemble::cosine, seed, 3);
        auto const scan = count_zeros_scan(c, {0, 2 * pi});
        auto const eig = count_zeros_eigen(c, {0, 2 * pi});
        ASSERT_EQ(eig.count, scan.count);
        for (std::size_t i = 0; i < scan.count; ++i)
            EXPECT_NEAR(eig.roots[i], scan.roots[i], 1e-8);
    }
}

TEST(Zeros, doubling_and_degree_bound)
{
    ScanOptions opts;
    opts.refine_roots = false;
    for (int K : {7, 50, 150})
    {
        for (std::uint64_t r = 0; r < 200; ++r)
        {
            auto const c = draw_coefficients(K, Ensemble::cosine, 44, r);
            auto const half = count_zeros_scan(c, {0, pi}, opts);
            auto const full = count_zeros_scan(c, {0, 2 * pi}, opts);
            ASSERT_EQ(2 * half.count, full.count) << "K=" << K << " r=" << r;
            EXPECT_LE(full.count, static_cast<std::size_t>(2 * K));
            if (K <= 10)
            {
                EXPECT_EQ(2 * count_zeros_eigen(c, {0, pi}).count,
                          count_zeros_eigen(c, {0, 2 * pi}).count);
            }
        }
    }
}

TEST(Zeros, root_residual)
{
    for (int K : {5, 20, 100})
    {
        for (std::uint64_t r = 0; r < 50; ++r)
        {
            auto const c = draw_coefficients(K, Ensemble::cosine, 8, r);
            double const scale = max_abs_on_grid(c);
            for (double root : count_zeros_scan(c, {0, 2 * pi}).roots)
            {
                EXPECT_LT(std::abs(eval_path(c, root, Axis::original).value),
                          1e-9 * scale);
            }
        }
    }
}

TEST(Zeros, partition_additivity)
{
    for (std::uint64_t r = 0; r < 100; ++r)
    {
        auto const c = draw_coefficients(60, Ensemble::cosine, 2, r);
        ScanOptions opts;
        opts.refine_roots = false;
        auto const whole = count_zeros_scan(c, {0, pi}, opts).count;
        auto const left = count_zeros_scan(c, {0, 1.1}, opts).count;
        auto const right = count_zeros_scan(c, {1.1, pi}, opts).count;
        EXPECT_EQ(whole, left + right);
    }
}

TEST(Zeros, refine_flag_keeps_counts)
{
    ScanOptions coarse;
    coarse.refine_roots = false;
    for (std::uint64_t r = 0; r < 50; ++r)
    {
        auto const c = draw_coefficients(80, Ensemble::cosine, 6, r);
        EXPECT_EQ(count_zeros_scan(c, {0, pi}).count,
                  count_zeros_scan(c, {0, pi}, coarse).count);
    }
}

TEST(Zeros, monte_carlo_mean_matches_rice)
{
    int const K = 100;
    MomentAccumulator acc;
    ScanOptions opts;
    opts.refine_roots = false;
    for (std::uint64_t r = 0; r < 2000; ++r)
    {
        auto const c = draw_coefficients(K, Ensemble::cosine, 123, r);
        acc.add(static_cast<double>(count_zeros_scan(c, {0, pi}, opts).count));
    }
    double const rice = rice_mean(K, {0, K * pi}).value;
    EXPECT_LT(std::abs(acc.mean() - rice), 4 * acc.mean_standard_error())
        << acc.mean() << " vs " << rice;
}

TEST(Zeros, axis_helpers)
{
    Interval const o{0.25, 1.5};
    auto const r = to_rescaled(o, 8);
    EXPECT_EQ(2.0, r.lo);
    EXPECT_EQ(12.0, r.hi);
    auto const back = to_original(r, 8);
    EXPECT_EQ(o.lo, back.lo);
    EXPECT_EQ(o.hi, back.hi);
}
