//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/stats.hpp
//! Streaming moments and goodness-of-fit statistics.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <span>

namespace trigzero
{
/*!
 * One-pass central moments up to fourth order.
 *
 * Uses the Welford/Terriberry updates; merging two accumulators gives the
 * same result as feeding both streams into one.
 */
class MomentAccumulator
{
  public:
    void add(double x);
    void merge(MomentAccumulator const& other);

    std::size_t count() const { return n_; }
    double mean() const { return mean_; }
    //! Unbiased sample variance
    double variance() const;
    double skewness() const;
    double excess_kurtosis() const;
    double mean_standard_error() const;
    //! Large-sample standard error of the sample variance
    double variance_standard_error() const;

  private:
    std::size_t n_ = 0;
    double mean_ = 0;
    double m2_ = 0;
    double m3_ = 0;
    double m4_ = 0;
};

double normal_cdf(double x);

//! Asymptotic Kolmogorov survival function P(K > lambda).
double kolmogorov_survival(double lambda);

struct KsResult
{
    double statistic = 0;
    double p_value = 0;
};

// Two-sided KS test of a sample against N(0, variance)
KsResult ks_test_normal(std::span<double const> sample, double variance);

// Anderson-Darling A^2 of a sample against N(0, variance)
double anderson_darling_normal(std::span<double const> sample,
                               double variance);

}  // namespace trigzero
