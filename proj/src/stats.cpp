//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file stats.cpp
//---------------------------------------------------------------------------//
#include "trigzero/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "trigzero/errors.hpp"

namespace trigzero
{
//---------------------------------------------------------------------------//
void MomentAccumulator::add(double x)
{
    MomentAccumulator one;
    one.n_ = 1;
    one.mean_ = x;
    this->merge(one);
}

void MomentAccumulator::merge(MomentAccumulator const& o)
{
    if (o.n_ == 0)
        return;
    if (n_ == 0)
    {
        *this = o;
        return;
    }
    double const na = static_cast<double>(n_);
    double const nb = static_cast<double>(o.n_);
    double const n = na + nb;
    double const delta = o.mean_ - mean_;
    double const d_n = delta / n;
    double const d_n2 = d_n * d_n;

    double const m4 = m4_ + o.m4_
                      + delta * d_n * d_n2 * na * nb * (na * na - na * nb + nb * nb)
                      + 6 * d_n2 * (na * na * o.m2_ + nb * nb * m2_)
                      + 4 * d_n * (na * o.m3_ - nb * m3_);
    double const m3 = m3_ + o.m3_ + delta * d_n2 * na * nb * (na - nb)
                      + 3 * d_n * (na * o.m2_ - nb * m2_);
    double const m2 = m2_ + o.m2_ + delta * d_n * na * nb;

    mean_ += d_n * nb;
    m2_ = m2;
    m3_ = m3;
    m4_ = m4;
    n_ += o.n_;
}

double MomentAccumulator::variance() const
{
    return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1);
}

double MomentAccumulator::skewness() const
{
    if (n_ < 2 || m2_ == 0)
        return 0.0;
    double const n = static_cast<double>(n_);
    return std::sqrt(n) * m3_ / std::pow(m2_, 1.5);
}

double MomentAccumulator::excess_kurtosis() const
{
    if (n_ < 2 || m2_ == 0)
        return 0.0;
    double const n = static_cast<double>(n_);
    return n * m4_ / (m2_ * m2_) - 3.0;
}

double MomentAccumulator::mean_standard_error() const
{
    return n_ < 2 ? 0.0 : std::sqrt(this->variance() / static_cast<double>(n_));
}

double MomentAccumulator::variance_standard_error() const
{
    if (n_ < 2)
        return 0.0;
    double const n = static_cast<double>(n_);
    double const mu2 = m2_ / n;
    double const mu4 = m4_ / n;
    return std::sqrt(std::max(mu4 - mu2 * mu2, 0.0) / n);
}

//---------------------------------------------------------------------------//
double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double kolmogorov_survival(double lambda)
{
    if (lambda <= 0)
        return 1.0;
    if (lambda < 0.2)
        return 1.0;
    double sum = 0;
    for (int j = 1; j <= 100; ++j)
    {
        double const term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += (j % 2 == 1 ? term : -term);
        if (term < 1e-17)
            break;
    }
    return std::clamp(2 * sum, 0.0, 1.0);
}

KsResult ks_test_normal(std::span<double const> sample, double variance)
{
    if (sample.empty())
        throw UsageError("ks_test_normal: empty sample");
    if (!(variance > 0))
        throw UsageError("ks_test_normal: variance must be positive");
    std::vector<double> x(sample.begin(), sample.end());
    std::sort(x.begin(), x.end());
    double const sd = std::sqrt(variance);
    double const n = static_cast<double>(x.size());
    double d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        double const f = normal_cdf(x[i] / sd);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    double const sn = std::sqrt(n);
    return {d, kolmogorov_survival((sn + 0.12 + 0.11 / sn) * d)};
}

double anderson_darling_normal(std::span<double const> sample, double variance)
{
    if (sample.empty())
        throw UsageError("anderson_darling_normal: empty sample");
    if (!(variance > 0))
        throw UsageError("anderson_darling_normal: variance must be positive");
    std::vector<double> x(sample.begin(), sample.end());
    std::sort(x.begin(), x.end());
    double const sd = std::sqrt(variance);
    auto const n = x.size();
    constexpr double tiny = std::numeric_limits<double>::min();
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        double const lo = std::max(normal_cdf(x[i] / sd), tiny);
        double const hi = std::max(normal_cdf(-x[n - 1 - i] / sd), tiny);
        s += (2.0 * i + 1) * (std::log(lo) + std::log(hi));
    }
    return -static_cast<double>(n) - s / static_cast<double>(n);
}

}  // namespace trigzero
