//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/rice.hpp
//! Kac-Rice moment integrals for zero counts.
//!
//! All intervals here are on the rescaled axis [0, K pi].
//---------------------------------------------------------------------------//
#pragma once

#include "covariance.hpp"
#include "zeros.hpp"

namespace trigzero
{
struct RiceResult
{
    double value = 0;
    Interval interval;
    double error_estimate = 0;
    int K = 0;
};

// Boundary-trimmed window [(K pi)^alpha, K pi - (K pi)^alpha]
Interval window(int K, double alpha);

//! First-order Rice density E|X'(t)| given X(t) = 0, times p_t(0).
double rice_density(Kernel const& kernel, double t);

// Expected zeros of the process with the given covariance on the interval
RiceResult rice_mean(Kernel const& kernel, Interval interval);

/*!
 * Expected zeros of the rescaled cosine ensemble.
 *
 * K = 1 is a single random cosine: its zeros are those of cos(t), and the
 * count is returned exactly.
 */
RiceResult rice_mean(int K, Interval interval);

//! E|U V| for centered jointly Gaussian U, V.
double conditional_abs_moment(double sigma_u, double sigma_v, double rho);

/*!
 * Second-order Rice density rho_2(s, t) minus rho_1(s) rho_1(t).
 *
 * Near the diagonal (|t - s| < 1e-3 or an ill-conditioned 2x2 system) the
 * value is extrapolated quadratically from points further out.
 */
double rice_pair_covariance_density(Kernel const& kernel, double s, double t);

struct RiceVariance
{
    RiceResult mean;
    //! E[N(N-1)]
    RiceResult factorial_moment;
    //! E[N(N-1)] + E[N] - E[N]^2
    double variance = 0;
    double variance_error = 0;
};

/*!
 * Second factorial moment and variance over an interval.
 *
 * The double integral is taken over s < t of the covariance density
 * rho_2 - rho_1 rho_1, with tensor Gauss-Legendre panels of unit width. The
 * error estimate compares two rule orders.
 */
RiceVariance rice_variance(Kernel const& kernel, Interval interval);

// Cosine ensemble over the window with exponent alpha in (0, 1/2)
RiceVariance rice_variance(int K, double alpha);

// E[N(N-1)] for the cosine ensemble over the window
RiceResult rice_second_moment(int K, double alpha);

//! Two-term large-K mean on [0, 2 pi]: ((2K + 1) + 0.23) / sqrt(3).
double wilkins_mean(int K);

}  // namespace trigzero
