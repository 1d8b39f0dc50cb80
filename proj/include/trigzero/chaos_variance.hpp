//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/chaos_variance.hpp
//! Chaos-order variance constants of the zero count of the sinc process.
//!
//! For the unit-variance stationary process X with covariance sc and
//! W = sqrt(3) X', the count over [0, L] is
//! (1/sqrt 3) int delta(X)|W| dt, whose order-q chaos has variance
//! L sigma_q^2 + o(L) with
//!   sigma_q^2 = (1/3) int G_q(tau) dtau,
//!   G_q(tau) = sum_{l,l'} w_l w_l' E[H_{q-2l}(Z1) H_{2l}(W1)
//!                                   H_{q-2l'}(Z2) H_{2l'}(W2)],
//! with w_l = d_{q-2l} a_{2l} from ChaosCoefficients.
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "hermite.hpp"

namespace trigzero
{
//! Correlations of (X(0), W(0)) with (X(tau), W(tau)).
PairCorrelations lag_correlations(double tau);

// G_q(tau); zero for odd q
double chaos_integrand(int q, ChaosCoefficients const& coeffs, double tau);

struct ChaosTerm
{
    int q = 0;
    double sigma_sq = 0;
    double tail_cutoff = 0;
    double quadrature_error = 0;
    //! Extrapolated contribution of |tau| beyond the cutoff
    double tail_remainder = 0;
};

inline constexpr double min_tail = 100;

/*!
 * sigma_q^2 by panel quadrature of G_q over [0, tail] (doubled by evenness).
 *
 * Panels end at multiples of pi so the oscillating part of the tail
 * cancels; the remaining C/tau^2 tail is estimated by Richardson
 * extrapolation from the integrals up to the cutoff and half of it.
 */
ChaosTerm sigma_q_squared(int q, ChaosCoefficients const& coeffs, double tail);

struct VarianceConstant
{
    //! partial_sum + truncation_remainder
    double value = 0;
    //! sum of sigma_q^2 for q <= q_max
    double partial_sum = 0;
    //! Sum over q > q_max of q^{-3/2} (c0 + c1/q) fitted to the last two
    //! nonzero terms
    double truncation_remainder = 0;
    //! Local exponent p of the last two nonzero terms, sigma_q^2 ~ q^-p
    double decay_exponent = 0;
    //! Remainder from the free-exponent power law, for comparison
    double free_fit_remainder = 0;
    //! Magnitude of the last nonzero term
    double last_term = 0;
    std::vector<ChaosTerm> terms;
};

/*!
 * Sum of the chaos variance constants.
 *
 * Even-order terms decay only like q^{-3/2}, so the partial sum is
 * completed with a fitted remainder. With fewer than two nonzero terms the
 * remainder is zero.
 */
VarianceConstant total_variance_constant(int q_max, double tail);

}  // namespace trigzero
