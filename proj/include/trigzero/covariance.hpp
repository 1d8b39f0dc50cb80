//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/covariance.hpp
//! Covariance kernels of the rescaled ensembles and their limits.
//!
//! All arguments live on the rescaled axis [0, K pi]: the polynomial of
//! degree K evaluated at t/K.
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <span>
#include <string>

namespace trigzero
{
//! Value and first two derivatives of a one-dimensional covariance profile.
struct ProfileDerivs
{
    double c = 0;
    double d1 = 0;
    double d2 = 0;
};

// c_K(tau) = (1/K) sum_{n=1}^K cos(n tau / K)
double c_K(int K, double tau);
ProfileDerivs c_K_derivs(int K, double tau);

// Cardinal sine sin(x)/x and its derivatives
double sinc(double x);
ProfileDerivs sinc_derivs(double x);

//---------------------------------------------------------------------------//
enum class KernelKind
{
    cosine_ensemble,      //!< 1/2 (c_K(t-s) + c_K(t+s))
    stationary_sinc,      //!< sc(t-s)
    limit_nonstationary,  //!< 1/2 (sc(t-s) + sc(t+s))
    stationary_finite,    //!< c_K(t-s)
};

std::string to_string(KernelKind kind);

//! r(s,t) and its partial derivatives up to second order.
struct KernelValues
{
    double r = 0;
    double ds = 0;
    double dt = 0;
    double dst = 0;
    double dss = 0;
    double dtt = 0;
};

/*!
 * Covariance surface r(s, t) of one of the four Gaussian processes.
 *
 * Every kind is a sum of a profile evaluated at tau = t - s and, for the
 * non-stationary kinds, at sigma = t + s.
 */
class Kernel
{
  public:
    static Kernel cosine_ensemble(int K);
    static Kernel stationary_finite(int K);
    static Kernel stationary_sinc();
    static Kernel limit_nonstationary();

    KernelKind kind() const { return kind_; }
    //! Degree K, or 0 for the sinc-based limits
    int degree() const { return K_; }
    bool is_stationary() const;

    double operator()(double s, double t) const;
    KernelValues eval(double s, double t) const;

  private:
    Kernel(KernelKind kind, int K) : kind_(kind), K_(K) {}
    ProfileDerivs profile(double x) const;

    KernelKind kind_;
    int K_;
};

// 1/2 (sc(t - s) + sc(t + s))
double limit_kernel(double s, double t);

//---------------------------------------------------------------------------//
/*!
 * Unit-variance normalization of a kernel.
 *
 * For Y with covariance r and V(t)^2 = r(t,t), the standardized process is
 * Y/V with covariance r(s,t)/(V(s)V(t)); its derivative has variance
 * v(s)^2 = (r_st - r_t^2 / r) / r evaluated on the diagonal.
 */
class StandardizedKernel
{
  public:
    explicit StandardizedKernel(Kernel base, double tolerance = 1e-12);

    Kernel const& base() const { return base_; }

    double variance(double t) const;
    double rbar(double s, double t) const;
    double v_squared(double s) const;
    double v(double s) const;

  private:
    double checked_variance(double t) const;

    Kernel base_;
    double tolerance_;
};

//---------------------------------------------------------------------------//
//! First violated decay inequality, if any.
struct BoundViolation
{
    double tau = 0;
    std::string which;
    double value = 0;
    double bound = 0;
};

struct BoundsReport
{
    int K = 0;
    std::size_t points_checked = 0;
    std::optional<BoundViolation> violation;

    bool ok() const { return !violation; }
};

/*!
 * Check |c_K(tau)| <= pi/tau and |c_K'(tau)| <= pi/tau + pi^2/(2 tau^2).
 *
 * tau values must lie in (0, K pi].
 */
BoundsReport kernel_bounds_check(int K, std::span<double const> tau_grid);

//! Lower cutoff for derivative-variance positivity of the standardized
//! cosine ensemble, found by inspection of v_K.
inline constexpr double default_t0 = 2.0;

}  // namespace trigzero
