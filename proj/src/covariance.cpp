//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file covariance.cpp
//---------------------------------------------------------------------------//
#include "trigzero/covariance.hpp"

#include <cmath>
#include <numbers>

#include "trigzero/errors.hpp"

namespace trigzero
{
namespace
{
using std::numbers::pi;

// Below this |tau| (after periodic reduction) the Dirichlet quotient loses
// accuracy in its second derivative, so sum the cosines directly.
constexpr double direct_sum_radius = 2.0;

// Series radius for sc and derivatives.
constexpr double sinc_series_radius = 0.5;

ProfileDerivs c_K_direct(int K, double tau)
{
    ProfileDerivs out;
    double const inv_K = 1.0 / K;
    for (int n = 1; n <= K; ++n)
    {
        double const w = n * inv_K;
        double const arg = w * tau;
        double const c = std::cos(arg);
        out.c += c;
        out.d1 -= w * std::sin(arg);
        out.d2 -= w * w * c;
    }
    out.c *= inv_K;
    out.d1 *= inv_K;
    out.d2 *= inv_K;
    return out;
}

// sum_{n=1}^K cos(n x) = (D(x) - 1)/2 with D = sin((K+1/2)x) / sin(x/2)
ProfileDerivs c_K_dirichlet(int K, double x)
{
    double const M = K + 0.5;
    double const u = std::sin(M * x);
    double const du = M * std::cos(M * x);
    double const d2u = -M * M * u;
    double const v = std::sin(0.5 * x);
    double const dv = 0.5 * std::cos(0.5 * x);
    double const d2v = -0.25 * v;

    double const D = u / v;
    double const dD = (du * v - u * dv) / (v * v);
    double const d2D = (d2u * v - u * d2v) / (v * v) - 2 * dv * dD / v;

    double const Kd = K;
    return {(D - 1) / (2 * Kd), dD / (2 * Kd * Kd), d2D / (2 * Kd * Kd * Kd)};
}
}  // namespace

//---------------------------------------------------------------------------//
ProfileDerivs c_K_derivs(int K, double tau)
{
    if (K < 1)
        throw UsageError("c_K: degree must be >= 1");
    // c_K is even with period 2 pi K in tau
    double const x = std::remainder(tau / K, 2 * pi);
    double const tau_red = x * K;
    if (std::abs(tau_red) < direct_sum_radius || std::abs(std::sin(0.5 * x)) < 1e-8)
        return c_K_direct(K, tau_red);
    return c_K_dirichlet(K, x);
}

double c_K(int K, double tau)
{
    return c_K_derivs(K, tau).c;
}

ProfileDerivs sinc_derivs(double x)
{
    if (std::abs(x) < sinc_series_radius)
    {
        // sc(x) = sum_j (-1)^j x^{2j} / (2j+1)!, differentiated termwise
        ProfileDerivs out{1.0, 0.0, 0.0};
        double const x2 = x * x;
        double pow_m2 = 1.0;  // x^{2j-2}
        double inv_fact = 1.0;  // 1/(2j+1)!
        double sign = 1.0;
        for (int j = 1; j <= 12; ++j)
        {
            inv_fact /= (2 * j) * (2 * j + 1);
            sign = -sign;
            out.c += sign * pow_m2 * x2 * inv_fact;
            out.d1 += sign * 2 * j * pow_m2 * x * inv_fact;
            out.d2 += sign * 2 * j * (2 * j - 1) * pow_m2 * inv_fact;
            pow_m2 *= x2;
        }
        return out;
    }
    double const s = std::sin(x);
    double const c = std::cos(x);
    return {s / x, (x * c - s) / (x * x), ((2 - x * x) * s - 2 * x * c) / (x * x * x)};
}

double sinc(double x)
{
    return sinc_derivs(x).c;
}

//---------------------------------------------------------------------------//
std::string to_string(KernelKind kind)
{
    switch (kind)
    {
        case KernelKind::cosine_ensemble:
            return "cosine_ensemble";
        case KernelKind::stationary_sinc:
            return "stationary_sinc";
        case KernelKind::limit_nonstationary:
            return "limit_nonstationary";
        case KernelKind::stationary_finite:
            return "stationary_finite";
    }
    return "unknown";
}

Kernel Kernel::cosine_ensemble(int K)
{
    if (K < 1)
        throw UsageError("Kernel: degree must be >= 1");
    return Kernel(KernelKind::cosine_ensemble, K);
}

Kernel Kernel::stationary_finite(int K)
{
    if (K < 1)
        throw UsageError("Kernel: degree must be >= 1");
    return Kernel(KernelKind::stationary_finite, K);
}

Kernel Kernel::stationary_sinc()
{
    return Kernel(KernelKind::stationary_sinc, 0);
}

Kernel Kernel::limit_nonstationary()
{
    return Kernel(KernelKind::limit_nonstationary, 0);
}

bool Kernel::is_stationary() const
{
    return kind_ == KernelKind::stationary_sinc
           || kind_ == KernelKind::stationary_finite;
}

ProfileDerivs Kernel::profile(double x) const
{
    return K_ > 0 ? c_K_derivs(K_, x) : sinc_derivs(x);
}

KernelValues Kernel::eval(double s, double t) const
{
    auto const f = this->profile(t - s);
    if (this->is_stationary())
    {
        return {f.c, -f.d1, f.d1, -f.d2, f.d2, f.d2};
    }
    auto const g = this->profile(t + s);
    return {0.5 * (f.c + g.c),
            0.5 * (-f.d1 + g.d1),
            0.5 * (f.d1 + g.d1),
            0.5 * (-f.d2 + g.d2),
            0.5 * (f.d2 + g.d2),
            0.5 * (f.d2 + g.d2)};
}

double Kernel::operator()(double s, double t) const
{
    if (this->is_stationary())
        return this->profile(t - s).c;
    return 0.5 * (this->profile(t - s).c + this->profile(t + s).c);
}

double limit_kernel(double s, double t)
{
    return 0.5 * (sinc(t - s) + sinc(t + s));
}

//---------------------------------------------------------------------------//
StandardizedKernel::StandardizedKernel(Kernel base, double tolerance)
    : base_(base), tolerance_(tolerance)
{
}

double StandardizedKernel::variance(double t) const
{
    return base_(t, t);
}

double StandardizedKernel::checked_variance(double t) const
{
    double const var = this->variance(t);
    if (!(var > tolerance_))
        throw DegeneracyError("standardized kernel: variance "
                              + std::to_string(var) + " at t = "
                              + std::to_string(t) + " is not positive");
    return var;
}

double StandardizedKernel::rbar(double s, double t) const
{
    return base_(s, t)
           / std::sqrt(this->checked_variance(s) * this->checked_variance(t));
}

double StandardizedKernel::v_squared(double s) const
{
    double const var = this->checked_variance(s);
    auto const k = base_.eval(s, s);
    return (k.dst - k.dt * k.dt / var) / var;
}

double StandardizedKernel::v(double s) const
{
    return std::sqrt(std::max(0.0, this->v_squared(s)));
}

//---------------------------------------------------------------------------//
BoundsReport kernel_bounds_check(int K, std::span<double const> tau_grid)
{
    BoundsReport report;
    report.K = K;
    // Relative slack for rounding in the boundary case |cos(pi)| = pi/pi.
    constexpr double slack = 1e-12;
    for (double tau : tau_grid)
    {
        if (!(tau > 0) || tau > K * pi * (1 + slack))
            throw UsageError("kernel_bounds_check: tau outside (0, K pi]");
        auto const d = c_K_derivs(K, tau);
        double const b0 = pi / tau;
        double const b1 = pi / tau + pi * pi / (2 * tau * tau);
        ++report.points_checked;
        if (std::abs(d.c) > b0 * (1 + slack))
        {
            report.violation = BoundViolation{tau, "c_K", d.c, b0};
            break;
        }
        if (std::abs(d.d1) > b1 * (1 + slack))
        {
            report.violation = BoundViolation{tau, "c_K'", d.d1, b1};
            break;
        }
    }
    return report;
}

}  // namespace trigzero
