//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rice.cpp
//---------------------------------------------------------------------------//
#include "trigzero/rice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "trigzero/errors.hpp"
#include "trigzero/quadrature.hpp"

namespace trigzero
{
namespace
{
using std::numbers::pi;

constexpr double band_width = 1e-3;
constexpr double degenerate_det = 1e-12;
constexpr double panel_width = 1.0;

void check_interval(Interval iv, char const* who)
{
    if (!(iv.hi > iv.lo) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
        throw UsageError(std::string(who) + ": empty or non-finite interval");
}

double density_from_diag(KernelValues const& d)
{
    double const cond = d.dst * d.r - d.ds * d.ds;
    return std::sqrt(std::max(cond, 0.0)) / (pi * d.r);
}

//! Returns false when the 2x2 value covariance is too ill-conditioned.
bool pair_density(Kernel const& kernel, double s, double t, double& out)
{
    KernelValues const ss = kernel.eval(s, s);
    KernelValues const tt = kernel.eval(t, t);
    KernelValues const st = kernel.eval(s, t);

    double const a = ss.r;
    double const b = st.r;
    double const c = tt.r;
    double const det = a * c - b * b;
    if (!(det > degenerate_det * a * c))
        return false;

    // U = X'(s), V = X'(t) regressed on (X(s), X(t))
    double const ku0 = ss.ds, ku1 = st.ds;
    double const kv0 = st.dt, kv1 = tt.dt;
    auto quad = [&](double x0, double x1, double y0, double y1) {
        return (c * x0 * y0 - b * (x0 * y1 + x1 * y0) + a * x1 * y1) / det;
    };
    double var_u = ss.dst - quad(ku0, ku1, ku0, ku1);
    double var_v = tt.dst - quad(kv0, kv1, kv0, kv1);
    double const cov_uv = st.dst - quad(ku0, ku1, kv0, kv1);

    double const tol = 1e-9 * std::max({ss.dst, tt.dst, 1e-300});
    if (var_u < -tol || var_v < -tol)
    {
        std::ostringstream os;
        os << "rice: conditional derivative covariance not PSD at (s, t) = ("
           << s << ", " << t << "): variances " << var_u << ", " << var_v;
        throw NumericError(os.str());
    }
    var_u = std::max(var_u, 0.0);
    var_v = std::max(var_v, 0.0);
    double const su = std::sqrt(var_u);
    double const sv = std::sqrt(var_v);
    double rho = (su > 0 && sv > 0) ? cov_uv / (su * sv) : 0.0;
    rho = std::clamp(rho, -1.0, 1.0);

    double const p00 = 1.0 / (2 * pi * std::sqrt(det));
    double const rho2 = conditional_abs_moment(su, sv, rho) * p00;
    out = rho2 - density_from_diag(ss) * density_from_diag(tt);
    return true;
}

double integrate_triangle(Kernel const& kernel,
                          Interval iv,
                          GaussRule const& rule)
{
    double const L = iv.length();
    std::vector<double> const ubreaks = uniform_breaks(0.0, L, panel_width);
    auto const npanels = static_cast<std::ptrdiff_t>(ubreaks.size() - 1);
    std::vector<double> partial(npanels, 0.0);

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t j = 0; j < npanels; ++j)
    {
        double const u0 = ubreaks[j];
        double const hu = 0.5 * (ubreaks[j + 1] - u0);
        CompensatedSum outer;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        {
            double const u = u0 + hu * (rule.nodes[k] + 1);
            double const slen = L - u;
            if (slen <= 0)
                continue;
            auto const ns = static_cast<std::size_t>(
                std::max(1.0, std::ceil(slen / panel_width)));
            double const hs = 0.5 * slen / static_cast<double>(ns);
            CompensatedSum inner;
            for (std::size_t p = 0; p < ns; ++p)
            {
                double const s0 = iv.lo + 2 * hs * static_cast<double>(p);
                for (std::size_t m = 0; m < rule.nodes.size(); ++m)
                {
                    double const s = s0 + hs * (rule.nodes[m] + 1);
                    inner.add(rule.weights[m]
                              * rice_pair_covariance_density(kernel, s, s + u));
                }
            }
            outer.add(rule.weights[k] * hs * inner.value());
        }
        partial[j] = hu * outer.value();
    }

    CompensatedSum total;
    for (double v : partial)
        total.add(v);
    return 2 * total.value();
}
}  // namespace

//---------------------------------------------------------------------------//
Interval window(int K, double alpha)
{
    if (K < 1)
        throw UsageError("window: K must be >= 1");
    if (!(alpha > 0 && alpha < 0.5))
        throw UsageError("window: alpha must lie in (0, 1/2)");
    double const len = K * pi;
    double const cut = std::pow(len, alpha);
    return {cut, len - cut};
}

double rice_density(Kernel const& kernel, double t)
{
    return density_from_diag(kernel.eval(t, t));
}

RiceResult rice_mean(Kernel const& kernel, Interval interval)
{
    check_interval(interval, "rice_mean");
    auto const breaks = uniform_breaks(interval.lo, interval.hi, panel_width);
    auto const panels = integrate_panels(
        [&kernel](double t) { return rice_density(kernel, t); }, breaks);
    QuadResult const q = sum_panels(panels);
    return {q.value, interval, q.error, kernel.degree()};
}

RiceResult rice_mean(int K, Interval interval)
{
    if (K < 1)
        throw UsageError("rice_mean: K must be >= 1");
    check_interval(interval, "rice_mean");
    if (K == 1)
    {
        // zeros of cos(t): pi/2 + j pi
        double const first = std::ceil((interval.lo - pi / 2) / pi);
        double const last = std::floor((interval.hi - pi / 2) / pi);
        return {std::max(0.0, last - first + 1), interval, 0.0, 1};
    }
    return rice_mean(Kernel::cosine_ensemble(K), interval);
}

double conditional_abs_moment(double sigma_u, double sigma_v, double rho)
{
    if (sigma_u < 0 || sigma_v < 0 || !(std::abs(rho) <= 1))
        throw UsageError("conditional_abs_moment: invalid moments");
    return 2 / pi * sigma_u * sigma_v
           * (std::sqrt(1 - rho * rho) + rho * std::asin(rho));
}

double rice_pair_covariance_density(Kernel const& kernel, double s, double t)
{
    if (t < s)
        std::swap(s, t);
    double g = 0;
    if (t - s >= band_width && pair_density(kernel, s, t, g))
        return g;

    double g1 = 0, g2 = 0, g3 = 0;
    if (!pair_density(kernel, s, s + band_width, g1)
        || !pair_density(kernel, s, s + 2 * band_width, g2)
        || !pair_density(kernel, s, s + 3 * band_width, g3))
    {
        std::ostringstream os;
        os << "rice: degenerate pair covariance near s = " << s;
        throw NumericError(os.str());
    }
    double const x = (t - s) / band_width;
    return 0.5 * (x - 2) * (x - 3) * g1 - (x - 1) * (x - 3) * g2
           + 0.5 * (x - 1) * (x - 2) * g3;
}

RiceVariance rice_variance(Kernel const& kernel, Interval interval)
{
    check_interval(interval, "rice_variance");
    RiceVariance out;
    out.mean = rice_mean(kernel, interval);

    double const coarse = integrate_triangle(kernel, interval, gauss_legendre(10));
    double const fine = integrate_triangle(kernel, interval, gauss_legendre(15));
    double const cov_err = std::abs(fine - coarse);

    double const mean = out.mean.value;
    out.factorial_moment.value = fine + mean * mean;
    out.factorial_moment.interval = interval;
    out.factorial_moment.K = kernel.degree();
    out.factorial_moment.error_estimate
        = cov_err + 2 * mean * out.mean.error_estimate;
    out.variance = fine + mean;
    out.variance_error = cov_err + out.mean.error_estimate;
    return out;
}

RiceVariance rice_variance(int K, double alpha)
{
    if (K < 2)
        throw UsageError("rice_variance: K must be >= 2");
    return rice_variance(Kernel::cosine_ensemble(K), window(K, alpha));
}

RiceResult rice_second_moment(int K, double alpha)
{
    return rice_variance(K, alpha).factorial_moment;
}

double wilkins_mean(int K)
{
    if (K < 1)
        throw UsageError("wilkins_mean: K must be >= 1");
    return ((2.0 * K + 1) + 0.23) / std::sqrt(3.0);
}

}  // namespace trigzero
