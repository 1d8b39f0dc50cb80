//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chaos_variance.cpp
//---------------------------------------------------------------------------//
#include "trigzero/chaos_variance.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "trigzero/covariance.hpp"
#include "trigzero/errors.hpp"
#include "trigzero/quadrature.hpp"

namespace trigzero
{
namespace
{
using std::numbers::pi;

constexpr int max_chaos_order = 40;

//! Powers 0..n of each correlation.
struct PowerTable
{
    std::array<std::array<double, max_chaos_order + 1>, 4> p;

    PowerTable(PairCorrelations const& rho, int n)
    {
        double const base[4] = {rho.zz, rho.zw, rho.wz, rho.ww};
        for (int i = 0; i < 4; ++i)
        {
            p[i][0] = 1.0;
            for (int k = 1; k <= n; ++k)
                p[i][k] = p[i][k - 1] * base[i];
        }
    }
};

// Diagram sum using precomputed powers and 1/m! factors
double diagram(int n1,
               int n2,
               int n3,
               int n4,
               PowerTable const& pw,
               std::array<double, max_chaos_order + 1> const& inv_fact)
{
    double sum = 0;
    for (int m1 = 0; m1 <= std::min(n1, n3); ++m1)
    {
        int const m2 = n1 - m1;
        int const m3 = n3 - m1;
        int const m4 = n2 - m3;
        if (m4 < 0 || m2 + m4 != n4)
            continue;
        sum += inv_fact[m1] * inv_fact[m2] * inv_fact[m3] * inv_fact[m4]
               * pw.p[0][m1] * pw.p[1][m2] * pw.p[2][m3] * pw.p[3][m4];
    }
    return sum * factorial(n1) * factorial(n2) * factorial(n3)
           * factorial(n4);
}

std::array<double, max_chaos_order + 1> const& inverse_factorials()
{
    static auto const table = [] {
        std::array<double, max_chaos_order + 1> t{};
        for (int i = 0; i <= max_chaos_order; ++i)
            t[i] = 1.0 / factorial(i);
        return t;
    }();
    return table;
}

bool has_weight(int q, ChaosCoefficients const& coeffs)
{
    for (int ell = 0; ell <= q / 2; ++ell)
    {
        if (coeffs.d(q - 2 * ell) * coeffs.a(2 * ell) != 0.0)
            return true;
    }
    return false;
}

// sum_{m >= m0} m^{-p} by Euler-Maclaurin
double zeta_tail(double m0, double p)
{
    double const f = std::pow(m0, -p);
    return std::pow(m0, 1 - p) / (p - 1) + 0.5 * f + p * f / (12 * m0)
           - p * (p + 1) * (p + 2) * f / (720 * m0 * m0 * m0);
}
}  // namespace

//---------------------------------------------------------------------------//
PairCorrelations lag_correlations(double tau)
{
    ProfileDerivs const s = sinc_derivs(tau);
    double const r3 = std::sqrt(3.0);
    return {s.c, r3 * s.d1, -r3 * s.d1, -3 * s.d2};
}

double chaos_integrand(int q, ChaosCoefficients const& coeffs, double tau)
{
    if (q < 0 || q > coeffs.q_max)
        throw UsageError("chaos_integrand: order " + std::to_string(q)
                         + " outside chaos table");
    if (q > max_chaos_order)
        throw UsageError("chaos_integrand: order above "
                         + std::to_string(max_chaos_order));
    if (q % 2 != 0)
        return 0.0;

    PowerTable const pw(lag_correlations(tau), q);
    auto const& inv_fact = inverse_factorials();
    double sum = 0;
    for (int l = 0; l <= q / 2; ++l)
    {
        double const wl = coeffs.d(q - 2 * l) * coeffs.a(2 * l);
        for (int lp = 0; lp <= q / 2; ++lp)
        {
            double const wlp = coeffs.d(q - 2 * lp) * coeffs.a(2 * lp);
            sum += wl * wlp
                   * diagram(q - 2 * l, 2 * l, q - 2 * lp, 2 * lp, pw,
                             inv_fact);
        }
    }
    return sum;
}

ChaosTerm sigma_q_squared(int q, ChaosCoefficients const& coeffs, double tail)
{
    if (q < 1)
        throw UsageError("sigma_q_squared: q must be >= 1");
    if (q > coeffs.q_max)
        throw UsageError("sigma_q_squared: q exceeds the chaos table");
    if (!(tail >= min_tail))
        throw UsageError("sigma_q_squared: tail cutoff must be >= 100");

    auto const n = static_cast<std::size_t>(std::floor(tail / pi));
    ChaosTerm term;
    term.q = q;
    term.tail_cutoff = static_cast<double>(n) * pi;
    if (!has_weight(q, coeffs))
        return term;

    std::vector<double> breaks(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        breaks[i] = static_cast<double>(i) * pi;

    auto const panels = integrate_panels(
        [&](double tau) { return chaos_integrand(q, coeffs, tau); },
        breaks,
        1e-10,
        1e-18);

    std::size_t const half = n / 2;
    CompensatedSum full, head, err;
    for (std::size_t i = 0; i < panels.size(); ++i)
    {
        full.add(panels[i].value);
        if (i < half)
            head.add(panels[i].value);
        err.add(std::abs(panels[i].error));
    }
    double const t_full = term.tail_cutoff;
    double const t_half = static_cast<double>(half) * pi;
    // I(inf) - I(T) = C / T
    double const c_fit = (full.value() - head.value())
                         / (1 / t_half - 1 / t_full);
    double const remainder = c_fit / t_full;

    term.sigma_sq = 2.0 / 3.0 * (full.value() + remainder);
    term.tail_remainder = 2.0 / 3.0 * remainder;
    term.quadrature_error = 2.0 / 3.0 * err.value();
    return term;
}

VarianceConstant total_variance_constant(int q_max, double tail)
{
    if (q_max < 1)
        throw UsageError("total_variance_constant: q_max must be >= 1");
    ChaosCoefficients const coeffs = chaos_coefficients(q_max);

    VarianceConstant out;
    CompensatedSum sum;
    std::vector<ChaosTerm const*> nonzero;
    out.terms.reserve(q_max);
    for (int q = 1; q <= q_max; ++q)
    {
        out.terms.push_back(sigma_q_squared(q, coeffs, tail));
        sum.add(out.terms.back().sigma_sq);
    }
    for (auto const& t : out.terms)
    {
        if (t.sigma_sq != 0.0)
            nonzero.push_back(&t);
    }
    out.partial_sum = sum.value();
    if (!nonzero.empty())
        out.last_term = std::abs(nonzero.back()->sigma_sq);

    if (nonzero.size() >= 2)
    {
        ChaosTerm const& lo = *nonzero[nonzero.size() - 2];
        ChaosTerm const& hi = *nonzero.back();
        double const qlo = lo.q;
        double const qhi = hi.q;
        double const m0 = hi.q / 2 + 1;
        if (lo.sigma_sq > 0 && hi.sigma_sq > 0)
        {
            double const p = std::log(lo.sigma_sq / hi.sigma_sq)
                             / std::log(qhi / qlo);
            out.decay_exponent = p;
            if (p > 1)
            {
                double const c = hi.sigma_sq * std::pow(qhi, p);
                out.free_fit_remainder = c * std::pow(2.0, -p)
                                         * zeta_tail(m0, p);
            }
        }

        // sigma_q^2 = q^{-3/2} (c0 + c1 / q) through the last two terms
        double const y_lo = lo.sigma_sq * std::pow(qlo, 1.5);
        double const y_hi = hi.sigma_sq * std::pow(qhi, 1.5);
        double const c1 = (y_hi - y_lo) / (1 / qhi - 1 / qlo);
        double const c0 = y_hi - c1 / qhi;
        out.truncation_remainder = c0 * std::pow(2.0, -1.5)
                                       * zeta_tail(m0, 1.5)
                                   + c1 * std::pow(2.0, -2.5)
                                         * zeta_tail(m0, 2.5);
    }
    out.value = out.partial_sum + out.truncation_remainder;
    return out;
}

}  // namespace trigzero
