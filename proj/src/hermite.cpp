//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file hermite.cpp
//---------------------------------------------------------------------------//
#include "trigzero/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "trigzero/errors.hpp"

namespace trigzero
{
namespace
{
constexpr int max_factorial = 170;

std::array<double, max_factorial + 1> const& factorial_table()
{
    static auto const table = [] {
        std::array<double, max_factorial + 1> t{};
        t[0] = 1.0;
        for (int i = 1; i <= max_factorial; ++i)
            t[i] = t[i - 1] * i;
        return t;
    }();
    return table;
}
}  // namespace

//---------------------------------------------------------------------------//
double factorial(int n)
{
    if (n < 0 || n > max_factorial)
        throw UsageError("factorial: argument out of range: "
                         + std::to_string(n));
    return factorial_table()[n];
}

double double_factorial(int n)
{
    if (n < -1)
        throw UsageError("double_factorial: argument below -1");
    double r = 1.0;
    for (int j = n; j > 1; j -= 2)
        r *= j;
    return r;
}

double hermite(int q, double x)
{
    if (q < 0)
        throw UsageError("hermite: negative order");
    if (q == 0)
        return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int k = 1; k < q; ++k)
    {
        double next = x * cur - k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

//---------------------------------------------------------------------------//
HermiteBasis::HermiteBasis(int max_order) : max_order_(max_order)
{
    if (max_order < 0)
        throw UsageError("HermiteBasis: max_order must be >= 0");
}

double HermiteBasis::operator()(int q, double x) const
{
    if (q < 0 || q > max_order_)
        throw UsageError("HermiteBasis: order " + std::to_string(q)
                         + " exceeds max_order "
                         + std::to_string(max_order_));
    return hermite(q, x);
}

void HermiteBasis::eval_all(double x, std::span<double> out) const
{
    if (out.size() < static_cast<std::size_t>(max_order_ + 1))
        throw UsageError("HermiteBasis::eval_all: output span too small");
    out[0] = 1.0;
    if (max_order_ >= 1)
        out[1] = x;
    for (int k = 1; k < max_order_; ++k)
        out[k + 1] = x * out[k] - k * out[k - 1];
}

//---------------------------------------------------------------------------//
ChaosCoefficients chaos_coefficients(int q_max)
{
    if (q_max < 0)
        throw UsageError("chaos_coefficients: q_max must be >= 0");

    ChaosCoefficients c;
    c.q_max = q_max;
    c.abs_coeff.assign(q_max + 1, 0.0);
    c.dirac_raw.assign(q_max + 1, 0.0);
    c.dirac.assign(q_max + 1, 0.0);

    double const sqrt_2_over_pi = std::sqrt(2.0 / std::numbers::pi);
    double const phi0 = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    for (int k = 0; k <= q_max; k += 2)
    {
        int const ell = k / 2;
        double const sign_a = (ell % 2 == 0) ? -1.0 : 1.0;
        c.abs_coeff[k] = sqrt_2_over_pi * sign_a
                         / (std::ldexp(factorial(ell), ell) * (2 * ell - 1));

        double const sign_b = (ell % 2 == 0) ? 1.0 : -1.0;
        c.dirac_raw[k] = sign_b * double_factorial(k - 1);
        c.dirac[k] = phi0 * c.dirac_raw[k] / factorial(k);
    }

    c.fq_grid.resize(q_max + 1);
    for (int q = 0; q <= q_max; ++q)
    {
        for (int ell = 0; ell <= q / 2; ++ell)
        {
            c.fq_grid[q].push_back(
                {ell, c.dirac_raw[q - 2 * ell] * c.abs_coeff[2 * ell]});
        }
    }
    return c;
}

namespace
{
template<class WeightFn>
double sum_fq_terms(
    ChaosCoefficients const& coeffs, int q, double x, double y, WeightFn w)
{
    if (q < 0 || q > coeffs.q_max)
        throw UsageError("f_q: order " + std::to_string(q)
                         + " exceeds q_max " + std::to_string(coeffs.q_max));
    std::vector<double> hx(q + 1), hy(q + 1);
    HermiteBasis basis(q);
    basis.eval_all(x, hx);
    basis.eval_all(y, hy);
    double sum = 0;
    for (int ell = 0; ell <= q / 2; ++ell)
        sum += w(q - 2 * ell, 2 * ell) * hx[q - 2 * ell] * hy[2 * ell];
    return sum;
}
}  // namespace

double f_q_eval(ChaosCoefficients const& coeffs, int q, double x, double y)
{
    return sum_fq_terms(coeffs, q, x, y, [&](int k, int two_ell) {
        return coeffs.dirac_raw[k] * coeffs.abs_coeff[two_ell];
    });
}

double crossing_kernel_eval(ChaosCoefficients const& coeffs,
                            int q,
                            double x,
                            double y)
{
    return sum_fq_terms(coeffs, q, x, y, [&](int k, int two_ell) {
        return coeffs.dirac[k] * coeffs.abs_coeff[two_ell];
    });
}

//---------------------------------------------------------------------------//
double cross_block_norm(PairCorrelations const& rho)
{
    // Singular values of [[zz, zw], [wz, ww]] from the trace and determinant
    // of its Gram matrix.
    double const fro2 = rho.zz * rho.zz + rho.zw * rho.zw + rho.wz * rho.wz
                        + rho.ww * rho.ww;
    double const det = rho.zz * rho.ww - rho.zw * rho.wz;
    double const disc = std::max(0.0, fro2 * fro2 - 4 * det * det);
    return std::sqrt(0.5 * (fro2 + std::sqrt(disc)));
}

double mehler_product_expectation_unchecked(std::array<int, 4> const& orders,
                                            PairCorrelations const& rho)
{
    auto const [n1, n2, n3, n4] = orders;
    if ((n1 + n2 + n3 + n4) % 2 != 0)
        return 0.0;

    // m1 + m2 = n1, m3 + m4 = n2, m1 + m3 = n3, m2 + m4 = n4: one free index.
    auto const& fact = factorial_table();
    double const prefactor = fact[n1] * fact[n2] * fact[n3] * fact[n4];
    double sum = 0;
    for (int m1 = 0; m1 <= std::min(n1, n3); ++m1)
    {
        int const m2 = n1 - m1;
        int const m3 = n3 - m1;
        int const m4 = n2 - m3;
        if (m4 < 0 || m2 + m4 != n4)
            continue;
        double term = prefactor / (fact[m1] * fact[m2] * fact[m3] * fact[m4]);
        term *= std::pow(rho.zz, m1) * std::pow(rho.zw, m2)
                * std::pow(rho.wz, m3) * std::pow(rho.ww, m4);
        sum += term;
    }
    return sum;
}

double mehler_product_expectation(std::array<int, 4> const& orders,
                                  PairCorrelations const& rho)
{
    for (int n : orders)
    {
        if (n < 0 || n > max_factorial)
            throw UsageError("mehler_product_expectation: order out of range");
    }
    if (!(cross_block_norm(rho) <= 1.0 + 1e-12))
        throw UsageError(
            "mehler_product_expectation: correlation matrix is not "
            "positive semidefinite");
    return mehler_product_expectation_unchecked(orders, rho);
}

}  // namespace trigzero
