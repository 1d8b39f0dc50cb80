//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/hermite.hpp
//! Probabilists' Hermite polynomials and the Hermite expansions used to
//! write the zero counter as a sum of Wiener chaos components.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <span>
#include <vector>

namespace trigzero
{
//---------------------------------------------------------------------------//
/*!
 * Probabilists' Hermite polynomials H_0..H_max.
 *
 * Evaluation uses the three-term recurrence
 * H_{q+1}(x) = x H_q(x) - q H_{q-1}(x), which is stable in floating point for
 * the orders used here (no stored monomial coefficients).
 */
class HermiteBasis
{
  public:
    explicit HermiteBasis(int max_order);

    int max_order() const { return max_order_; }

    // Value of H_q(x); throws UsageError if q is out of range
    double operator()(int q, double x) const;

    // Fill out[0..max_order] with H_0(x)..H_max(x)
    void eval_all(double x, std::span<double> out) const;

  private:
    int max_order_;
};

// H_q(x) without an order cap
double hermite(int q, double x);

// n! as a double (exact through n = 22)
double factorial(int n);

// n!! with the empty-product convention (-1)!! = 0!! = 1
double double_factorial(int n);

//---------------------------------------------------------------------------//
/*!
 * Hermite coefficients of |y| and of the Dirac mass at 0.
 *
 * - \c abs_coeff[k]: coefficient of H_k in |y| = sum_k a_k H_k(y); zero for
 *   odd k and a_{2l} = sqrt(2/pi) (-1)^{l+1} / (2^l l! (2l-1)) otherwise.
 * - \c dirac_raw[k]: b_k = H_k(0) = (-1)^{k/2} (k-1)!! for even k, 0 for odd.
 * - \c dirac[k]: phi(0) b_k / k!, the actual coefficient of H_k in the
 *   expansion of delta_0.
 *
 * \c fq_grid[q] lists, for l = 0..floor(q/2), the raw products
 * b_{q-2l} a_{2l} that define f_q.
 */
struct ChaosCoefficients
{
    struct Entry
    {
        int ell;
        double weight;
    };

    int q_max = 0;
    std::vector<double> abs_coeff;
    std::vector<double> dirac_raw;
    std::vector<double> dirac;
    std::vector<std::vector<Entry>> fq_grid;

    double a(int k) const { return abs_coeff.at(k); }
    double b(int k) const { return dirac_raw.at(k); }
    double d(int k) const { return dirac.at(k); }
};

ChaosCoefficients chaos_coefficients(int q_max);

// f_q(x, y) = sum_l b_{q-2l} a_{2l} H_{q-2l}(x) H_{2l}(y) with raw b_k
double f_q_eval(ChaosCoefficients const& coeffs, int q, double x, double y);

// Order-q component of delta_0(x)|y|: same sum with normalized d_k.
double crossing_kernel_eval(ChaosCoefficients const& coeffs,
                            int q,
                            double x,
                            double y);

//---------------------------------------------------------------------------//
/*!
 * Cross-correlations between two standard Gaussian pairs (Z1, W1), (Z2, W2)
 * with Z_i independent of W_i.
 *
 * zz = E[Z1 Z2], zw = E[Z1 W2], wz = E[W1 Z2], ww = E[W1 W2].
 */
struct PairCorrelations
{
    double zz = 0;
    double zw = 0;
    double wz = 0;
    double ww = 0;
};

// Largest singular value of the 2x2 cross block; the joint 4x4 correlation
// matrix is PSD iff this is <= 1.
double cross_block_norm(PairCorrelations const& rho);

/*!
 * E[H_n1(Z1) H_n2(W1) H_n3(Z2) H_n4(W2)] by the diagram formula.
 *
 * Throws UsageError if the joint correlation matrix is not PSD.
 */
double mehler_product_expectation(std::array<int, 4> const& orders,
                                  PairCorrelations const& rho);

// Same without the PSD validation, for inner loops with trusted input.
double mehler_product_expectation_unchecked(std::array<int, 4> const& orders,
                                            PairCorrelations const& rho);

}  // namespace trigzero
