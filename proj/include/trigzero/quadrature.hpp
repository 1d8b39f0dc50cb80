//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/quadrature.hpp
//! Panelled Gauss quadrature with order-independent reduction.
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace trigzero
{
//! Neumaier-compensated running sum.
class CompensatedSum
{
  public:
    void add(double x);
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0;
    double comp_ = 0;
};

struct QuadResult
{
    double value = 0;
    double error = 0;
};

struct PanelResult
{
    double lo = 0;
    double hi = 0;
    double value = 0;
    double error = 0;
    //! Integral of |f| over the panel
    double magnitude = 0;
};

using Integrand = std::function<double(double)>;

// Breakpoints lo = x_0 < ... < x_n = hi with spacing at most width
std::vector<double> uniform_breaks(double lo, double hi, double width);

/*!
 * Adaptive Gauss-Kronrod on each panel between consecutive breakpoints.
 *
 * Panels run in parallel; the integrand must be safe to call concurrently.
 * Results are stored by panel index so the sum does not depend on
 * scheduling. Throws NumericError naming the worst panel if any panel's
 * error estimate exceeds \c rel_tol times its magnitude (with an absolute
 * floor of \c abs_tol).
 */
std::vector<PanelResult> integrate_panels(Integrand const& f,
                                          std::span<double const> breaks,
                                          double rel_tol = 1e-10,
                                          double abs_tol = 1e-14);

std::vector<PanelResult>
integrate_panels_serial(Integrand const& f,
                        std::span<double const> breaks,
                        double rel_tol = 1e-10,
                        double abs_tol = 1e-14);

// Compensated sum of panel values and errors, in index order
QuadResult sum_panels(std::span<PanelResult const> panels);

//---------------------------------------------------------------------------//
//! Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Supported orders: 7, 10, 15, 20
GaussRule gauss_legendre(int order);

}  // namespace trigzero
