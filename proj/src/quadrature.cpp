//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadrature.cpp
//---------------------------------------------------------------------------//
#include "trigzero/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "trigzero/errors.hpp"

namespace trigzero
{
namespace
{
constexpr unsigned kronrod_depth = 12;

PanelResult integrate_one(Integrand const& f, double lo, double hi, double tol)
{
    using boost::math::quadrature::gauss_kronrod;
    PanelResult p;
    p.lo = lo;
    p.hi = hi;
    double err = 0;
    double l1 = 0;
    p.value = gauss_kronrod<double, 31>::integrate(
        f, lo, hi, kronrod_depth, tol, &err, &l1);
    // boost reports |K - G| on the reference interval
    p.error = err * 0.5 * (hi - lo);
    p.magnitude = l1;
    return p;
}

void check_panels(std::span<PanelResult const> panels,
                  double rel_tol,
                  double abs_tol)
{
    PanelResult const* worst = nullptr;
    double worst_excess = 1.0;
    for (auto const& p : panels)
    {
        double const allowed
            = std::max(rel_tol * 1e3 * p.magnitude, abs_tol);
        if (!std::isfinite(p.value) || !std::isfinite(p.error))
        {
            worst = &p;
            break;
        }
        double const excess = p.error / allowed;
        if (excess > worst_excess)
        {
            worst_excess = excess;
            worst = &p;
        }
    }
    if (worst)
    {
        std::ostringstream os;
        os << "quadrature did not converge on panel [" << worst->lo << ", "
           << worst->hi << "]: value " << worst->value << ", error "
           << worst->error;
        throw NumericError(os.str());
    }
}

template<int N>
GaussRule expand_rule()
{
    using rule = boost::math::quadrature::gauss<double, N>;
    GaussRule r;
    auto const& x = rule::abscissa();
    auto const& w = rule::weights();
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        if (x[i] == 0.0)
        {
            r.nodes.push_back(0.0);
            r.weights.push_back(w[i]);
            continue;
        }
        r.nodes.push_back(-x[i]);
        r.weights.push_back(w[i]);
        r.nodes.push_back(x[i]);
        r.weights.push_back(w[i]);
    }
    return r;
}
}  // namespace

//---------------------------------------------------------------------------//
void CompensatedSum::add(double x)
{
    double const t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

std::vector<double> uniform_breaks(double lo, double hi, double width)
{
    if (!(hi > lo) || !(width > 0))
        throw UsageError("uniform_breaks: need lo < hi and width > 0");
    auto const n = static_cast<std::size_t>(std::ceil((hi - lo) / width));
    std::vector<double> b(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        b[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    b.back() = hi;
    return b;
}

std::vector<PanelResult> integrate_panels(Integrand const& f,
                                          std::span<double const> breaks,
                                          double rel_tol,
                                          double abs_tol)
{
    if (breaks.size() < 2)
        throw UsageError("integrate_panels: need at least two breakpoints");
    auto const n = static_cast<std::ptrdiff_t>(breaks.size() - 1);
    std::vector<PanelResult> panels(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        panels[i] = integrate_one(f, breaks[i], breaks[i + 1], rel_tol);
    check_panels(panels, rel_tol, abs_tol);
    return panels;
}

std::vector<PanelResult>
integrate_panels_serial(Integrand const& f,
                        std::span<double const> breaks,
                        double rel_tol,
                        double abs_tol)
{
    if (breaks.size() < 2)
        throw UsageError("integrate_panels: need at least two breakpoints");
    std::vector<PanelResult> panels;
    panels.reserve(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        panels.push_back(integrate_one(f, breaks[i], breaks[i + 1], rel_tol));
    check_panels(panels, rel_tol, abs_tol);
    return panels;
}

QuadResult sum_panels(std::span<PanelResult const> panels)
{
    CompensatedSum v, e;
    for (auto const& p : panels)
    {
        v.add(p.value);
        e.add(std::abs(p.error));
    }
    return {v.value(), e.value()};
}

GaussRule gauss_legendre(int order)
{
    switch (order)
    {
        case 7:
            return expand_rule<7>();
        case 10:
            return expand_rule<10>();
        case 15:
            return expand_rule<15>();
        case 20:
            return expand_rule<20>();
        default:
            throw UsageError("gauss_legendre: unsupported order "
                             + std::to_string(order));
    }
}

}  // namespace trigzero
