//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file zeros.cpp
//---------------------------------------------------------------------------//
#include "trigzero/zeros.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "trigzero/errors.hpp"

namespace trigzero
{
namespace
{
using std::numbers::pi;

//! Unnormalized sum_{n} a_n cos(n t) + b_n sin(n t); scaling is irrelevant
//! for sign changes.
class RawPath
{
  public:
    explicit RawPath(CoefficientVector const& c) : c_(c)
    {
        for (int n = 1; n <= c.K; ++n)
        {
            double mag = std::abs(c.a[n - 1]);
            if (c.has_sine())
                mag += std::abs(c.b[n - 1]);
            curvature_bound_ += static_cast<double>(n) * n * mag;
        }
    }

    double operator()(double t) const
    {
        double const cs = std::cos(t);
        double const two_cos = 2 * cs;
        double a1 = 0, a2 = 0, b1 = 0, b2 = 0;
        for (int n = c_.K; n >= 1; --n)
        {
            double const a0 = c_.a[n - 1] + two_cos * a1 - a2;
            a2 = a1;
            a1 = a0;
        }
        double value = a1 * cs - a2;
        if (c_.has_sine())
        {
            for (int n = c_.K; n >= 1; --n)
            {
                double const b0 = c_.b[n - 1] + two_cos * b1 - b2;
                b2 = b1;
                b1 = b0;
            }
            value += b1 * std::sin(t);
        }
        return value;
    }

    //! Values at n points; recurrences for a block run side by side
    void eval_many(double const* t, double* out, std::size_t n) const
    {
        constexpr std::size_t B = 8;
        for (std::size_t start = 0; start < n; start += B)
        {
            std::size_t const m = std::min(B, n - start);
            double cs[B], sn[B], tc[B], a1[B], a2[B], b1[B], b2[B];
            for (std::size_t j = 0; j < B; ++j)
            {
                double const x = t[start + std::min(j, m - 1)];
                cs[j] = std::cos(x);
                sn[j] = std::sin(x);
                tc[j] = 2 * cs[j];
                a1[j] = a2[j] = b1[j] = b2[j] = 0;
            }
            for (int k = c_.K; k >= 1; --k)
            {
                double const ak = c_.a[k - 1];
                for (std::size_t j = 0; j < B; ++j)
                {
                    double const a0 = ak + tc[j] * a1[j] - a2[j];
                    a2[j] = a1[j];
                    a1[j] = a0;
                }
            }
            if (c_.has_sine())
            {
                for (int k = c_.K; k >= 1; --k)
                {
                    double const bk = c_.b[k - 1];
                    for (std::size_t j = 0; j < B; ++j)
                    {
                        double const b0 = bk + tc[j] * b1[j] - b2[j];
                        b2[j] = b1[j];
                        b1[j] = b0;
                    }
                }
            }
            for (std::size_t j = 0; j < m; ++j)
            {
                double v = a1[j] * cs[j] - a2[j];
                if (c_.has_sine())
                    v += b1[j] * sn[j];
                out[start + j] = v;
            }
        }
    }

    //! Upper bound on |f''| over the whole line
    double curvature_bound() const { return curvature_bound_; }

  private:
    CoefficientVector const& c_;
    double curvature_bound_ = 0;
};

inline bool positive(double v)
{
    return v >= 0;
}

class CellScanner
{
  public:
    CellScanner(RawPath const& f, ScanOptions const& opts, ZeroCountResult& out)
        : f_(f), opts_(opts), out_(out)
    {
    }

    void process(double x0, double f0, double x1, double f1, bool first_level)
    {
        double const w = x1 - x0;
        bool const changes = positive(f0) != positive(f1);
        double const pair_bound = 0.5 * f_.curvature_bound() * w * w;
        bool const suspicious = std::abs(f0) <= pair_bound
                                && std::abs(f1) <= pair_bound;
        if (!suspicious)
        {
            if (changes)
                this->add_root(x0, f0, x1);
            return;
        }
        if (w <= opts_.tangency_width)
        {
            if (changes)
                this->add_root(x0, f0, x1);
            else
                out_.warnings.push_back({x0, x1});
            return;
        }
        int const parts = first_level ? 4 : 2;
        double xa = x0;
        double fa = f0;
        for (int k = 1; k <= parts; ++k)
        {
            double const xb = (k == parts) ? x1 : x0 + w * k / parts;
            double const fb = (k == parts) ? f1 : f_(xb);
            this->process(xa, fa, xb, fb, false);
            xa = xb;
            fa = fb;
        }
    }

  private:
    void add_root(double lo, double f_lo, double hi)
    {
        if (opts_.refine_roots)
        {
            bool const lo_pos = positive(f_lo);
            while (hi - lo > opts_.root_tolerance)
            {
                double const mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi)
                    break;
                if (positive(f_(mid)) == lo_pos)
                    lo = mid;
                else
                    hi = mid;
            }
        }
        out_.roots.push_back(0.5 * (lo + hi));
    }

    RawPath const& f_;
    ScanOptions const& opts_;
    ZeroCountResult& out_;
};
}  // namespace

//---------------------------------------------------------------------------//
std::string to_string(ZeroMethod m)
{
    return m == ZeroMethod::scan_bisect ? "scan_bisect" : "eigen_oracle";
}

ZeroCountResult count_zeros_scan(CoefficientVector const& coeffs,
                                 Interval interval,
                                 ScanOptions const& options)
{
    if (coeffs.K < 1 || coeffs.a.size() != static_cast<std::size_t>(coeffs.K))
        throw UsageError("count_zeros_scan: malformed coefficient vector");
    if (!(options.oversample >= 8))
        throw UsageError("count_zeros_scan: oversample must be >= 8");
    if (!(interval.hi > interval.lo))
        throw UsageError("count_zeros_scan: empty interval");

    ZeroCountResult out;
    out.method = ZeroMethod::scan_bisect;
    out.interval = interval;

    RawPath const f(coeffs);
    double const cells_real = options.oversample * 2.0 * coeffs.K
                              * interval.length() / (2 * pi);
    auto const cells = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(cells_real - 1e-9)));
    double const h = interval.length() / static_cast<double>(cells);

    std::vector<double> x(cells + 1);
    for (std::size_t i = 0; i < cells; ++i)
        x[i] = interval.lo + h * static_cast<double>(i);
    x[cells] = interval.hi;
    std::vector<double> fx(cells + 1);
    f.eval_many(x.data(), fx.data(), x.size());

    CellScanner scanner(f, options, out);
    for (std::size_t i = 0; i < cells; ++i)
        scanner.process(x[i], fx[i], x[i + 1], fx[i + 1], true);
    out.count = out.roots.size();
    return out;
}

//---------------------------------------------------------------------------//
ZeroCountResult count_zeros_eigen(CoefficientVector const& coeffs,
                                  Interval interval)
{
    int const K = coeffs.K;
    if (K < 1 || coeffs.a.size() != static_cast<std::size_t>(K))
        throw UsageError("count_zeros_eigen: malformed coefficient vector");
    if (K > max_eigen_degree)
        throw UsageError("count_zeros_eigen: K = " + std::to_string(K)
                         + " exceeds the dense eigenproblem budget of "
                         + std::to_string(max_eigen_degree));
    if (!(interval.hi > interval.lo))
        throw UsageError("count_zeros_eigen: empty interval");

    using cplx = std::complex<double>;
    // p_j multiplies z^j in z^K * f(z), j = 0..2K
    std::vector<cplx> p(2 * K + 1, cplx{0, 0});
    for (int n = 1; n <= K; ++n)
    {
        double const a = coeffs.a[n - 1];
        double const b = coeffs.has_sine() ? coeffs.b[n - 1] : 0.0;
        p[K + n] = cplx{0.5 * a, -0.5 * b};
        p[K - n] = cplx{0.5 * a, 0.5 * b};
    }

    // Trim vanishing leading terms (only for hand-built coefficient vectors)
    int degree = 2 * K;
    while (degree > 0 && std::abs(p[degree]) == 0.0)
        --degree;
    int lowest = 0;
    while (lowest < degree && std::abs(p[lowest]) == 0.0)
        ++lowest;
    int const m = degree - lowest;

    ZeroCountResult out;
    out.method = ZeroMethod::eigen_oracle;
    out.interval = interval;
    if (m == 0)
        return out;

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 1; i < m; ++i)
        companion(i, i - 1) = 1.0;
    for (int j = 0; j < m; ++j)
        companion(j, m - 1) = -p[lowest + j] / p[degree];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw NumericError("count_zeros_eigen: eigenvalue solver failed");

    std::vector<double> args;
    for (auto const& z : solver.eigenvalues())
    {
        if (std::abs(1.0 - std::abs(z)) >= 1e-8)
            continue;
        double t = std::arg(z);
        if (t < 0)
            t += 2 * pi;
        if (t >= interval.lo && t <= interval.hi)
            args.push_back(t);
    }
    std::sort(args.begin(), args.end());
    for (double t : args)
    {
        if (out.roots.empty() || t - out.roots.back() > 1e-9)
            out.roots.push_back(t);
    }
    out.count = out.roots.size();
    return out;
}

}  // namespace trigzero
