//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file sampling.cpp
//---------------------------------------------------------------------------//
#include "trigzero/sampling.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>

#include "trigzero/errors.hpp"
#include "trigzero/rng.hpp"

namespace trigzero
{
namespace
{
//! Clenshaw state: after the backward sweep, sum c_n cos(n x) = b1 cos x - b2
//! and sum c_n sin(n x) = b1 sin x.
struct ClenshawPair
{
    double b1 = 0;
    double b2 = 0;

    void step(double coeff, double two_cos)
    {
        double const b0 = coeff + two_cos * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
};

double cosine_sum(std::vector<double> const& a, double x)
{
    double const two_cos = 2 * std::cos(x);
    ClenshawPair p;
    for (std::size_t n = a.size(); n >= 1; --n)
        p.step(a[n - 1], two_cos);
    return p.b1 * std::cos(x) - p.b2;
}

double path_sum(CoefficientVector const& coeffs, double x)
{
    if (!coeffs.has_sine())
        return cosine_sum(coeffs.a, x);
    double const c = std::cos(x);
    double const two_cos = 2 * c;
    ClenshawPair pa, pb;
    for (std::size_t n = coeffs.a.size(); n >= 1; --n)
    {
        pa.step(coeffs.a[n - 1], two_cos);
        pb.step(coeffs.b[n - 1], two_cos);
    }
    return pa.b1 * c - pa.b2 + pb.b1 * std::sin(x);
}

// Unnormalized sum and original-axis derivative
PathValue path_sum_with_derivative(CoefficientVector const& coeffs, double x)
{
    double const c = std::cos(x);
    double const s = std::sin(x);
    double const two_cos = 2 * c;
    ClenshawPair pa, pna;
    if (!coeffs.has_sine())
    {
        for (std::size_t n = coeffs.a.size(); n >= 1; --n)
        {
            pa.step(coeffs.a[n - 1], two_cos);
            pna.step(n * coeffs.a[n - 1], two_cos);
        }
        return {pa.b1 * c - pa.b2, -pna.b1 * s};
    }
    ClenshawPair pb, pnb;
    for (std::size_t n = coeffs.a.size(); n >= 1; --n)
    {
        pa.step(coeffs.a[n - 1], two_cos);
        pna.step(n * coeffs.a[n - 1], two_cos);
        pb.step(coeffs.b[n - 1], two_cos);
        pnb.step(n * coeffs.b[n - 1], two_cos);
    }
    return {pa.b1 * c - pa.b2 + pb.b1 * s, -pna.b1 * s + pnb.b1 * c - pnb.b2};
}
}  // namespace

//---------------------------------------------------------------------------//
std::string to_string(Ensemble e)
{
    return e == Ensemble::cosine ? "cosine" : "stationary";
}

Ensemble ensemble_from_string(std::string const& name)
{
    if (name == "cosine")
        return Ensemble::cosine;
    if (name == "stationary")
        return Ensemble::stationary;
    throw UsageError("unknown ensemble '" + name
                     + "' (expected cosine|stationary)");
}

CoefficientVector draw_coefficients(int K,
                                    Ensemble ensemble,
                                    std::uint64_t seed,
                                    std::uint64_t replicate)
{
    if (K < 1)
        throw UsageError("draw_coefficients: K must be >= 1");
    CoefficientVector out;
    out.K = K;
    out.ensemble = ensemble;
    out.seed_info = {seed, replicate};
    out.a.resize(K);
    CounterStream a_stream({seed,
                            replicate,
                            StreamPurpose::cosine_coefficients,
                            static_cast<std::uint32_t>(K)});
    for (auto& x : out.a)
        x = a_stream.next_normal();
    if (ensemble == Ensemble::stationary)
    {
        out.b.resize(K);
        CounterStream b_stream({seed,
                                replicate,
                                StreamPurpose::sine_coefficients,
                                static_cast<std::uint32_t>(K)});
        for (auto& x : out.b)
            x = b_stream.next_normal();
    }
    return out;
}

CoefficientVector make_coefficients(std::vector<double> a, std::vector<double> b)
{
    if (a.empty())
        throw UsageError("make_coefficients: need at least one coefficient");
    if (!b.empty() && b.size() != a.size())
        throw UsageError("make_coefficients: sine and cosine lengths differ");
    CoefficientVector out;
    out.K = static_cast<int>(a.size());
    out.ensemble = b.empty() ? Ensemble::cosine : Ensemble::stationary;
    out.a = std::move(a);
    out.b = std::move(b);
    return out;
}

PathValue eval_path(CoefficientVector const& coeffs, double t, Axis axis)
{
    double const norm = 1.0 / std::sqrt(static_cast<double>(coeffs.K));
    double const x = axis == Axis::rescaled ? t / coeffs.K : t;
    auto v = path_sum_with_derivative(coeffs, x);
    v.value *= norm;
    v.derivative *= norm;
    if (axis == Axis::rescaled)
        v.derivative /= coeffs.K;
    return v;
}

void eval_grid_serial(CoefficientVector const& coeffs,
                      std::span<double const> t,
                      std::span<double> values)
{
    if (values.size() != t.size())
        throw UsageError("eval_grid: output size mismatch");
    double const norm = 1.0 / std::sqrt(static_cast<double>(coeffs.K));
    for (std::size_t i = 0; i < t.size(); ++i)
        values[i] = norm * path_sum(coeffs, t[i]);
}

void eval_grid(CoefficientVector const& coeffs,
               std::span<double const> t,
               std::span<double> values)
{
    if (values.size() != t.size())
        throw UsageError("eval_grid: output size mismatch");
    double const norm = 1.0 / std::sqrt(static_cast<double>(coeffs.K));
    auto const n = static_cast<std::ptrdiff_t>(t.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        values[i] = norm * path_sum(coeffs, t[i]);
}

//---------------------------------------------------------------------------//
PathSample sample_limit_process(Kernel const& kernel,
                                std::span<double const> grid,
                                std::uint64_t seed,
                                std::uint64_t replicate)
{
    if (grid.empty())
        throw UsageError("sample_limit_process: empty grid");
    if (grid.size() > max_limit_grid)
        throw UsageError("sample_limit_process: grid exceeds 4096 points; "
                         "window the request");
    for (std::size_t i = 1; i < grid.size(); ++i)
    {
        if (!(grid[i] > grid[i - 1]))
            throw UsageError("sample_limit_process: grid must be strictly "
                             "increasing");
    }

    auto const n = static_cast<Eigen::Index>(grid.size());
    Eigen::MatrixXd gram(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        for (Eigen::Index j = 0; j <= i; ++j)
        {
            double const r = kernel(grid[j], grid[i]);
            gram(i, j) = r;
            gram(j, i) = r;
        }
    }

    Eigen::LLT<Eigen::MatrixXd> llt;
    bool factored = false;
    for (double jitter : {0.0, 1e-12, 1e-11, 1e-10, 1e-9, 1e-8})
    {
        Eigen::MatrixXd m = gram;
        m.diagonal().array() += jitter;
        llt.compute(m);
        if (llt.info() == Eigen::Success)
        {
            factored = true;
            break;
        }
    }
    if (!factored)
        throw DegeneracyError("sample_limit_process: Gram matrix not positive "
                              "definite with jitter up to 1e-8");

    CounterStream stream({seed,
                          replicate,
                          StreamPurpose::limit_process,
                          static_cast<std::uint32_t>(grid.size())});
    Eigen::VectorXd z(n);
    for (Eigen::Index i = 0; i < n; ++i)
        z[i] = stream.next_normal();
    Eigen::VectorXd x = llt.matrixL() * z;

    PathSample out;
    out.grid.assign(grid.begin(), grid.end());
    out.values.assign(x.data(), x.data() + n);
    return out;
}

}  // namespace trigzero
