//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/sampling.hpp
//! Random polynomial replicates and Gaussian path samples.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covariance.hpp"

namespace trigzero
{
//---------------------------------------------------------------------------//
enum class Ensemble
{
    cosine,      //!< K^{-1/2} sum a_n cos(n t)
    stationary,  //!< K^{-1/2} sum a_n cos(n t) + b_n sin(n t)
};

std::string to_string(Ensemble e);
Ensemble ensemble_from_string(std::string const& name);

//! Which axis a time argument lives on.
enum class Axis
{
    original,  //!< t in [0, pi] (or [0, 2 pi])
    rescaled,  //!< t in [0, K pi]; the polynomial evaluated at t / K
};

struct SeedInfo
{
    std::uint64_t seed = 0;
    std::uint64_t replicate = 0;
};

/*!
 * Gaussian coefficients of one polynomial replicate.
 *
 * \c a[n-1] multiplies cos(n t); \c b is non-empty iff the ensemble is
 * stationary.
 */
struct CoefficientVector
{
    int K = 0;
    Ensemble ensemble = Ensemble::cosine;
    std::vector<double> a;
    std::vector<double> b;
    SeedInfo seed_info;

    bool has_sine() const { return !b.empty(); }
};

CoefficientVector draw_coefficients(int K,
                                    Ensemble ensemble,
                                    std::uint64_t seed,
                                    std::uint64_t replicate = 0);

// Wrap explicit coefficients (tests and single-mode examples)
CoefficientVector make_coefficients(std::vector<double> a,
                                    std::vector<double> b = {});

struct PathValue
{
    double value = 0;
    double derivative = 0;
};

/*!
 * Evaluate the normalized polynomial and its t-derivative.
 *
 * On the rescaled axis the derivative is with respect to the rescaled time,
 * i.e. 1/K times the original-axis derivative.
 */
PathValue eval_path(CoefficientVector const& coeffs, double t, Axis axis);

// Values on the original axis at each t; OpenMP over points
void eval_grid(CoefficientVector const& coeffs,
               std::span<double const> t,
               std::span<double> values);

// Single-threaded reference for eval_grid
void eval_grid_serial(CoefficientVector const& coeffs,
                      std::span<double const> t,
                      std::span<double> values);

//---------------------------------------------------------------------------//
struct PathSample
{
    std::vector<double> grid;
    std::vector<double> values;
    std::optional<std::vector<double>> derivative_values;
};

inline constexpr std::size_t max_limit_grid = 4096;

/*!
 * One draw of the centered Gaussian process with the given kernel on a grid.
 *
 * Factorizes the Gram matrix by Cholesky, adding diagonal jitter from 1e-12
 * up to 1e-8 until it succeeds.
 */
PathSample sample_limit_process(Kernel const& kernel,
                                std::span<double const> grid,
                                std::uint64_t seed,
                                std::uint64_t replicate = 0);

}  // namespace trigzero
