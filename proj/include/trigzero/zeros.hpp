//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/zeros.hpp
//! Zero counting for trigonometric polynomial replicates.
//!
//! Intervals and roots are on the original axis t in [0, 2 pi].
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <vector>

#include "sampling.hpp"

namespace trigzero
{
struct Interval
{
    double lo = 0;
    double hi = 0;

    double length() const { return hi - lo; }
};

// Map between the original axis t and the rescaled axis K t
inline Interval to_rescaled(Interval original, int K)
{
    return {original.lo * K, original.hi * K};
}

inline Interval to_original(Interval rescaled, int K)
{
    return {rescaled.lo / K, rescaled.hi / K};
}

enum class ZeroMethod
{
    scan_bisect,
    eigen_oracle,
};

std::string to_string(ZeroMethod m);

//! A bracket where the path touches zero without a resolvable crossing.
struct TangencyWarning
{
    double lo = 0;
    double hi = 0;
};

struct ZeroCountResult
{
    std::size_t count = 0;
    std::vector<double> roots;
    ZeroMethod method = ZeroMethod::scan_bisect;
    Interval interval;
    std::vector<TangencyWarning> warnings;
};

struct ScanOptions
{
    //! Grid points per root-bound spacing (2K roots per period)
    double oversample = 16;
    //! Bisect each bracket to \c root_tolerance; otherwise report midpoints
    bool refine_roots = true;
    double root_tolerance = 1e-12;
    //! Width below which an unresolved near-miss becomes a tangency
    double tangency_width = 1e-13;
};

/*!
 * Count zeros by sign changes on a uniform grid.
 *
 * Cells without a sign change are re-examined when both endpoint values are
 * small enough that a pair of roots could hide between them: with M2 a bound
 * on |f''|, a hidden pair forces |f| <= M2 w^2 / 2 at both ends of a cell of
 * width w. Such cells are split 4x, then bisected until the bound rules the
 * pair out or a sign change appears. Cells that shrink below the tangency
 * width are reported as warnings and count as zero crossings.
 */
ZeroCountResult count_zeros_scan(CoefficientVector const& coeffs,
                                 Interval interval,
                                 ScanOptions const& options = {});

inline constexpr int max_eigen_degree = 256;

/*!
 * Exact oracle: roots of z^K * sum a_n (z^n + z^-n)/2 (plus the sine part)
 * as companion-matrix eigenvalues, keeping those on the unit circle.
 */
ZeroCountResult count_zeros_eigen(CoefficientVector const& coeffs,
                                  Interval interval);

}  // namespace trigzero
