//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/experiments.hpp
//! Monte Carlo campaigns over zero counts and their statistical summaries.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sampling.hpp"
#include "stats.hpp"
#include "zeros.hpp"

namespace trigzero
{
//---------------------------------------------------------------------------//
/*!
 * Counting interval for a campaign.
 *
 * Either fixed bounds on the original axis in units of pi, or the
 * boundary-trimmed window of each degree K.
 */
struct IntervalSpec
{
    bool window = false;
    double lo_pi = 0;
    double hi_pi = 1;

    // Parse "a:b" (units of pi; "pi" and "2pi" accepted) or "window"
    static IntervalSpec parse(std::string const& text);
    std::string to_string() const;

    //! Original-axis interval for degree K
    Interval resolve(int K, double alpha) const;
};

struct ExperimentConfig
{
    std::vector<int> K_list;
    std::size_t replicates = 0;
    IntervalSpec interval;
    double alpha = 0.25;
    std::uint64_t seed = 0;
    Ensemble ensemble = Ensemble::cosine;
    double oversample = 16;

    // Throws UsageError on an invalid combination
    void validate() const;
};

struct ExperimentRecord
{
    std::uint64_t replicate = 0;
    int K = 0;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    ZeroMethod method = ZeroMethod::scan_bisect;
    std::size_t warnings = 0;

    bool excluded() const { return warnings > 0; }
};

struct KSummary
{
    int K = 0;
    std::size_t replicates = 0;
    std::size_t excluded = 0;
    double mean = 0;
    double mean_se = 0;
    double variance = 0;
    double variance_se = 0;
    //! Var / (K pi) with its standard error and 99% normal interval
    double scaled_variance = 0;
    double scaled_variance_se = 0;
    double scaled_variance_lo99 = 0;
    double scaled_variance_hi99 = 0;
    double skewness = 0;
    double excess_kurtosis = 0;
};

struct CampaignResult
{
    ExperimentConfig config;
    std::vector<ExperimentRecord> records;
    std::vector<KSummary> summaries;
};

//! Exclusions above this fraction of a K block abort the campaign.
inline constexpr double max_excluded_fraction = 1e-3;

// Throws NumericError if more than max_excluded_fraction were excluded
void check_exclusions(KSummary const& summary);

/*!
 * Count zeros for every (K, replicate) of the configuration.
 *
 * Replicates run in parallel on \c workers threads (0 = OpenMP default);
 * records are stored by index and summarized serially, so output does not
 * depend on the worker count.
 */
CampaignResult run_campaign(ExperimentConfig const& config, int workers = 0);

// Single-threaded reference for run_campaign
CampaignResult run_campaign_serial(ExperimentConfig const& config);

// One record: draw the replicate and count its zeros
ExperimentRecord run_replicate(ExperimentConfig const& config,
                               int K,
                               std::uint64_t replicate);

// Moments of the non-excluded counts of one K block
KSummary summarize(int K, std::span<ExperimentRecord const> records);

//---------------------------------------------------------------------------//
enum class VarianceSource
{
    empirical,
    chaos_constant,
};

enum class Centering
{
    sample_mean,
    rice_mean,
};

struct CltOptions
{
    VarianceSource variance_source = VarianceSource::empirical;
    //! Required when variance_source is chaos_constant
    double chaos_constant = 0;
    Centering centering = Centering::sample_mean;
    //! Required when centering is rice_mean
    double rice_mean = 0;
    //! Add U(-1/2, 1/2) to each count before the KS test
    bool jitter = true;
    std::uint64_t seed = 0;
};

struct NormalityReport
{
    std::size_t n = 0;
    int K = 0;
    double center = 0;
    //! Variance of N(0, v) the standardized sample is tested against
    double variance = 0;
    KsResult ks;
    //! KS on the unjittered lattice values, for reference
    KsResult ks_raw;
    double anderson_darling = 0;
    double skewness = 0;
    double excess_kurtosis = 0;
    //! (count - center) / sqrt(pi K), without jitter
    std::vector<double> standardized;
};

inline constexpr std::size_t min_clt_replicates = 500;

/*!
 * Normality check of (N - center) / sqrt(pi K).
 *
 * Counts live on a lattice, so by default each is spread uniformly over its
 * unit cell (deterministically, from the jitter stream) before the KS test;
 * the tested variance includes the added 1/12.
 */
NormalityReport clt_test(std::span<double const> counts,
                         int K,
                         CltOptions const& options = {});

// KS, AD and moments of an already standardized sample against N(0, v)
NormalityReport normality_test(std::span<double const> sample, double variance);

struct HistogramBins
{
    double lo = -5;
    double hi = 5;
    std::vector<std::size_t> counts;
};

// Equal-width bins of z / sqrt(v); out-of-range values land in the edge bins
HistogramBins standardized_histogram(std::span<double const> z,
                                     double variance,
                                     std::size_t bins = 51);

//---------------------------------------------------------------------------//
struct ChopRow
{
    int K = 0;
    std::size_t replicates = 0;
    double complement_mean = 0;
    double complement_variance = 0;
    //! complement mean / sqrt(K pi)
    double mean_ratio = 0;
    //! complement standard deviation / sqrt(K pi)
    double sd_ratio = 0;
    //! Same ratio from the Rice mean of the complement
    double rice_ratio = 0;
    //! Replicates where window + complement != full count
    std::size_t additivity_violations = 0;
};

struct ChopReport
{
    double alpha = 0;
    std::vector<ChopRow> rows;
    bool strictly_decreasing = false;
};

/*!
 * Zeros in the trimmed boundary [0, K pi] minus the window, per K.
 *
 * Each replicate is counted on the full interval, the window and both
 * boundary pieces so that partition additivity can be checked.
 */
ChopReport window_chop_check(std::span<int const> K_list,
                             double alpha,
                             std::size_t replicates,
                             std::uint64_t seed,
                             int workers = 0);

}  // namespace trigzero
