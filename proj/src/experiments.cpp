//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file experiments.cpp
//---------------------------------------------------------------------------//
#include "trigzero/experiments.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <sstream>

#include "trigzero/errors.hpp"
#include "trigzero/rice.hpp"
#include "trigzero/rng.hpp"

namespace trigzero
{
namespace
{
using std::numbers::pi;

double parse_pi_multiple(std::string token)
{
    auto const bad = [&] {
        return UsageError("interval: cannot parse '" + token
                          + "' (expected a multiple of pi such as 0, pi, "
                            "2pi or 0.5)");
    };
    if (token.empty())
        throw bad();
    std::string number = token;
    if (token.size() >= 2 && token.substr(token.size() - 2) == "pi")
    {
        number = token.substr(0, token.size() - 2);
        if (number.empty())
            return 1.0;
        if (number.back() == '*')
            number.pop_back();
    }
    std::size_t used = 0;
    double value = 0;
    try
    {
        value = std::stod(number, &used);
    }
    catch (std::exception const&)
    {
        throw bad();
    }
    if (used != number.size() || !std::isfinite(value))
        throw bad();
    return value;
}

std::string format_pi_multiple(double v)
{
    if (v == 0)
        return "0";
    if (v == 1)
        return "pi";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17gpi", v);
    return buf;
}

int resolve_workers(int workers)
{
    if (workers < 0)
        throw UsageError("workers must be >= 0");
    return workers > 0 ? workers : omp_get_max_threads();
}

ScanOptions campaign_scan_options(double oversample)
{
    ScanOptions opts;
    opts.oversample = oversample;
    opts.refine_roots = false;
    return opts;
}

template<class Body>
void parallel_indexed(std::size_t n, int workers, Body&& body)
{
    std::exception_ptr failure;
    auto const count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
    for (std::ptrdiff_t i = 0; i < count; ++i)
    {
        try
        {
            body(static_cast<std::size_t>(i));
        }
        catch (...)
        {
#pragma omp critical(trigzero_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

CampaignResult run_campaign_impl(ExperimentConfig const& config,
                                 int workers,
                                 bool serial)
{
    config.validate();
    CampaignResult result;
    result.config = config;
    result.records.resize(config.K_list.size() * config.replicates);

    for (std::size_t k = 0; k < config.K_list.size(); ++k)
    {
        int const K = config.K_list[k];
        ExperimentRecord* block = result.records.data() + k * config.replicates;
        auto body = [&](std::size_t r) {
            block[r] = run_replicate(config, K, r);
        };
        if (serial)
        {
            for (std::size_t r = 0; r < config.replicates; ++r)
                body(r);
        }
        else
        {
            parallel_indexed(config.replicates, workers, body);
        }
        KSummary s = summarize(
            K, std::span<ExperimentRecord const>(block, config.replicates));
        check_exclusions(s);
        result.summaries.push_back(s);
    }
    return result;
}

double sample_variance(std::span<double const> x)
{
    MomentAccumulator acc;
    for (double v : x)
        acc.add(v);
    return acc.variance();
}
}  // namespace

//---------------------------------------------------------------------------//
IntervalSpec IntervalSpec::parse(std::string const& text)
{
    IntervalSpec spec;
    if (text == "window")
    {
        spec.window = true;
        return spec;
    }
    auto const colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("interval: expected 'lo:hi' or 'window', got '"
                         + text + "'");
    spec.lo_pi = parse_pi_multiple(text.substr(0, colon));
    spec.hi_pi = parse_pi_multiple(text.substr(colon + 1));
    if (!(spec.lo_pi >= 0 && spec.hi_pi <= 2 && spec.lo_pi < spec.hi_pi))
        throw UsageError("interval: need 0 <= lo < hi <= 2pi, got '" + text
                         + "'");
    return spec;
}

std::string IntervalSpec::to_string() const
{
    if (window)
        return "window";
    return format_pi_multiple(lo_pi) + ":" + format_pi_multiple(hi_pi);
}

Interval IntervalSpec::resolve(int K, double alpha) const
{
    if (window)
        return to_original(trigzero::window(K, alpha), K);
    return {lo_pi * pi, hi_pi * pi};
}

void ExperimentConfig::validate() const
{
    if (K_list.empty())
        throw UsageError("config: at least one K is required");
    for (int K : K_list)
    {
        if (K < 1)
            throw UsageError("config: K must be >= 1");
    }
    if (replicates < 2)
        throw UsageError("config: replicates must be >= 2");
    if (interval.window && !(alpha > 0 && alpha < 0.5))
        throw UsageError("config: alpha must lie in (0, 1/2)");
    if (!(oversample >= 8))
        throw UsageError("config: oversample must be >= 8");
}

ExperimentRecord run_replicate(ExperimentConfig const& config,
                               int K,
                               std::uint64_t replicate)
{
    CoefficientVector const c
        = draw_coefficients(K, config.ensemble, config.seed, replicate);
    ZeroCountResult const z
        = count_zeros_scan(c,
                           config.interval.resolve(K, config.alpha),
                           campaign_scan_options(config.oversample));
    ExperimentRecord rec;
    rec.replicate = replicate;
    rec.K = K;
    rec.seed = config.seed;
    rec.count = z.count;
    rec.method = z.method;
    rec.warnings = z.warnings.size();
    return rec;
}

KSummary summarize(int K, std::span<ExperimentRecord const> records)
{
    KSummary s;
    s.K = K;
    MomentAccumulator acc;
    for (auto const& r : records)
    {
        if (r.excluded())
            ++s.excluded;
        else
            acc.add(static_cast<double>(r.count));
    }
    double const scale = K * pi;
    s.replicates = acc.count();
    s.mean = acc.mean();
    s.mean_se = acc.mean_standard_error();
    s.variance = acc.variance();
    s.variance_se = acc.variance_standard_error();
    s.scaled_variance = s.variance / scale;
    s.scaled_variance_se = s.variance_se / scale;
    s.scaled_variance_lo99 = s.scaled_variance - 2.576 * s.scaled_variance_se;
    s.scaled_variance_hi99 = s.scaled_variance + 2.576 * s.scaled_variance_se;
    s.skewness = acc.skewness();
    s.excess_kurtosis = acc.excess_kurtosis();
    return s;
}

void check_exclusions(KSummary const& s)
{
    std::size_t const total = s.replicates + s.excluded;
    if (static_cast<double>(s.excluded)
        > max_excluded_fraction * static_cast<double>(total))
    {
        std::ostringstream os;
        os << "campaign: " << s.excluded << " of " << total
           << " replicates at K = " << s.K
           << " had unresolved tangencies (limit "
           << max_excluded_fraction * 100 << "%)";
        throw NumericError(os.str());
    }
}

CampaignResult run_campaign(ExperimentConfig const& config, int workers)
{
    return run_campaign_impl(config, resolve_workers(workers), false);
}

CampaignResult run_campaign_serial(ExperimentConfig const& config)
{
    return run_campaign_impl(config, 1, true);
}

//---------------------------------------------------------------------------//
NormalityReport normality_test(std::span<double const> sample, double variance)
{
    NormalityReport rep;
    rep.n = sample.size();
    rep.variance = variance;
    rep.ks = ks_test_normal(sample, variance);
    rep.ks_raw = rep.ks;
    rep.anderson_darling = anderson_darling_normal(sample, variance);
    MomentAccumulator acc;
    for (double v : sample)
        acc.add(v);
    rep.skewness = acc.skewness();
    rep.excess_kurtosis = acc.excess_kurtosis();
    rep.standardized.assign(sample.begin(), sample.end());
    return rep;
}

NormalityReport clt_test(std::span<double const> counts,
                         int K,
                         CltOptions const& options)
{
    if (counts.size() < min_clt_replicates)
        throw UsageError("clt_test: need at least "
                         + std::to_string(min_clt_replicates)
                         + " replicates, got "
                         + std::to_string(counts.size()));
    if (K < 1)
        throw UsageError("clt_test: K must be >= 1");
    if (options.variance_source == VarianceSource::chaos_constant
        && !(options.chaos_constant > 0))
        throw UsageError("clt_test: chaos variance source needs a positive "
                         "constant");

    MomentAccumulator raw;
    for (double c : counts)
        raw.add(c);
    double const center = options.centering == Centering::sample_mean
                              ? raw.mean()
                              : options.rice_mean;
    double const scale = std::sqrt(pi * K);

    std::vector<double> z(counts.size());
    std::vector<double> y(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
    {
        z[i] = (counts[i] - center) / scale;
        double u = 0;
        if (options.jitter)
        {
            CounterStream s(
                {options.seed, i, StreamPurpose::clt_jitter,
                 static_cast<std::uint32_t>(K)});
            u = s.next_uniform() - 0.5;
        }
        y[i] = (counts[i] + u - center) / scale;
    }

    double v_raw = 0, v_jit = 0;
    if (options.variance_source == VarianceSource::empirical)
    {
        v_raw = sample_variance(z);
        v_jit = sample_variance(y);
    }
    else
    {
        v_raw = options.chaos_constant;
        v_jit = v_raw + (options.jitter ? 1.0 / (12 * pi * K) : 0.0);
    }
    if (!(v_raw > 0))
        throw NumericError("clt_test: standardized counts have zero variance");

    NormalityReport rep;
    rep.n = counts.size();
    rep.K = K;
    rep.center = center;
    rep.variance = v_jit;
    rep.ks = ks_test_normal(y, v_jit);
    rep.ks_raw = ks_test_normal(z, v_raw);
    rep.anderson_darling = anderson_darling_normal(y, v_jit);
    rep.skewness = raw.skewness();
    rep.excess_kurtosis = raw.excess_kurtosis();
    rep.standardized = std::move(z);
    return rep;
}

HistogramBins standardized_histogram(std::span<double const> z,
                                     double variance,
                                     std::size_t bins)
{
    if (bins == 0 || !(variance > 0))
        throw UsageError("histogram: need bins > 0 and positive variance");
    HistogramBins h;
    h.counts.assign(bins, 0);
    double const sd = std::sqrt(variance);
    double const width = (h.hi - h.lo) / static_cast<double>(bins);
    for (double x : z)
    {
        double const pos = std::floor((x / sd - h.lo) / width);
        auto idx = static_cast<std::ptrdiff_t>(
            std::clamp(pos, 0.0, static_cast<double>(bins - 1)));
        ++h.counts[idx];
    }
    return h;
}

//---------------------------------------------------------------------------//
ChopReport window_chop_check(std::span<int const> K_list,
                             double alpha,
                             std::size_t replicates,
                             std::uint64_t seed,
                             int workers)
{
    if (!(alpha > 0 && alpha < 0.5))
        throw UsageError("window_chop_check: alpha must lie in (0, 1/2)");
    if (replicates < 2)
        throw UsageError("window_chop_check: replicates must be >= 2");
    if (K_list.empty())
        throw UsageError("window_chop_check: need at least one K");
    int const nt = resolve_workers(workers);
    ScanOptions const opts = campaign_scan_options(16);

    ChopReport report;
    report.alpha = alpha;
    for (int K : K_list)
    {
        if (K < 2)
            throw UsageError("window_chop_check: K must be >= 2");
        Interval const win = to_original(window(K, alpha), K);
        Interval const full{0, pi};
        Interval const left{0, win.lo};
        Interval const right{win.hi, pi};

        std::vector<std::size_t> complement(replicates);
        std::vector<char> violation(replicates, 0);
        parallel_indexed(replicates, nt, [&](std::size_t r) {
            CoefficientVector const c
                = draw_coefficients(K, Ensemble::cosine, seed, r);
            auto const nl = count_zeros_scan(c, left, opts).count;
            auto const nr = count_zeros_scan(c, right, opts).count;
            auto const nw = count_zeros_scan(c, win, opts).count;
            auto const nf = count_zeros_scan(c, full, opts).count;
            complement[r] = nl + nr;
            violation[r] = (nl + nr + nw != nf);
        });

        MomentAccumulator acc;
        ChopRow row;
        row.K = K;
        row.replicates = replicates;
        for (std::size_t r = 0; r < replicates; ++r)
        {
            acc.add(static_cast<double>(complement[r]));
            row.additivity_violations += violation[r];
        }
        double const root = std::sqrt(K * pi);
        row.complement_mean = acc.mean();
        row.complement_variance = acc.variance();
        row.mean_ratio = acc.mean() / root;
        row.sd_ratio = std::sqrt(acc.variance()) / root;
        Interval const rl = to_rescaled(left, K);
        Interval const rr = to_rescaled(right, K);
        row.rice_ratio
            = (rice_mean(K, rl).value + rice_mean(K, rr).value) / root;
        report.rows.push_back(row);
    }

    report.strictly_decreasing = true;
    for (std::size_t i = 1; i < report.rows.size(); ++i)
    {
        if (!(report.rows[i].mean_ratio < report.rows[i - 1].mean_ratio))
            report.strictly_decreasing = false;
    }
    return report;
}

}  // namespace trigzero
