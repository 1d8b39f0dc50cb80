//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cli.cpp
//---------------------------------------------------------------------------//
#include "trigzero/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>

#include "trigzero/chaos_variance.hpp"
#include "trigzero/covariance.hpp"
#include "trigzero/errors.hpp"
#include "trigzero/experiments.hpp"
#include "trigzero/rice.hpp"
#include "trigzero/zeros.hpp"

#ifndef TRIGZERO_VERSION
#    define TRIGZERO_VERSION "unknown"
#endif

namespace trigzero::cli
{
namespace
{
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using std::numbers::pi;

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

//---------------------------------------------------------------------------//
/*!
 * Files written into one output directory.
 *
 * Each file goes to a temporary name first and is renamed into place.
 * Unless commit() is called, everything written is removed again.
 */
class OutputDir
{
  public:
    explicit OutputDir(std::string const& path) : dir_(path)
    {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec || !fs::is_directory(dir_))
            throw IoError("cannot create output directory '" + path
                          + "': " + ec.message());
    }

    ~OutputDir()
    {
        if (committed_)
            return;
        std::error_code ec;
        for (auto const& p : written_)
            fs::remove(p, ec);
    }

    void write(std::string const& name, std::string const& content)
    {
        fs::path const final_path = dir_ / name;
        fs::path const tmp_path = dir_ / (name + ".tmp");
        {
            std::ofstream os(tmp_path, std::ios::binary | std::ios::trunc);
            if (!os)
                throw IoError("cannot open '" + tmp_path.string()
                              + "' for writing");
            written_.push_back(tmp_path);
            os << content;
            os.flush();
            if (!os)
                throw IoError("write to '" + tmp_path.string() + "' failed");
        }
        std::error_code ec;
        fs::rename(tmp_path, final_path, ec);
        if (ec)
            throw IoError("cannot rename '" + tmp_path.string()
                          + "': " + ec.message());
        written_.back() = final_path;
    }

    void commit() { committed_ = true; }

  private:
    fs::path dir_;
    std::vector<fs::path> written_;
    bool committed_ = false;
};

json read_json_file(std::string const& path)
{
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot read config file '" + path + "'");
    try
    {
        return json::parse(is);
    }
    catch (json::parse_error const& e)
    {
        throw UsageError("config file '" + path
                         + "' is not valid JSON: " + e.what());
    }
}

//! The "config" object of a manifest, or the document itself.
json config_section(json const& doc, std::string const& command)
{
    if (!doc.is_object())
        throw UsageError("config: expected a JSON object");
    if (doc.contains("command") && doc.at("command") != command)
        throw UsageError("config: manifest was written by '"
                         + doc.at("command").get<std::string>()
                         + "', not '" + command + "'");
    return doc.contains("config") ? doc.at("config") : doc;
}

template<class T>
T get_field(json const& cfg, char const* key)
{
    if (!cfg.contains(key))
        throw UsageError(std::string("config: missing field '") + key + "'");
    try
    {
        return cfg.at(key).get<T>();
    }
    catch (json::exception const&)
    {
        throw UsageError(std::string("config: bad value for '") + key + "'");
    }
}

json manifest(std::string const& command, json config)
{
    json m;
    m["command"] = command;
    m["version"] = version();
    m["config"] = std::move(config);
    return m;
}

//---------------------------------------------------------------------------//
struct CampaignFlags
{
    std::vector<int> K;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::string interval = "0:pi";
    double alpha = 0.25;
    std::string ensemble = "cosine";
    double oversample = 16;
    std::string out;
    std::string config;
};

void add_campaign_flags(CLI::App* cmd, CampaignFlags& f, bool many_K)
{
    if (many_K)
        cmd->add_option("--K", f.K, "Polynomial degree (repeatable)");
    else
        cmd->add_option("--K", f.K, "Polynomial degree")->expected(1);
    cmd->add_option("--reps", f.reps, "Replicates per degree");
    cmd->add_option("--seed", f.seed, "Experiment seed");
    cmd->add_option("--interval", f.interval,
                    "Counting interval lo:hi in units of pi, or 'window'");
    cmd->add_option("--alpha", f.alpha, "Window exponent in (0, 1/2)");
    cmd->add_option("--ensemble", f.ensemble, "cosine or stationary")
        ->check(CLI::IsMember({"cosine", "stationary"}));
    cmd->add_option("--oversample", f.oversample,
                    "Scan grid points per root spacing");
    cmd->add_option("--out", f.out, "Output directory");
    cmd->add_option("--config", f.config,
                    "Manifest or config JSON to run instead of flags");
}

json campaign_config_json(ExperimentConfig const& c)
{
    json j;
    j["K"] = c.K_list;
    j["replicates"] = c.replicates;
    j["seed"] = c.seed;
    j["interval"] = c.interval.to_string();
    j["alpha"] = c.alpha;
    j["ensemble"] = to_string(c.ensemble);
    j["oversample"] = c.oversample;
    return j;
}

ExperimentConfig campaign_from_json(json const& cfg)
{
    ExperimentConfig c;
    c.K_list = get_field<std::vector<int>>(cfg, "K");
    c.replicates = get_field<std::size_t>(cfg, "replicates");
    c.seed = get_field<std::uint64_t>(cfg, "seed");
    c.interval = IntervalSpec::parse(get_field<std::string>(cfg, "interval"));
    c.alpha = get_field<double>(cfg, "alpha");
    c.ensemble = ensemble_from_string(get_field<std::string>(cfg, "ensemble"));
    c.oversample = get_field<double>(cfg, "oversample");
    return c;
}

ExperimentConfig campaign_from_flags(CampaignFlags const& f)
{
    if (f.K.empty())
        throw UsageError("--K is required");
    if (f.reps == 0)
        throw UsageError("--reps is required");
    ExperimentConfig c;
    c.K_list = f.K;
    c.replicates = f.reps;
    c.seed = f.seed;
    c.interval = IntervalSpec::parse(f.interval);
    c.alpha = f.alpha;
    c.ensemble = ensemble_from_string(f.ensemble);
    c.oversample = f.oversample;
    return c;
}

void reject_mixed_config(CLI::App* cmd, std::vector<char const*> const& keep)
{
    for (CLI::Option* opt : cmd->get_options())
    {
        if (opt->count() == 0 || opt->get_name() == "--config")
            continue;
        bool const allowed = std::any_of(
            keep.begin(), keep.end(), [&](char const* k) {
                return opt->get_name() == k;
            });
        if (!allowed && opt->get_name() != "--help")
            throw UsageError("--config cannot be combined with "
                             + opt->get_name());
    }
}

std::string records_csv(std::vector<ExperimentRecord> const& records)
{
    std::ostringstream os;
    os << "replicate,K,seed,count,method,warnings\n";
    for (auto const& r : records)
    {
        os << r.replicate << ',' << r.K << ',' << r.seed << ',' << r.count
           << ',' << to_string(r.method) << ',' << r.warnings << '\n';
    }
    return os.str();
}

json summary_row(KSummary const& s)
{
    json j;
    j["K"] = s.K;
    j["replicates"] = s.replicates;
    j["excluded"] = s.excluded;
    j["mean"] = s.mean;
    j["mean_se"] = s.mean_se;
    j["variance"] = s.variance;
    j["variance_se"] = s.variance_se;
    j["variance_over_Kpi"] = s.scaled_variance;
    j["variance_over_Kpi_se"] = s.scaled_variance_se;
    j["variance_over_Kpi_ci99"] = {s.scaled_variance_lo99,
                                   s.scaled_variance_hi99};
    j["skewness"] = s.skewness;
    j["excess_kurtosis"] = s.excess_kurtosis;
    return j;
}

//---------------------------------------------------------------------------//
int cmd_simulate(CLI::App* cmd, CampaignFlags const& f, int workers,
                 std::ostream& out)
{
    ExperimentConfig config;
    if (!f.config.empty())
    {
        reject_mixed_config(cmd, {"--out"});
        config = campaign_from_json(
            config_section(read_json_file(f.config), "simulate"));
    }
    else
    {
        config = campaign_from_flags(f);
    }
    config.validate();

    CampaignResult const result = run_campaign(config, workers);

    json summary;
    summary["interval"] = config.interval.to_string();
    summary["ensemble"] = to_string(config.ensemble);
    summary["rows"] = json::array();
    for (auto const& s : result.summaries)
        summary["rows"].push_back(summary_row(s));

    if (!f.out.empty())
    {
        OutputDir dir(f.out);
        dir.write("records.csv", records_csv(result.records));
        dir.write("summary.json", summary.dump(2) + "\n");
        dir.write("manifest.json",
                  manifest("simulate", campaign_config_json(config)).dump(2)
                      + "\n");
        dir.commit();
    }
    out << summary.dump(2) << '\n';
    return exit_success;
}

//---------------------------------------------------------------------------//
struct RiceFlags
{
    int K = 0;
    int moment = 1;
    std::string interval = "0:pi";
    double alpha = 0.25;
};

int cmd_rice(RiceFlags const& f, std::ostream& out)
{
    if (f.K < 1)
        throw UsageError("--K must be >= 1");
    IntervalSpec const spec = IntervalSpec::parse(f.interval);
    Interval const rescaled = to_rescaled(spec.resolve(f.K, f.alpha), f.K);

    json j;
    j["K"] = f.K;
    j["moment"] = f.moment;
    j["interval"] = spec.to_string();
    j["rescaled_lo"] = rescaled.lo;
    j["rescaled_hi"] = rescaled.hi;
    if (f.moment == 1)
    {
        RiceResult const r = rice_mean(f.K, rescaled);
        j["value"] = r.value;
        j["error_estimate"] = r.error_estimate;
    }
    else
    {
        if (f.K < 2)
            throw UsageError("--moment 2 needs K >= 2");
        RiceVariance const v
            = rice_variance(Kernel::cosine_ensemble(f.K), rescaled);
        j["value"] = v.factorial_moment.value;
        j["error_estimate"] = v.factorial_moment.error_estimate;
        j["mean"] = v.mean.value;
        j["variance"] = v.variance;
        j["variance_error"] = v.variance_error;
    }
    out << j.dump(2) << '\n';
    return exit_success;
}

//---------------------------------------------------------------------------//
struct ChaosFlags
{
    int qmax = 20;
    double tail = 1e4;
    std::string out;
};

json chaos_json(VarianceConstant const& v, int qmax, double tail)
{
    json j;
    j["q_max"] = qmax;
    j["tail"] = tail;
    j["value"] = v.value;
    j["partial_sum"] = v.partial_sum;
    j["truncation_remainder"] = v.truncation_remainder;
    j["free_fit_remainder"] = v.free_fit_remainder;
    j["decay_exponent"] = v.decay_exponent;
    j["last_term"] = v.last_term;
    j["terms"] = json::array();
    for (auto const& t : v.terms)
    {
        j["terms"].push_back({{"q", t.q},
                              {"sigma_sq", t.sigma_sq},
                              {"tail_cutoff", t.tail_cutoff},
                              {"quadrature_error", t.quadrature_error},
                              {"tail_remainder", t.tail_remainder}});
    }
    return j;
}

int cmd_chaos_var(ChaosFlags const& f, std::ostream& out)
{
    VarianceConstant const v = total_variance_constant(f.qmax, f.tail);
    json const j = chaos_json(v, f.qmax, f.tail);
    if (!f.out.empty())
    {
        std::ostringstream csv;
        csv << "q,sigma_sq,tail_cutoff,quadrature_error,tail_remainder\n";
        for (auto const& t : v.terms)
        {
            csv << t.q << ',' << fmt(t.sigma_sq) << ',' << fmt(t.tail_cutoff)
                << ',' << fmt(t.quadrature_error) << ','
                << fmt(t.tail_remainder) << '\n';
        }
        json cfg{{"qmax", f.qmax}, {"tail", f.tail}};
        OutputDir dir(f.out);
        dir.write("chaos_terms.csv", csv.str());
        dir.write("chaos_summary.json", j.dump(2) + "\n");
        dir.write("manifest.json", manifest("chaos-var", cfg).dump(2) + "\n");
        dir.commit();
    }
    out << j.dump(2) << '\n';
    return exit_success;
}

//---------------------------------------------------------------------------//
struct CltFlags
{
    CampaignFlags campaign;
    std::string variance_source = "empirical";
    std::string centering = "sample";
    bool no_jitter = false;
    int qmax = 20;
    double tail = 1e4;
};

int cmd_clt(CLI::App* cmd, CltFlags const& f, int workers, std::ostream& out)
{
    ExperimentConfig config;
    CltFlags eff = f;
    if (!f.campaign.config.empty())
    {
        reject_mixed_config(cmd, {"--out"});
        json const cfg
            = config_section(read_json_file(f.campaign.config), "clt");
        config = campaign_from_json(cfg);
        eff.variance_source = get_field<std::string>(cfg, "variance_source");
        eff.centering = get_field<std::string>(cfg, "centering");
        eff.no_jitter = !get_field<bool>(cfg, "jitter");
        eff.qmax = get_field<int>(cfg, "qmax");
        eff.tail = get_field<double>(cfg, "tail");
    }
    else
    {
        config = campaign_from_flags(f.campaign);
    }
    if (config.K_list.size() != 1)
        throw UsageError("clt takes exactly one --K");
    if (config.replicates < min_clt_replicates)
        throw UsageError("clt needs --reps >= "
                         + std::to_string(min_clt_replicates));
    if (eff.variance_source != "empirical" && eff.variance_source != "chaos")
        throw UsageError("--variance-source must be empirical or chaos");
    if (eff.centering != "sample" && eff.centering != "rice")
        throw UsageError("--centering must be sample or rice");
    config.validate();
    int const K = config.K_list.front();

    CltOptions opts;
    opts.seed = config.seed;
    opts.jitter = !eff.no_jitter;
    if (eff.variance_source == "chaos")
    {
        opts.variance_source = VarianceSource::chaos_constant;
        opts.chaos_constant = total_variance_constant(eff.qmax, eff.tail).value;
    }
    if (eff.centering == "rice")
    {
        opts.centering = Centering::rice_mean;
        opts.rice_mean
            = rice_mean(K, to_rescaled(config.interval.resolve(K, config.alpha),
                                       K))
                  .value;
    }

    CampaignResult const result = run_campaign(config, workers);
    std::vector<double> counts;
    counts.reserve(result.records.size());
    for (auto const& r : result.records)
    {
        if (!r.excluded())
            counts.push_back(static_cast<double>(r.count));
    }
    NormalityReport const rep = clt_test(counts, K, opts);
    HistogramBins const hist
        = standardized_histogram(rep.standardized, rep.variance);

    json j;
    j["K"] = K;
    j["replicates"] = rep.n;
    j["variance_source"] = eff.variance_source;
    j["centering"] = eff.centering;
    j["jitter"] = opts.jitter;
    j["center"] = rep.center;
    j["variance"] = rep.variance;
    j["ks_statistic"] = rep.ks.statistic;
    j["p_value"] = rep.ks.p_value;
    j["ks_statistic_unjittered"] = rep.ks_raw.statistic;
    j["p_value_unjittered"] = rep.ks_raw.p_value;
    j["anderson_darling"] = rep.anderson_darling;
    j["skewness"] = rep.skewness;
    j["excess_kurtosis"] = rep.excess_kurtosis;
    j["summary"] = summary_row(result.summaries.front());

    if (!f.campaign.out.empty())
    {
        std::ostringstream zs;
        zs << "z\n";
        for (double z : rep.standardized)
            zs << fmt(z) << '\n';
        std::ostringstream hs;
        hs << "bin_lo,bin_hi,count\n";
        double const width
            = (hist.hi - hist.lo) / static_cast<double>(hist.counts.size());
        for (std::size_t i = 0; i < hist.counts.size(); ++i)
        {
            hs << fmt(hist.lo + width * i) << ','
               << fmt(hist.lo + width * (i + 1)) << ',' << hist.counts[i]
               << '\n';
        }
        json cfg = campaign_config_json(config);
        cfg["variance_source"] = eff.variance_source;
        cfg["centering"] = eff.centering;
        cfg["jitter"] = opts.jitter;
        cfg["qmax"] = eff.qmax;
        cfg["tail"] = eff.tail;

        OutputDir dir(f.campaign.out);
        dir.write("clt_report.json", j.dump(2) + "\n");
        dir.write("standardized.csv", zs.str());
        dir.write("histogram.csv", hs.str());
        dir.write("records.csv", records_csv(result.records));
        dir.write("manifest.json", manifest("clt", cfg).dump(2) + "\n");
        dir.commit();
    }
    out << j.dump(2) << '\n';
    return exit_success;
}

//---------------------------------------------------------------------------//
struct OracleFlags
{
    std::vector<int> K{5, 10, 20};
    std::size_t reps = 1000;
    std::uint64_t seed = 0;
};

int cmd_oracle_check(OracleFlags const& f, std::ostream& out)
{
    if (f.reps < 1)
        throw UsageError("--reps must be >= 1");
    json rows = json::array();
    bool all_ok = true;
    for (int K : f.K)
    {
        if (K < 1 || K > max_eigen_degree)
            throw UsageError("oracle-check: K must lie in [1, "
                             + std::to_string(max_eigen_degree) + "]");
        std::vector<char> count_ok(f.reps), doubling_ok(f.reps);
        std::vector<double> root_diff(f.reps);
        auto const n = static_cast<std::ptrdiff_t>(f.reps);
#pragma omp parallel for schedule(dynamic, 8)
        for (std::ptrdiff_t i = 0; i < n; ++i)
        {
            CoefficientVector const c
                = draw_coefficients(K, Ensemble::cosine, f.seed, i);
            auto const scan = count_zeros_scan(c, {0, pi});
            auto const eig = count_zeros_eigen(c, {0, pi});
            auto const full = count_zeros_scan(c, {0, 2 * pi});
            count_ok[i] = scan.count == eig.count;
            doubling_ok[i] = full.count == 2 * scan.count;
            double d = 0;
            if (count_ok[i])
            {
                for (std::size_t k = 0; k < scan.count; ++k)
                    d = std::max(d, std::abs(scan.roots[k] - eig.roots[k]));
            }
            root_diff[i] = d;
        }
        auto const mismatches = std::count(count_ok.begin(), count_ok.end(), 0);
        auto const doubling = std::count(doubling_ok.begin(), doubling_ok.end(), 0);
        double const max_diff
            = *std::max_element(root_diff.begin(), root_diff.end());
        bool const ok = mismatches == 0 && doubling == 0 && max_diff < 1e-8;
        all_ok = all_ok && ok;
        rows.push_back({{"K", K},
                        {"replicates", f.reps},
                        {"count_mismatches", mismatches},
                        {"doubling_failures", doubling},
                        {"max_root_difference", max_diff},
                        {"ok", ok}});
    }
    json j{{"seed", f.seed}, {"rows", rows}, {"ok", all_ok}};
    out << j.dump(2) << '\n';
    return all_ok ? exit_success : exit_numeric;
}

//---------------------------------------------------------------------------//
struct BoundsFlags
{
    std::vector<int> K{1, 10, 50, 100, 500};
    std::size_t points = 2000;
};

int cmd_bounds_check(BoundsFlags const& f, std::ostream& out)
{
    if (f.points < 2)
        throw UsageError("--points must be >= 2");
    json rows = json::array();
    bool all_ok = true;
    for (int K : f.K)
    {
        if (K < 1)
            throw UsageError("bounds-check: K must be >= 1");
        double const top = K * pi;
        double const bottom = std::min(0.01, top);
        std::vector<double> tau(f.points);
        for (std::size_t i = 0; i < f.points; ++i)
        {
            double const u = static_cast<double>(i) / (f.points - 1);
            tau[i] = bottom * std::pow(top / bottom, u);
        }
        tau.back() = top;
        BoundsReport const rep = kernel_bounds_check(K, tau);

        // V_K^2(t) <= (1 + pi/(2t)) / 2 where 2t stays in (0, K pi]
        Kernel const kern = Kernel::cosine_ensemble(K);
        std::size_t var_checked = 0;
        json var_violation = nullptr;
        for (double t : tau)
        {
            if (t < 0.5 || t > top / 2)
                continue;
            ++var_checked;
            double const v2 = kern(t, t);
            double const bound = 0.5 * (1 + pi / (2 * t));
            if (v2 > bound * (1 + 1e-12) && var_violation.is_null())
                var_violation = {{"t", t}, {"value", v2}, {"bound", bound}};
        }

        json row{{"K", K},
                 {"points", rep.points_checked},
                 {"ok", rep.ok() && var_violation.is_null()}};
        if (rep.violation)
        {
            row["violation"] = {{"tau", rep.violation->tau},
                                {"which", rep.violation->which},
                                {"value", rep.violation->value},
                                {"bound", rep.violation->bound}};
        }
        row["variance_points"] = var_checked;
        row["variance_domain"] = {0.5, top / 2};
        if (!var_violation.is_null())
            row["variance_violation"] = var_violation;
        all_ok = all_ok && row["ok"].get<bool>();
        rows.push_back(row);
    }
    json j{{"rows", rows}, {"ok", all_ok}};
    out << j.dump(2) << '\n';
    return all_ok ? exit_success : exit_numeric;
}
}  // namespace

//---------------------------------------------------------------------------//
std::string version()
{
    return TRIGZERO_VERSION;
}

int threads_from_env()
{
    char const* env = std::getenv("TRIGZERO_THREADS");
    if (!env || !*env)
        return 0;
    char* end = nullptr;
    long const n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 0 || n > 4096)
        throw UsageError(std::string("TRIGZERO_THREADS must be a "
                                     "non-negative integer, got '")
                         + env + "'");
    return static_cast<int>(n);
}

int run(std::vector<std::string> const& args,
        std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"Zeros of random trigonometric polynomials", "trigzero"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version());

    CampaignFlags sim;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo zero counts");
    add_campaign_flags(simulate, sim, true);

    RiceFlags rice;
    auto* rice_cmd = app.add_subcommand("rice", "Kac-Rice moments");
    rice_cmd->add_option("--K", rice.K, "Polynomial degree")->required();
    rice_cmd->add_option("--moment", rice.moment, "1 (mean) or 2")
        ->check(CLI::IsMember({1, 2}));
    rice_cmd->add_option("--interval", rice.interval,
                         "lo:hi in units of pi, or 'window'");
    rice_cmd->add_option("--alpha", rice.alpha, "Window exponent");

    ChaosFlags chaos;
    auto* chaos_cmd
        = app.add_subcommand("chaos-var", "Chaos variance constants");
    chaos_cmd->add_option("--qmax", chaos.qmax, "Highest chaos order");
    chaos_cmd->add_option("--tail", chaos.tail, "Lag cutoff");
    chaos_cmd->add_option("--out", chaos.out, "Output directory");

    CltFlags clt;
    auto* clt_cmd = app.add_subcommand("clt", "Normality of standardized counts");
    add_campaign_flags(clt_cmd, clt.campaign, false);
    clt_cmd->add_option("--variance-source", clt.variance_source,
                        "empirical or chaos");
    clt_cmd->add_option("--centering", clt.centering, "sample or rice");
    clt_cmd->add_flag("--no-jitter", clt.no_jitter,
                      "Test the lattice counts without spreading");
    clt_cmd->add_option("--qmax", clt.qmax, "Chaos order for --variance-source chaos");
    clt_cmd->add_option("--tail", clt.tail, "Lag cutoff for --variance-source chaos");

    OracleFlags oracle;
    auto* oracle_cmd = app.add_subcommand(
        "oracle-check", "Scan counts against the eigenvalue oracle");
    oracle_cmd->add_option("--K", oracle.K, "Degrees (repeatable)");
    oracle_cmd->add_option("--reps", oracle.reps, "Replicates per degree");
    oracle_cmd->add_option("--seed", oracle.seed, "Seed");

    BoundsFlags bounds;
    auto* bounds_cmd = app.add_subcommand(
        "bounds-check", "Covariance decay inequalities");
    bounds_cmd->add_option("--K", bounds.K, "Degrees (repeatable)");
    bounds_cmd->add_option("--points", bounds.points, "Grid size per degree");

    std::vector<std::string> argv_store{"trigzero"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_store)
        argv.push_back(a.c_str());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::CallForHelp const& e)
    {
        out << app.help();
        return exit_success;
    }
    catch (CLI::CallForVersion const&)
    {
        out << version() << '\n';
        return exit_success;
    }
    catch (CLI::ParseError const& e)
    {
        err << "trigzero: " << e.what() << '\n';
        return exit_usage;
    }

    try
    {
        int const workers = threads_from_env();
        if (workers > 0)
            omp_set_num_threads(workers);
        if (simulate->parsed())
            return cmd_simulate(simulate, sim, workers, out);
        if (rice_cmd->parsed())
            return cmd_rice(rice, out);
        if (chaos_cmd->parsed())
            return cmd_chaos_var(chaos, out);
        if (clt_cmd->parsed())
            return cmd_clt(clt_cmd, clt, workers, out);
        if (oracle_cmd->parsed())
            return cmd_oracle_check(oracle, out);
        if (bounds_cmd->parsed())
            return cmd_bounds_check(bounds, out);
    }
    catch (UsageError const& e)
    {
        err << "trigzero: usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (IoError const& e)
    {
        err << "trigzero: io error: " << e.what() << '\n';
        return exit_io;
    }
    catch (NumericError const& e)
    {
        err << "trigzero: numeric error: " << e.what() << '\n';
        return exit_numeric;
    }
    return exit_usage;
}

}  // namespace trigzero::cli
