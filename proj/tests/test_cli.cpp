//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/test_cli.cpp
//---------------------------------------------------------------------------//
#include "trigzero/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>
#include <gtest/gtest.h>
#include <json.hpp>

#include "trigzero/errors.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using trigzero::cli::run;

namespace
{
struct Output
{
    int code;
    std::string out;
    std::string err;
};

Output invoke(std::vector<std::string> const& args)
{
    std::ostringstream out, err;
    int const code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(fs::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::vector<std::string>> read_csv(fs::path const& p)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(slurp(p));
    std::string line;
    while (std::getline(in, line))
    {
        std::vector<std::string> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            row.push_back(cell);
        rows.push_back(row);
    }
    return rows;
}

class CliTest : public ::testing::Test
{
  protected:
    void SetUp() override
    {
        auto const* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path()
               / (std::string("trigzero_cli_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
};
}  // namespace

//---------------------------------------------------------------------------//
TEST_F(CliTest, simulate_single_cosine)
{
    auto const out = dir_ / "k1";
    auto const r = invoke({"simulate", "--K", "1", "--reps", "10", "--out",
                           out.string()});
    ASSERT_EQ(0, r.code) << r.err;
    auto const rows = read_csv(out / "records.csv");
    ASSERT_EQ(11u, rows.size());
    EXPECT_EQ((std::vector<std::string>{"replicate", "K", "seed", "count",
                                        "method", "warnings"}),
              rows[0]);
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        EXPECT_EQ(std::to_string(i - 1), rows[i][0]);
        EXPECT_EQ("1", rows[i][3]);
        EXPECT_EQ("scan_bisect", rows[i][4]);
    }
    auto const summary = json::parse(slurp(out / "summary.json"));
    EXPECT_EQ(0.0, summary["rows"][0]["variance"].get<double>());
    EXPECT_TRUE(fs::exists(out / "manifest.json"));
    EXPECT_EQ(summary, json::parse(r.out));
}

TEST_F(CliTest, simulate_is_byte_identical)
{
    std::vector<std::string> args{"simulate", "--K", "200", "--reps", "4000",
                                  "--seed", "7", "--out"};
    auto a = args, b = args;
    a.push_back((dir_ / "a").string());
    b.push_back((dir_ / "b").string());
    ASSERT_EQ(0, invoke(a).code);
    ASSERT_EQ(0, invoke(b).code);
    EXPECT_EQ(slurp(dir_ / "a" / "records.csv"),
              slurp(dir_ / "b" / "records.csv"));
    EXPECT_EQ(slurp(dir_ / "a" / "summary.json"),
              slurp(dir_ / "b" / "summary.json"));
}

TEST_F(CliTest, simulate_two_degrees)
{
    auto const r = invoke({"simulate", "--K", "100", "--K", "200", "--reps",
                           "20", "--out", (dir_ / "two").string()});
    ASSERT_EQ(0, r.code) << r.err;
    auto const summary = json::parse(r.out);
    ASSERT_EQ(2u, summary["rows"].size());
    EXPECT_EQ(100, summary["rows"][0]["K"].get<int>());
    EXPECT_EQ(200, summary["rows"][1]["K"].get<int>());
    EXPECT_EQ(41u, read_csv(dir_ / "two" / "records.csv").size());
}

TEST_F(CliTest, manifest_round_trip)
{
    auto const first = dir_ / "first";
    ASSERT_EQ(0, invoke({"simulate", "--K", "30", "--K", "70", "--reps", "50",
                         "--seed", "99", "--interval", "window", "--alpha",
                         "0.2", "--ensemble", "stationary", "--out",
                         first.string()})
                     .code);
    auto const second = dir_ / "second";
    auto const r = invoke({"simulate", "--config",
                           (first / "manifest.json").string(), "--out",
                           second.string()});
    ASSERT_EQ(0, r.code) << r.err;
    EXPECT_EQ(slurp(first / "records.csv"), slurp(second / "records.csv"));
    EXPECT_EQ(slurp(first / "summary.json"), slurp(second / "summary.json"));
    EXPECT_EQ(slurp(first / "manifest.json"), slurp(second / "manifest.json"));
    auto const m = json::parse(slurp(first / "manifest.json"));
    EXPECT_EQ("simulate", m["command"].get<std::string>());
    EXPECT_EQ(trigzero::cli::version(), m["version"].get<std::string>());
    EXPECT_EQ(99u, m["config"]["seed"].get<std::uint64_t>());

    EXPECT_EQ(2, invoke({"simulate", "--config",
                         (first / "manifest.json").string(), "--K", "5"})
                     .code);
}

TEST_F(CliTest, usage_errors)
{
    EXPECT_EQ(2, invoke({}).code);
    EXPECT_EQ(2, invoke({"frobnicate"}).code);
    EXPECT_EQ(2, invoke({"simulate", "--reps", "10"}).code);
    EXPECT_EQ(2, invoke({"simulate", "--K", "10"}).code);
    EXPECT_EQ(2, invoke({"simulate", "--K", "10", "--reps", "1"}).code);
    EXPECT_EQ(2, invoke({"simulate", "--K", "10", "--reps", "5", "--interval",
                         "0:7pi"})
                     .code);
    EXPECT_EQ(2, invoke({"simulate", "--K", "10", "--reps", "5", "--ensemble",
                         "uniform"})
                     .code);
    EXPECT_EQ(2, invoke({"rice", "--K", "10", "--moment", "3"}).code);
    EXPECT_EQ(2, invoke({"clt", "--K", "50", "--reps", "100"}).code);
    EXPECT_EQ(2, invoke({"clt", "--K", "50", "--K", "60", "--reps", "600"}).code);
    EXPECT_EQ(0, invoke({"--version"}).code);
    EXPECT_EQ(0, invoke({"--help"}).code);
}

TEST_F(CliTest, io_error_leaves_no_partial_output)
{
    auto const blocker = dir_ / "file";
    std::ofstream(blocker) << "x";
    auto const r = invoke({"simulate", "--K", "5", "--reps", "5", "--out",
                           (blocker / "sub").string()});
    EXPECT_EQ(4, r.code);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(4, invoke({"simulate", "--config",
                         (dir_ / "missing.json").string()})
                     .code);
}

TEST_F(CliTest, numeric_error_exit_code)
{
    // Every count of a single cosine is 1, so the standardized sample is flat
    auto const r = invoke({"clt", "--K", "1", "--reps", "500"});
    EXPECT_EQ(3, r.code);
    EXPECT_NE(std::string::npos, r.err.find("numeric"));
}

TEST_F(CliTest, threads_environment)
{
    ::setenv("TRIGZERO_THREADS", "two", 1);
    EXPECT_THROW(trigzero::cli::threads_from_env(), trigzero::UsageError);
    EXPECT_EQ(2, invoke({"simulate", "--K", "5", "--reps", "5"}).code);
    ::setenv("TRIGZERO_THREADS", "3", 1);
    EXPECT_EQ(3, trigzero::cli::threads_from_env());
    ::unsetenv("TRIGZERO_THREADS");
    EXPECT_EQ(0, trigzero::cli::threads_from_env());
}

//---------------------------------------------------------------------------//
TEST_F(CliTest, rice_examples)
{
    auto const a = invoke({"rice", "--K", "300", "--moment", "1", "--interval",
                           "0:pi"});
    ASSERT_EQ(0, a.code) << a.err;
    double const v300 = json::parse(a.out)["value"].get<double>();
    EXPECT_NEAR(1.0, v300 / (300 / std::sqrt(3.0)), 0.003);
    EXPECT_NEAR(173.3, v300, 0.5);

    auto const b = invoke({"rice", "--K", "100", "--moment", "1",
                           "--interval", "0:2pi"});
    ASSERT_EQ(0, b.code) << b.err;
    auto const jb = json::parse(b.out);
    EXPECT_NEAR(116.2, jb["value"].get<double>(), 0.5);
    EXPECT_TRUE(jb.contains("error_estimate"));

    auto const c = invoke({"rice", "--K", "20", "--moment", "2", "--interval",
                           "window", "--alpha", "0.25"});
    ASSERT_EQ(0, c.code) << c.err;
    auto const jc = json::parse(c.out);
    EXPECT_GT(jc["value"].get<double>(), 0.0);
    EXPECT_GT(jc["variance"].get<double>(), 0.0);
}

TEST_F(CliTest, chaos_var_examples)
{
    auto const one = invoke({"chaos-var", "--qmax", "1", "--tail", "1000"});
    ASSERT_EQ(0, one.code) << one.err;
    EXPECT_EQ(0.0, json::parse(one.out)["value"].get<double>());

    auto const out = dir_ / "chaos";
    auto const q20 = invoke({"chaos-var", "--qmax", "20", "--tail", "10000",
                             "--out", out.string()});
    ASSERT_EQ(0, q20.code) << q20.err;
    auto const j20 = json::parse(q20.out);
    double const v20 = j20["value"].get<double>();
    EXPECT_GE(v20, 0.084);
    EXPECT_LE(v20, 0.094);

    auto const q10 = invoke({"chaos-var", "--qmax", "10", "--tail", "10000"});
    ASSERT_EQ(0, q10.code);
    EXPECT_LT(std::abs(v20 - json::parse(q10.out)["value"].get<double>()),
              1e-3);

    // CSV floats round-trip exactly to the JSON values
    auto const rows = read_csv(out / "chaos_terms.csv");
    ASSERT_EQ(21u, rows.size());
    EXPECT_EQ("sigma_sq", rows[0][1]);
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        double const csv = std::strtod(rows[i][1].c_str(), nullptr);
        EXPECT_EQ(j20["terms"][i - 1]["sigma_sq"].get<double>(), csv);
    }
    EXPECT_EQ(j20, json::parse(slurp(out / "chaos_summary.json")));
}

TEST_F(CliTest, clt_outputs)
{
    auto const out = dir_ / "clt";
    auto const r = invoke({"clt", "--K", "500", "--reps", "2000", "--seed",
                           "3", "--out", out.string()});
    ASSERT_EQ(0, r.code) << r.err;
    auto const rep = json::parse(slurp(out / "clt_report.json"));
    EXPECT_TRUE(rep.contains("p_value"));
    EXPECT_TRUE(rep.contains("ks_statistic"));
    EXPECT_TRUE(rep.contains("skewness"));
    EXPECT_TRUE(rep.contains("excess_kurtosis"));

    auto const hist = read_csv(out / "histogram.csv");
    ASSERT_EQ(52u, hist.size());
    std::size_t total = 0;
    for (std::size_t i = 1; i < hist.size(); ++i)
        total += std::stoul(hist[i].back());
    EXPECT_EQ(2000u, total);

    auto const z = read_csv(out / "standardized.csv");
    EXPECT_EQ(2001u, z.size());
    EXPECT_EQ(1u, z[1].size());
    EXPECT_EQ(2001u, read_csv(out / "records.csv").size());

    auto const again = dir_ / "again";
    ASSERT_EQ(0, invoke({"clt", "--config", (out / "manifest.json").string(),
                         "--out", again.string()})
                     .code);
    EXPECT_EQ(slurp(out / "clt_report.json"), slurp(again / "clt_report.json"));
}

TEST_F(CliTest, oracle_and_bounds_checks)
{
    auto const o = invoke({"oracle-check", "--K", "5", "--K", "10", "--reps",
                           "200"});
    ASSERT_EQ(0, o.code) << o.err;
    auto const jo = json::parse(o.out);
    EXPECT_TRUE(jo["ok"].get<bool>());
    EXPECT_EQ(0, jo["rows"][0]["count_mismatches"].get<int>());
    EXPECT_EQ(2, invoke({"oracle-check", "--K", "300"}).code);

    auto const b = invoke({"bounds-check"});
    ASSERT_EQ(0, b.code) << b.out;
    EXPECT_TRUE(json::parse(b.out)["ok"].get<bool>());
}
