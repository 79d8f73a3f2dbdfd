//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/test_cli.cpp
//---------------------------------------------------------------------------//
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <gtest/gtest.h>

#include "config.hpp"
#include "runner.hpp"

using namespace softgrav_cli;

namespace
{
using Args = std::vector<std::string>;

struct Captured
{
    int code;
    std::string out;
    std::string err;
};

Captured run_args(Args const& args)
{
    std::ostringstream out, err;
    int const code = run_main(args, out, err);
    return {code, out.str(), err.str()};
}

Record single_record(std::string const& text)
{
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    return Record::parse(line);
}

std::string usage_key(Args const& args, std::optional<std::string> file = {})
{
    try
    {
        parse_config(args, file);
    }
    catch (UsageError const& e)
    {
        return e.key().empty() ? std::string("<none>") : e.key();
    }
    return "<accepted>";
}

int system_exit(std::string const& cmd)
{
    int const status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
}  // namespace

//---------------------------------------------------------------------------//
TEST(Parse, DfuncFlag)
{
    auto const cfg = parse_config({"dfunc", "--x", "1"});
    EXPECT_EQ(cfg.command, "dfunc");
    ASSERT_EQ(cfg.params.size(), 1u);
    EXPECT_EQ(cfg.params.at("x"), 1);
    EXPECT_EQ(cfg.format, "json");
    EXPECT_EQ(cfg.rel_tol, 1e-8);
}

TEST(Parse, XcoeffFlags)
{
    auto const cfg = parse_config({"xcoeff", "--v", "0.5", "--delta", "0",
                                   "--gm2", "1"});
    EXPECT_EQ(cfg.command, "xcoeff");
    EXPECT_EQ(cfg.params.at("v"), 0.5);
    EXPECT_EQ(cfg.params.at("delta"), 0);
    EXPECT_EQ(cfg.params.at("gm2"), 1);
}

TEST(Parse, FlagsOverrideFile)
{
    auto const cfg = parse_config({"xcoeff", "--v", "0.5"},
                                  "# comment\nv = 0.3\ndelta=0.1  # trailing\n");
    EXPECT_EQ(cfg.params.at("v"), 0.5);
    EXPECT_EQ(cfg.params.at("delta"), 0.1);
}

TEST(Parse, DefaultsAreExplicit)
{
    auto const cfg = parse_config({"emission", "--Q", "1", "--theta", "0.5"});
    EXPECT_EQ(cfg.params.at("G"), 1);
    EXPECT_EQ(cfg.params.at("m"), 1);
    EXPECT_EQ(cfg.params.at("m0sq"), 1);
    EXPECT_EQ(cfg.params.at("lambda-ir"), 1e-6);
    EXPECT_EQ(cfg.params.at("lambda-uv"), 1);
    EXPECT_EQ(cfg.method, "closed");
}

TEST(Parse, CouplingFoldsIntoGm2)
{
    auto const cfg = parse_config({"xcoeff", "--v", "0.5", "--delta", "0",
                                   "--G", "2", "--m", "3"});
    EXPECT_EQ(cfg.params.at("gm2"), 18);
    EXPECT_EQ(cfg.params.count("G"), 0u);
    EXPECT_EQ(usage_key({"xcoeff", "--v", "0.5", "--delta", "0", "--G", "2",
                         "--gm2", "1"}),
              "gm2");
}

TEST(Parse, OffendingKeysAreNamed)
{
    EXPECT_EQ(usage_key({"dfunc"}), "x");
    EXPECT_EQ(usage_key({"dfunc", "--x", "abc"}), "x");
    EXPECT_EQ(usage_key({"dfunc", "--x", "1.5e"}), "x");
    EXPECT_EQ(usage_key({"dfunc", "--x", "nan"}), "x");
    EXPECT_EQ(usage_key({"dfunc"}, "x=1\nbogus=2\n"), "bogus");
    EXPECT_EQ(usage_key({"dfunc"}, "x=1\nv=2\n"), "v");
    EXPECT_EQ(usage_key({"xcoeff", "--v", "0.5", "--delta", "0", "--rel-tol",
                         "-1"}),
              "rel-tol");
    EXPECT_EQ(usage_key({"emission", "--Q", "1", "--theta", "1", "--lambda-ir",
                         "2"}),
              "lambda-ir");
    EXPECT_EQ(usage_key({"nu", "--regime", "fast", "--delta", "0.1"}), "regime");
    EXPECT_EQ(usage_key({"xcoeff", "--v", "0.5", "--delta", "0", "--method",
                         "closed"}),
              "method");
    EXPECT_EQ(usage_key({"dfunc", "--x", "1", "--format", "xml"}), "format");
    EXPECT_EQ(usage_key({"dfunc"}, "x\n"), "<none>");
    EXPECT_EQ(usage_key({"dfunc"}, "x=1\nx=2\n"), "x");
    // unknown command and unknown flag are rejected by the parser itself
    EXPECT_EQ(usage_key({"bogus"}), "command");
    EXPECT_EQ(usage_key({"dfunc", "--x", "1", "--y", "2"}), "y");
}

TEST(Parse, SweepGrid)
{
    auto const cfg = parse_config(
        {"sweep", "--over", "nu", "--regime", "rel", "--param", "delta",
         "--from", "0.1", "--to", "0.3", "--steps", "3", "--gamma", "10"});
    EXPECT_EQ(cfg.target(), "nu");
    ASSERT_EQ(cfg.axes.size(), 1u);
    EXPECT_EQ(cfg.format, "csv");
    auto const values = axis_values(cfg.axes[0], cfg.spacing);
    ASSERT_EQ(values.size(), 3u);
    EXPECT_EQ(values.front(), 0.1);
    EXPECT_EQ(values.back(), 0.3);
    EXPECT_EQ(usage_key({"sweep", "--over", "nu", "--param", "delta", "--from",
                         "0.1", "--to", "0.3", "--gamma", "10"}),
              "param");
    EXPECT_EQ(usage_key({"sweep", "--over", "sweep", "--param", "x"}), "over");
}

//---------------------------------------------------------------------------//
TEST(Run, NonRelativisticExponent)
{
    auto const r = run_args({"nu", "--regime", "nonrel", "--gm2", "1", "--v",
                             "0.1", "--delta", "1.5707963"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto const rec = single_record(r.out);
    EXPECT_NEAR(rec["outputs"]["value"].get<double>(), 2.9709e-5, 1e-8);
    EXPECT_EQ(rec["status"], "ok");
    EXPECT_FALSE(rec["version"].get<std::string>().empty());
}

TEST(Run, Ratio)
{
    auto const r = run_args({"ratio", "--t1", "10", "--t2", "1", "--nu", "0.1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(single_record(r.out)["outputs"]["value"].get<double>(),
                0.794328, 1e-6);
}

TEST(Run, XcoeffQuadrature)
{
    auto const r = run_args({"xcoeff", "--v", "0.5", "--delta", "0", "--gm2",
                             "1"});
    ASSERT_EQ(r.code, 0);
    auto const out = single_record(r.out)["outputs"];
    double const value = out["value"].get<double>();
    EXPECT_NEAR(value, 0.031827989994105523, 1e-9);
    EXPECT_LE(out["error_estimate"].get<double>(), 1e-7);
    EXPECT_NEAR(out["closed_form"].get<double>(), value, 1e-9);
}

TEST(Run, EchoesEveryInput)
{
    auto const r = run_args({"emission", "--Q", "1", "--theta", "0.5",
                             "--method", "quadrature"});
    ASSERT_EQ(r.code, 0);
    auto const rec = single_record(r.out);
    auto const& in = rec["inputs"];
    for (char const* key : {"Q", "theta", "m", "G", "m0sq", "lambda-ir",
                            "lambda-uv", "rel_tol", "abs_tol", "method"})
    {
        EXPECT_TRUE(in.contains(key)) << key;
    }
    auto const& out = rec["outputs"];
    for (char const* key : {"value", "bracket", "prefactor", "log_factor",
                            "error_estimate", "convention_tag"})
    {
        EXPECT_TRUE(out.contains(key)) << key;
    }
    EXPECT_EQ(out["convention_tag"], "kappa2_over_2pi2");
}

TEST(Run, JsonRoundTrip)
{
    auto const r = run_args({"interference", "--Q", "0.7", "--theta",
                             "1.234567890123", "--phi", "0.1", "--m1m2-re",
                             "0.3"});
    ASSERT_EQ(r.code, 0);
    auto const rec = single_record(r.out);
    EXPECT_EQ(Record::parse(rec.dump()), rec);

    // Re-run from the echoed inputs: bit-identical output
    RunConfig cfg = parse_config({"interference", "--Q", "1", "--theta", "1",
                                  "--phi", "1"});
    cfg.params.clear();
    for (auto const& [key, value] : rec["inputs"].items())
    {
        if (value.is_number())
            cfg.params[key] = value.get<double>();
    }
    EXPECT_EQ(cfg.params.at("theta"), 1.234567890123);
    auto const again = evaluate(cfg, cfg.params);
    EXPECT_EQ(again["outputs"]["value"].get<double>(),
              rec["outputs"]["value"].get<double>());
    EXPECT_EQ(again.dump(), rec.dump());
}

TEST(Run, NumberFormatting)
{
    for (double x : {0.1, 1.0 / 3, 1e-300, 6.02214076e23, -2.5, 0.0})
    {
        std::string const s = format_number(x);
        EXPECT_EQ(std::strtod(s.c_str(), nullptr), x) << s;
    }
}

//---------------------------------------------------------------------------//
TEST(Run, ExitCodes)
{
    EXPECT_EQ(run_args({"dfunc", "--x", "2"}).code, 0);

    auto const fail = run_args({"dfunc", "--x", "0.5"});
    EXPECT_EQ(fail.code, 1);
    auto const rec = single_record(fail.out);
    EXPECT_EQ(rec["status"], "domain_error");
    EXPECT_FALSE(rec["error"].get<std::string>().empty());

    auto const usage = run_args({"dfunc", "--x", "oops"});
    EXPECT_EQ(usage.code, 2);
    auto const err = single_record(usage.err);
    EXPECT_EQ(err["status"], "usage_error");
    EXPECT_EQ(err["key"], "x");

    auto const help = run_args({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("sweep"), std::string::npos);
}

TEST(Run, PartialSweepFailureExitsNonZero)
{
    // x < 1 is outside the domain: those rows fail, the rest still appear
    auto const r = run_args({"sweep", "--over", "dfunc", "--param", "x",
                             "--from", "0.5", "--to", "2", "--steps", "4",
                             "--format", "json"});
    EXPECT_EQ(r.code, 1);
    std::istringstream in(r.out);
    std::vector<std::string> status;
    for (std::string line; std::getline(in, line);)
        status.push_back(Record::parse(line)["status"].get<std::string>());
    EXPECT_EQ(status, (std::vector<std::string>{"domain_error", "ok", "ok",
                                                "ok"}));
}

TEST(Run, ExecutableExitCodes)
{
    std::string const exe = SOFTGRAV_CLI_PATH;
    EXPECT_EQ(system_exit(exe + " dfunc --x 2"), 0);
    EXPECT_EQ(system_exit(exe + " dfunc --x 0.5"), 1);
    EXPECT_EQ(system_exit(exe + " dfunc"), 2);
    EXPECT_EQ(system_exit(exe + " nosuchcommand"), 2);
}

//---------------------------------------------------------------------------//
TEST(Csv, SweepLayout)
{
    auto const r = run_args({"sweep", "--over", "interference", "--param",
                             "phi", "--from", "0", "--to", "0.2", "--steps",
                             "3", "--param2", "Q", "--from2", "0.5", "--to2",
                             "1", "--steps2", "2", "--theta", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::vector<std::string> lines;
    std::string::size_type pos = 0;
    while (pos < r.out.size())
    {
        auto const end = r.out.find("\r\n", pos);
        ASSERT_NE(end, std::string::npos) << "lines must end in CRLF";
        lines.push_back(r.out.substr(pos, end - pos));
        pos = end + 2;
    }
    ASSERT_EQ(lines.size(), 7u);
    EXPECT_EQ(lines[0], "phi,Q,value,error_estimate,convention_tag,status");
    EXPECT_EQ(lines[1].substr(0, 10), "0,0.5,0,,k");
    EXPECT_EQ(lines[1].find("-0"), std::string::npos);
    EXPECT_EQ(lines[2].substr(0, 6), "0,1,0,");
    EXPECT_EQ(lines[3].substr(0, 8), "0.1,0.5,");
    for (std::size_t i = 1; i < lines.size(); ++i)
        EXPECT_EQ(lines[i].substr(lines[i].size() - 3), ",ok");
}

TEST(Csv, SingleEvaluationListsInputs)
{
    auto const r = run_args({"dfunc", "--x", "2", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find("\r\n")),
              "x,value,error_estimate,convention_tag,status");
}

TEST(Csv, OutputFileMatchesStdout)
{
    std::string const path = ::testing::TempDir() + "softgrav_cli_out.csv";
    auto const to_file = run_args({"sweep", "--config",
                                   std::string(SOFTGRAV_SWEEP_DIR)
                                       + "/dfunc_log.cfg",
                                   "--out", path});
    ASSERT_EQ(to_file.code, 0) << to_file.err;
    auto const to_stdout = run_args({"sweep", "--config",
                                     std::string(SOFTGRAV_SWEEP_DIR)
                                         + "/dfunc_log.cfg"});
    std::ifstream in(path, std::ios::binary);
    std::ostringstream contents;
    contents << in.rdbuf();
    EXPECT_EQ(contents.str(), to_stdout.out);
    std::remove(path.c_str());
}
