// Copyright 2026 The sepscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sepscope/io.hpp"
#include "test_support.hpp"

namespace sepscope {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "sepscope");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SEPSCOPE_TEST_DATA) + "/" + name; }

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("sepscope_cli_test_" + name);
}

TEST(Cli, AnalyzeRhoAlphaAtFour) {
    const auto r = run_cli({"analyze", "--family", "rho_alpha", "--alpha", "4", "--dim", "8"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("realignment trace norm  1.1567382201"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("ENTANGLED (norm > 1)"), std::string::npos);
    EXPECT_NE(r.out.find("inconclusive (criterion is necessary-only)"), std::string::npos);
}

TEST(Cli, AnalyzeBellFile) {
    const auto r = run_cli({"analyze", "--file", data("bell.mat"), "--csv", "-"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    EXPECT_EQ(header, kReportCsvHeader);
    EXPECT_NE(row.find(",2,2,-0.5,true,entangled,entangled"), std::string::npos) << row;
}

TEST(Cli, AnalyzeWritesCsvFileAndHumanReport) {
    const auto path = temp_path("analyze.csv");
    const auto r = run_cli({"analyze", "--family", "werner_mc", "--m", "3", "--c", "-0.2", "--dim", "3", "--csv",
                            path.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("ppt                     ENTANGLED"), std::string::npos) << r.out;
    std::ifstream in(path);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(header, kReportCsvHeader);
    EXPECT_EQ(row.rfind("werner_mc,c=-0.2;m=3,3,0.866666666667,", 0), 0u) << row;
    std::filesystem::remove(path);
}

TEST(Cli, AnalyzeFromSpecFile) {
    const auto r = run_cli({"analyze", "--spec", data("rho_alpha.spec")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("1.1567382201"), std::string::npos);
}

TEST(Cli, AnalyzeWithoutInputIsUsageError) {
    const auto r = run_cli({"analyze"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("exactly one input"), std::string::npos);
    EXPECT_NE(r.err.find("Usage"), std::string::npos) << r.err;
}

TEST(Cli, AnalyzeWithTwoInputsIsUsageError) {
    EXPECT_EQ(run_cli({"analyze", "--file", data("bell.mat"), "--family", "rho_alpha", "--alpha", "3"}).code, 2);
}

TEST(Cli, InputErrorsExitTwo) {
    EXPECT_EQ(run_cli({"analyze", "--file", data("trace_point_nine.mat")}).code, 2);
    EXPECT_EQ(run_cli({"analyze", "--file", data("does_not_exist.mat")}).code, 2);
    EXPECT_EQ(run_cli({"analyze", "--family", "rho_alpha", "--alpha", "7"}).code, 2);
    EXPECT_EQ(run_cli({"analyze", "--family", "nope"}).code, 2);
    EXPECT_EQ(run_cli({"analyze", "--family", "rho_alpha", "--alpha", "3", "--c", "1"}).code, 2);
    const auto bad = run_cli({"analyze", "--file", data("report_golden.csv")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 1"), std::string::npos) << bad.err;
}

TEST(Cli, UnknownFlagsAndSubcommandsAreErrors) {
    EXPECT_EQ(run_cli({"analyze", "--family", "rho_alpha", "--alpha", "3", "--bogus", "1"}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
}

TEST(Cli, HelpAndVersionSucceed) {
    EXPECT_EQ(run_cli({"--help"}).code, 0);
    const auto v = run_cli({"--version"});
    EXPECT_EQ(v.code, 0);
    EXPECT_FALSE(v.out.empty());
}

TEST(Cli, SweepRhoAlphaGrid) {
    const auto r = run_cli({"sweep", "--family", "rho_alpha", "--grid", "alpha:2:5:7", "--dim", "4"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, kReportCsvHeader);
    int rows = 0;
    const double alphas[] = {2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0};
    while (std::getline(lines, line)) {
        const auto expected = format_number(rho_alpha_norm_formula(alphas[rows]));
        EXPECT_NE(line.find("," + expected + ","), std::string::npos) << line << " vs " << expected;
        ++rows;
    }
    EXPECT_EQ(rows, 7);
}

TEST(Cli, SweepWernerPhaseBoundaries) {
    const auto r = run_cli({"sweep", "--family", "werner_mc", "--m", "3", "--grid", "c:-1:1:21", "--dim", "3,4"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        const bool negative_c = line.find("c=-") != std::string::npos;
        EXPECT_EQ(line.find(",entangled") != std::string::npos && line.rfind(",entangled") + 10 == line.size(),
                  negative_c)
            << line;
    }
    EXPECT_EQ(rows, 42);
}

TEST(Cli, SweepToFileAndMultipleDims) {
    const auto path = temp_path("sweep.csv");
    const auto r = run_cli({"sweep", "--family", "rho_t_alpha", "--alpha", "4", "--grid", "t:0.1:0.9:3", "--dim",
                            "6,8,12", "--csv", path.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("wrote 9 rows"), std::string::npos) << r.out;
    std::filesystem::remove(path);
}

TEST(Cli, SweepGridErrors) {
    EXPECT_EQ(run_cli({"sweep", "--family", "rho_alpha", "--grid", "alpha:2:5:0"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--family", "rho_alpha", "--grid", "alpha:2:5"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--family", "rho_alpha", "--grid", "alpha:two:5:3"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--family", "rho_alpha", "--grid", "beta:2:5:3"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--family", "rho_alpha", "--grid", "alpha:2:5:3", "--dim", "8,6"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--family", "rho_alpha", "--grid", "alpha:6:7:2"}).code, 2);
}

TEST(Cli, GenerateRoundTripsThroughAnalyze) {
    const auto path = temp_path("generated.mat");
    const auto g = run_cli({"generate", "--family", "werner_mc", "--m", "3", "--c", "-1", "--dim", "3", "-o",
                            path.string()});
    EXPECT_EQ(g.code, 0) << g.err;
    const auto a = run_cli({"analyze", "--file", path.string()});
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_NE(a.out.find("realignment trace norm  1.66666666667"), std::string::npos) << a.out;
    std::filesystem::remove(path);

    const auto spec = run_cli({"generate", "--family", "rho_alpha", "--alpha", "3.5", "--as-spec"});
    EXPECT_EQ(spec.code, 0);
    EXPECT_NE(spec.out.find("family=rho_alpha"), std::string::npos);
}

TEST(Cli, FamiliesListsEveryFamily) {
    const auto r = run_cli({"families"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("rho_eps_c eps c m r"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace sepscope
