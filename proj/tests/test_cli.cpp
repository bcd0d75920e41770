// Copyright 2026 The infolab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "infolab/cli.hpp"
#include "infolab/report.hpp"

namespace infolab {
namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"infolab"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = cli::parse_and_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("infolab_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

TEST(DisplayNumber, TrimsTrailingZeros) {
    EXPECT_EQ(report::display_number(1.0, 6), "1.0");
    EXPECT_EQ(report::display_number(0.29449495366961067, 6), "0.294495");
    EXPECT_EQ(report::display_number(-0.0, 6), "0.0");
    EXPECT_EQ(report::display_number(-1e-9, 6), "0.0");
    EXPECT_EQ(report::display_number(2.5, 1), "2.5");
    EXPECT_EQ(report::csv_number(1.0 / 3.0), "0.333333333333");
}

TEST(Cli, MeasureBz) {
    const CliRun r = run({"measure", "bz", "--probs", "1,0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1.0\n");
    EXPECT_NE(r.err.find("n=2 k=1.0"), std::string::npos);
}

TEST(Cli, MeasureShannonDiagnostics) {
    const CliRun r = run({"measure", "shannon", "--probs", "0.5,0.3,0.2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1.485475\n");
    EXPECT_NE(r.err.find("n=3 k=1.584963"), std::string::npos);
}

TEST(Cli, NonNormalizedProbabilitiesAreUsageErrors) {
    const CliRun r = run({"measure", "bz", "--probs", "0.5,0.6"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.rfind("error:", 0), 0u);
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(run({"measure", "bz", "--probs", "0.5,abc"}).code, 2);
}

TEST(Cli, UnknownSubcommand) {
    const CliRun r = run({"frobnicate"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.rfind("error:", 0), 0u);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, Thresholds) {
    const CliRun r = run({"efficiency", "thresholds"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0.294495 0.905505\n");
    EXPECT_EQ(run({"--precision", "2", "efficiency", "thresholds"}).out, "0.29 0.91\n");
    EXPECT_EQ(run({"--precision", "0", "efficiency", "thresholds"}).code, 2);
}

TEST(Cli, QubitInfoVector) {
    const CliRun r = run({"qubit", "info-vector", "--state", "plus-z"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "info_vector 0.0 0.0 1.0\nI_total 1.0\n");
    const CliRun mixed = run({"qubit", "info-vector", "--state", "0.3,0,0.4", "--triad", "0,1,0;0,0,1;1,0,0"});
    EXPECT_EQ(mixed.out, "info_vector 0.0 0.4 0.3\nI_total 0.25\n");
    EXPECT_EQ(run({"qubit", "info-vector", "--state", "1,1,0"}).code, 2);
    EXPECT_EQ(run({"qubit", "info-vector", "--state", "plus-w"}).code, 2);
}

TEST(Cli, EvolveLarmor) {
    const CliRun r = run({"evolve", "--state", "plus-x", "--hamiltonian", "0,0,0.5", "--t", "3.141592653589793"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "bloch -1.0,0.0,0.0\nI_total 1.0\n");
}

TEST(Cli, EvolveConservationCsv) {
    TempDir dir;
    const auto csv = dir.path() / "report.csv";
    const std::string csv_s = csv.string();
    const CliRun r = run({"evolve", "--state", "plus-x", "--hamiltonian", "0,0,0.5", "--t", "3.14159",
                       "--report-conservation", "--times", "0:10:0.1", "--out", csv_s.c_str()});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string text = slurp(csv);
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "t,i1,i2,i3,I_total");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        EXPECT_EQ(line.substr(line.rfind(',') + 1), "1");
    }
    EXPECT_EQ(rows, 101);
    EXPECT_NE(r.err.find("max_drift="), std::string::npos);

    EXPECT_EQ(run({"evolve", "--state", "plus-x", "--hamiltonian", "0,0,1", "--report-conservation"}).code, 2);
    EXPECT_EQ(run({"evolve", "--state", "plus-x", "--hamiltonian", "0,0,1", "--report-conservation", "--times",
                   "5:1:0.1"})
                  .code,
              2);
}

TEST(Cli, SweepCsvIsByteStable) {
    TempDir dir;
    const std::string a = (dir.path() / "a.csv").string(), b = (dir.path() / "b.csv").string();
    ASSERT_EQ(run({"efficiency", "sweep", "--min", "0", "--max", "1", "--steps", "201", "--out", a.c_str()}).code, 0);
    ASSERT_EQ(run({"efficiency", "sweep", "--min", "0", "--max", "1", "--steps", "201", "--out", b.c_str()}).code, 0);
    const std::string text = slurp(a);
    EXPECT_EQ(text, slurp(b));
    EXPECT_EQ(text.substr(0, text.find('\n')), "eta,I1,I2,I3,I_total,ratio,Hx,Hy,Hz");
    EXPECT_NE(text.find("\n1,1.58496250072,0.39624062518,0.39624062518,2.37744375108,1.5,0,1,1\n"),
              std::string::npos);
}

TEST(Cli, SweepRejectsBadRanges) {
    EXPECT_EQ(run({"efficiency", "sweep", "--min", "0.8", "--max", "0.2"}).code, 2);
    EXPECT_EQ(run({"efficiency", "sweep", "--steps", "1"}).code, 2);
    EXPECT_EQ(run({"efficiency", "sweep", "--max", "1.5"}).code, 2);
}

TEST(Cli, FiguresWriteFourStableFiles) {
    TempDir dir;
    const std::string d1 = (dir.path() / "one").string(), d2 = (dir.path() / "two").string();
    const CliRun r = run({"efficiency", "figures", "--out-dir", d1.c_str()});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(run({"efficiency", "figures", "--out-dir", d2.c_str()}).code, 0);
    for (const char* f : {"fig1.csv", "fig1.svg", "fig2.csv", "fig2.svg"}) {
        const auto p1 = std::filesystem::path(d1) / f;
        ASSERT_TRUE(std::filesystem::exists(p1)) << f;
        EXPECT_EQ(slurp(p1), slurp(std::filesystem::path(d2) / f)) << f;
    }
    const std::string fig2 = slurp(std::filesystem::path(d1) / "fig2.csv");
    EXPECT_NE(fig2.find("\n0.5,1,1.5,1.5\n"), std::string::npos);
    const std::string svg = slurp(std::filesystem::path(d1) / "fig1.svg");
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("<polyline"), std::string::npos);
}

TEST(Cli, FiguresUnwritablePathIsIoError) {
    TempDir dir;
    const auto blocker = dir.path() / "file";
    std::ofstream(blocker) << "x";
    const std::string target = (blocker / "sub").string();
    const CliRun r = run({"efficiency", "figures", "--out-dir", target.c_str()});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind("error:", 0), 0u);
}

TEST(Cli, EntangleIcorr) {
    const CliRun r = run({"entangle", "icorr", "--state", "bell:psi-", "--d1", "1,0,0", "--d2", "0,1,0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "i_corr 2.0\ninfo 1.0 1.0\n");
    EXPECT_EQ(run({"entangle", "icorr", "--state", "bell:psi-", "--d1", "1,0,0", "--d2", "2,0,0"}).code, 2);
    EXPECT_EQ(run({"entangle", "icorr", "--state", "bell:chi"}).code, 2);
    const CliRun prod = run({"entangle", "icorr", "--state", "product:plus-z/plus-z", "--d1", "0,0,1", "--d2", "1,0,0"});
    EXPECT_EQ(prod.out, "i_corr 1.0\ninfo 1.0 0.0\n");
}

TEST(Cli, EntangleCheck) {
    const CliRun r = run({"entangle", "check", "--state", "werner:0.8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "entangled true");
    EXPECT_NE(r.out.find("i_corr 1.28\n"), std::string::npos);
    const CliRun w = run({"entangle", "check", "--state", "werner:0.5"});
    EXPECT_EQ(w.out.substr(0, w.out.find('\n')), "entangled false");
    EXPECT_EQ(run({"entangle", "check", "--state", "werner:1.5"}).code, 2);
}

TEST(Cli, SeedPrecedence) {
    cli::RunConfig cfg;
    ::unsetenv(cli::kSeedEnv);
    EXPECT_EQ(cfg.seed(), kDefaultSeed);
    ::setenv(cli::kSeedEnv, "42", 1);
    EXPECT_EQ(cfg.seed(), 42u);
    cfg.seed_flag = 7;
    EXPECT_EQ(cfg.seed(), 7u);
    cfg.seed_flag.reset();
    ::setenv(cli::kSeedEnv, "nope", 1);
    EXPECT_THROW(cfg.seed(), usage_error);
    ::unsetenv(cli::kSeedEnv);
}

TEST(Cli, VerifyPasses) {
    const CliRun r = run({"--seed", "5", "verify"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("properties passed"), std::string::npos);
}

} // namespace
} // namespace infolab
