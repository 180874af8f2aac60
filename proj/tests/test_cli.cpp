// Copyright 2026 The QIC Toolkit Authors
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

#include "qic/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "qic/lattice_field.hpp"
#include "qic/text_io.hpp"

using namespace qic;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qic");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

/// Exit status of the real executable.
int run_process(const std::string& args) {
    const std::string cmd = std::string(QIC_BINARY) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("qic_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name) << text;
        return path(name);
    }

    fs::path dir_;
};

std::vector<std::vector<double>> read_csv(const fs::path& p) {
    std::ifstream f(p);
    std::string line;
    std::getline(f, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(f, line)) rows.push_back(parse_real_list(line));
    return rows;
}

}  // namespace

TEST_F(CliTest, lattice_defaults_write_three_frames) {
    auto r = run({"lattice-evolve", "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* t : {"0", "25", "50"}) {
        EXPECT_TRUE(fs::exists(dir_ / "o" / (std::string("lattice_t") + t + ".csv")));
        EXPECT_TRUE(fs::exists(dir_ / "o" / (std::string("lattice_t") + t + ".svg")));
    }
    EXPECT_TRUE(fs::exists(dir_ / "o" / "lattice_invariants.csv"));
    EXPECT_EQ(slurp(dir_ / "o" / "lattice_t0.csv").substr(0, 22), "site,v_q,v_p,u_q,u_p\n1");
}

TEST_F(CliTest, lattice_csv_round_trips_in_memory_values) {
    ASSERT_EQ(run({"lattice-evolve", "--out", path("o"), "--times", "0,12.5", "--formats", "csv"}).code, 0);
    const std::vector<double> times{0, 12.5};
    auto frames = figure_experiment(LatticeConfig{30, 0.4}, 15, times);
    auto rows = read_csv(dir_ / "o" / "lattice_t12.5.csv");
    ASSERT_EQ(rows.size(), 30u);
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& p = frames[1].rows[i];
        EXPECT_EQ(rows[i], (std::vector<double>{static_cast<double>(p.site), p.v_q, p.v_p, p.u_q, p.u_p}));
    }
    EXPECT_FALSE(fs::exists(dir_ / "o" / "lattice_t0.svg"));

    auto t0 = read_csv(dir_ / "o" / "lattice_t0.csv");
    double off = 0;
    for (const auto& row : t0) {
        if (row[0] != 15) off = std::max({off, std::abs(row[3]), std::abs(row[4])});
    }
    EXPECT_GT(off, 1e-4);
}

TEST_F(CliTest, lattice_site_shift_is_cyclic) {
    ASSERT_EQ(run({"lattice-evolve", "--out", path("a"), "--write-site", "1", "--times", "3", "--formats", "csv"}).code, 0);
    ASSERT_EQ(run({"lattice-evolve", "--out", path("b"), "--write-site", "2", "--times", "3", "--formats", "csv"}).code, 0);
    auto a = read_csv(dir_ / "a" / "lattice_t3.csv");
    auto b = read_csv(dir_ / "b" / "lattice_t3.csv");
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t c = 1; c < 5; ++c) EXPECT_NEAR(a[i][c], b[(i + 1) % a.size()][c], 1e-10);
    }
}

TEST_F(CliTest, lattice_outputs_are_byte_deterministic) {
    ASSERT_EQ(run({"lattice-evolve", "--out", path("a")}).code, 0);
    ASSERT_EQ(run({"lattice-evolve", "--out", path("b"), "--serial"}).code, 0);
    for (const auto& entry : fs::directory_iterator(dir_ / "a")) {
        EXPECT_EQ(slurp(entry.path()), slurp(dir_ / "b" / entry.path().filename())) << entry.path();
    }
}

TEST_F(CliTest, lattice_usage_errors) {
    EXPECT_EQ(run({"lattice-evolve", "--out", path("o"), "--times", "0,x"}).code, kExitUsage);
    EXPECT_EQ(run({"lattice-evolve", "--out", path("o"), "--write-site", "31"}).code, kExitUsage);
    EXPECT_EQ(run({"lattice-evolve", "--out", path("o"), "--formats", "png"}).code, kExitUsage);
    EXPECT_EQ(run({"lattice-evolve", "--sites", "abc"}).code, kExitUsage);
    write("blocker", "x");
    auto r = run({"lattice-evolve", "--out", path("blocker")});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find(path("blocker")), std::string::npos);
}

TEST_F(CliTest, config_precedence) {
    const std::string cfg = write("run.cfg", "sites=12\nwrite-site=3\ntimes=0,5\nformats=csv\n");
    ASSERT_EQ(run({"lattice-evolve", "--config", cfg, "--out", path("o"), "--sites", "10"}).code, 0);
    const std::string info = slurp(dir_ / "o" / "lattice_run.txt");
    EXPECT_NE(info.find("sites=10\n"), std::string::npos);     // flag beats file
    EXPECT_NE(info.find("write_site=3\n"), std::string::npos);  // file beats default
    EXPECT_NE(info.find("eta=0.40000000000000002\n"), std::string::npos);
    EXPECT_EQ(read_csv(dir_ / "o" / "lattice_t5.csv").size(), 10u);
    EXPECT_EQ(run({"lattice-evolve", "--config", path("missing.cfg")}).code, kExitUsage);
    EXPECT_EQ(run({"lattice-evolve", "--config", write("bad.cfg", "nonsense=1\n"), "--out", path("o")}).code, kExitUsage);
}

TEST_F(CliTest, qudit_suite_passes_and_is_deterministic) {
    ASSERT_EQ(run({"qudit-suite", "--d", "2", "--n", "2", "--trials", "50", "--seed", "7", "--out", path("a")}).code, 0);
    ASSERT_EQ(run({"qudit-suite", "--d", "2", "--n", "2", "--trials", "50", "--seed", "7", "--out", path("b"), "--serial"}).code, 0);
    const std::string a = slurp(dir_ / "a" / "qudit_suite.csv");
    EXPECT_EQ(a, slurp(dir_ / "b" / "qudit_suite.csv"));
    EXPECT_EQ(slurp(dir_ / "a" / "qudit_suite_run.txt"), slurp(dir_ / "b" / "qudit_suite_run.txt"));
    EXPECT_NE(slurp(dir_ / "a" / "qudit_suite_run.txt").find("rng=mt19937_64"), std::string::npos);
    std::istringstream lines(a);
    std::string line;
    std::getline(lines, line);
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        EXPECT_NE(line.find(",pass"), std::string::npos) << line;
        if (line.rfind("qic_purity,", 0) == 0) {
            EXPECT_LT(std::stod(line.substr(11)), 1e-8);
        }
    }
    EXPECT_EQ(count, 7);
}

TEST_F(CliTest, qudit_suite_usage_errors) {
    EXPECT_EQ(run({"qudit-suite", "--trials", "0", "--seed", "1", "--out", path("o")}).code, kExitUsage);
    EXPECT_EQ(run({"qudit-suite", "--d", "5", "--seed", "1", "--out", path("o")}).code, kExitUsage);
    EXPECT_EQ(run({"qudit-suite", "--n", "4", "--seed", "1", "--out", path("o")}).code, kExitUsage);
    EXPECT_EQ(run({"qudit-suite", "--out", path("o")}).code, kExitUsage);
}

TEST_F(CliTest, gaussian_vacuum_and_squeezed) {
    const std::string vac = write("vac.txt", "gaussian N=1\nmean: 0,0\n0.5,0\n0,0.5\n");
    ASSERT_EQ(run({"gaussian-conj", "--state", vac, "--v", "1,0", "--out", path("o")}).code, 0);
    std::ifstream pf(dir_ / "o" / "modepair_1.txt");
    auto pair = read_mode_pair(pf);
    EXPECT_EQ(pair.u(0), 0.0);
    EXPECT_EQ(pair.u(1), 1.0);
    auto rows = read_csv(dir_ / "o" / "gaussian_summary.csv");
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0][5], 0.0);  // entropy

    const double r = 0.5;
    std::ostringstream sq;
    sq << "gaussian N=1\nmean: 0,0\n" << format_double(0.5 * std::exp(2 * r)) << ",0\n0," << format_double(0.5 * std::exp(-2 * r)) << "\n";
    const std::string sqf = write("sq.txt", sq.str());
    ASSERT_EQ(run({"gaussian-conj", "--state", sqf, "--v", "1,0", "--out", path("s")}).code, 0);
    auto srows = read_csv(dir_ / "s" / "gaussian_summary.csv");
    EXPECT_NEAR(srows[0][4], 0.25, 1e-9);
}

TEST_F(CliTest, gaussian_multiparam_report) {
    const std::string vac = write("vac.txt", "gaussian N=1\nmean: 0,0\n0.5,0\n0,0.5\n");
    ASSERT_EQ(run({"gaussian-conj", "--state", vac, "--v", "1,0", "--v", "0,1", "--out", path("o")}).code, 0);
    EXPECT_NE(slurp(dir_ / "o" / "multiparam.csv").find("non-commuting"), std::string::npos);
    EXPECT_NE(slurp(dir_ / "o" / "multiparam_summary.txt").find("commuting=false"), std::string::npos);
}

TEST_F(CliTest, gaussian_error_codes) {
    const std::string thermal = write("thermal.txt", "gaussian N=1\nmean: 0,0\n1,0\n0,1\n");
    auto r = run({"gaussian-conj", "--state", thermal, "--v", "1,0", "--out", path("o")});
    EXPECT_EQ(r.code, kExitInvariant);
    EXPECT_NE(r.err.find("purity"), std::string::npos);
    const std::string bad = write("bad.txt", "gaussian N=1\nmean: 0,0\n0.5,0\n0,oops\n");
    r = run({"gaussian-conj", "--state", bad, "--v", "1,0", "--out", path("o")});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("line 4"), std::string::npos);
    EXPECT_EQ(run({"gaussian-conj", "--state", path("nope.txt"), "--v", "1,0"}).code, kExitUsage);
    EXPECT_EQ(run({"gaussian-conj", "--state", bad}).code, kExitUsage);
}

TEST_F(CliTest, verify_passes_and_flags_asymmetry) {
    auto r = run({"verify", "--out", path("v")});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    for (const char* module : {"qudit_algebra", "qudit_info", "gaussian_cv", "lattice_field", "qic_cli"}) {
        EXPECT_NE(r.out.find(module), std::string::npos) << module;
    }
    EXPECT_TRUE(fs::exists(dir_ / "v" / "verify.csv"));

    const std::string asym = write("asym.txt", "gaussian N=1\nmean: 0,0\n0.5,0.001\n0,0.5\n");
    r = run({"verify", "--extra-state", asym});
    EXPECT_EQ(r.code, kExitInvariant);
    EXPECT_NE(r.err.find("GaussianState symmetry"), std::string::npos);
}

TEST_F(CliTest, process_exit_codes) {
    EXPECT_EQ(run_process("qudit-demo"), 0);
    EXPECT_EQ(run_process(""), 2);
    EXPECT_EQ(run_process("no-such-command"), 2);
    EXPECT_EQ(run_process("qudit-suite --trials 0 --seed 1 --out " + path("o")), 2);
    const std::string asym = write("asym.txt", "gaussian N=1\nmean: 0,0\n0.5,0.001\n0,0.5\n");
    EXPECT_EQ(run_process("verify --extra-state " + asym), 3);
    EXPECT_EQ(run_process("lattice-evolve --times 0 --formats csv --out " + path("o")), 0);
}
