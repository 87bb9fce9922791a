// Copyright 2026 The entprod Authors
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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace entprod::cli {
namespace {

constexpr double kPi = std::numbers::pi;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Second column of a t,epsilon CSV; inf as +infinity.
std::vector<double> epsilon_column(const std::string &csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> out;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    const std::string v = line.substr(comma + 1, line.find(',', comma + 1) - comma - 1);
    out.push_back(v == "inf" ? INFINITY : std::stod(v));
  }
  return out;
}

double max_shift_diff(const std::vector<double> &e, std::size_t shift) {
  double worst = 0.0;
  for (std::size_t k = 0; k + shift < e.size(); ++k) {
    if (std::isinf(e[k]) || std::isinf(e[k + shift])) continue;
    worst = std::max(worst, std::abs(e[k] - e[k + shift]));
  }
  return worst;
}

TEST(ParseReal, Expressions) {
  EXPECT_DOUBLE_EQ(*parse_real("0.5"), 0.5);
  EXPECT_DOUBLE_EQ(*parse_real("-1"), -1.0);
  EXPECT_DOUBLE_EQ(*parse_real("5/7"), 5.0 / 7.0);
  EXPECT_DOUBLE_EQ(*parse_real("pi"), kPi);
  EXPECT_DOUBLE_EQ(*parse_real("8pi"), 8 * kPi);
  EXPECT_DOUBLE_EQ(*parse_real("8*pi"), 8 * kPi);
  EXPECT_DOUBLE_EQ(*parse_real("pi/2"), kPi / 2);
  EXPECT_DOUBLE_EQ(*parse_real("sqrt(2)"), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(*parse_real("sqrt(3)/2"), std::sqrt(3.0) / 2);
  EXPECT_DOUBLE_EQ(*parse_real("1e-3"), 1e-3);
  for (const char *bad : {"", "abc", "1/0", "sqrt(-1)", "5/", "pi pi", "nan", "inf"})
    EXPECT_FALSE(parse_real(bad).has_value()) << bad;
}

TEST(FormatNumber, FixedTwelveDigits) {
  EXPECT_EQ(format_number(0.0), "0.000000000000");
  EXPECT_EQ(format_number(-0.0), "0.000000000000");
  EXPECT_EQ(format_number(-1e-15), "0.000000000000");
  EXPECT_EQ(format_number(1.5), "1.500000000000");
  EXPECT_EQ(format_number(INFINITY), "inf");
}

TEST(Sweep, MatchesGoldenIsing) {
  const auto r = run_cli({"sweep", "--model", "ising", "--h", "1", "--J", "1", "--t-max", "pi",
                          "--steps", "5", "--method", "analytic"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, slurp(std::filesystem::path(ENTPROD_GOLDEN_DIR) / "ising_h1_J1_pi_5.csv"));
}

TEST(Sweep, MatchesGoldenHeisenberg) {
  const auto r = run_cli({"sweep", "--model", "heisenberg", "--h", "0.5", "--J", "1", "--J1",
                          "1", "--t-max", "3", "--steps", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            slurp(std::filesystem::path(ENTPROD_GOLDEN_DIR) / "heisenberg_h05_J1_J11_3_7.csv"));
}

TEST(Sweep, ByteIdenticalAcrossThreadCounts) {
  std::vector<std::string> base{"sweep", "--model", "heisenberg", "--h", "0.3", "--J", "1",
                                "--J1", "0.6", "--t-max", "20", "--steps", "3001", "--threads"};
  auto a = base, b = base;
  a.push_back("1");
  b.push_back("7");
  const auto ra = run_cli(a), rb = run_cli(b);
  ASSERT_EQ(ra.code, kExitOk);
  EXPECT_EQ(ra.out, rb.out);
}

TEST(Sweep, BothColumnsAgree) {
  SweepConfig c;
  c.h = std::sqrt(2.0);
  c.t_max = 8 * kPi;
  c.steps = 501;
  c.method = Method::Both;
  const auto rows = sweep_rows(c);
  ASSERT_EQ(rows.size(), 501u);
  for (const auto &row : rows) {
    ASSERT_TRUE(row.numerical.has_value());
    EXPECT_NEAR(row.epsilon, *row.numerical, 1e-9) << row.t;
  }
  EXPECT_EQ(render_csv(rows, true).substr(0, 28), "t,epsilon,epsilon_numerical\n");
}

TEST(Sweep, SingularPointsPrintInf) {
  const auto r = run_cli({"sweep", "--model", "ising", "--h", "2", "--J", "1", "--t-max", "pi",
                          "--steps", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("3.141592653590,inf\n"), std::string::npos) << r.out;
}

TEST(Sweep, ValidationErrors) {
  SweepConfig c;
  c.t_max = 1.0;
  c.steps = 1;
  EXPECT_FALSE(validate(c).empty());
  c.steps = 10;
  EXPECT_TRUE(validate(c).empty());
  c.t_max = -1.0;
  EXPECT_FALSE(validate(c).empty());
  EXPECT_EQ(run_cli({"sweep", "--model", "ising", "--t-max", "1", "--steps", "1"}).code,
            kExitUsage);
  EXPECT_EQ(run_cli({"sweep", "--model", "ising", "--t-max", "1", "--log-base", "1"}).code,
            kExitUsage);
}

TEST(Measure, ProductAtOrigin) {
  const auto r = run_cli({"measure", "--model", "ising", "--h", "1", "--J", "1", "--t", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("epsilon: 0.000000000000\n"), std::string::npos) << r.out;
}

TEST(Measure, IsingUnitTime) {
  const auto r = run_cli({"measure", "--model", "ising", "--h", "1", "--J", "1", "--t", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("epsilon: 0.0842"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("epsilon_closed_form: 0.0842"), std::string::npos) << r.out;
}

TEST(Measure, SingularExitsWithDiagnostic) {
  const auto r = run_cli({"measure", "--model", "ising", "--h", "2", "--J", "1", "--t", "pi"});
  EXPECT_EQ(r.code, kExitUndefined);
  EXPECT_NE(r.err.find("odd-pi-time"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Measure, Multimode) {
  const auto r = run_cli({"measure", "--model", "multimode", "--M", "4", "--C", "2.5"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("epsilon: 2.000000000000\n"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli({"measure", "--model", "multimode", "--M", "1"}).code, kExitUsage);
}

TEST(Run, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"measure", "--model", "nope"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"measure", "--h", "abc"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"figure", "9z"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"classify", "--h", "1", "--J", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Run, OutputToFile) {
  const auto dir = std::filesystem::temp_directory_path() / "entprod_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = dir / "f.csv";
  const auto gp = dir / "f.gp";
  const auto r = run_cli({"figure", "1a", "--steps", "11", "--output", csv.string(), "--gnuplot",
                          gp.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(csv).substr(0, 10), "t,epsilon\n");
  EXPECT_NE(slurp(gp).find(csv.string()), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Figures, CatalogueRatios) {
  EXPECT_EQ(all_figures().size(), 8u);
  EXPECT_DOUBLE_EQ(figure_spec("1b")->h_over_J, 5.0 / 7.0);
  EXPECT_DOUBLE_EQ(figure_spec("2b")->h_over_J, std::sqrt(3.0) / 2);
  EXPECT_FALSE(figure_spec("3a").has_value());
  EXPECT_DOUBLE_EQ(default_figure_t_max(), 8 * kPi);
}

TEST(Figures, PeriodicCurvesRepeat) {
  // default grid: 2001 points over 8 pi, so pi is 250 rows
  struct Case {
    const char *id;
    std::size_t rows;
  };
  for (const Case c : {Case{"1a", 250}, Case{"1b", 1750}, Case{"1c", 250}, Case{"1d", 500}}) {
    const auto r = run_cli({"figure", c.id});
    ASSERT_EQ(r.code, kExitOk);
    const auto e = epsilon_column(r.out);
    ASSERT_EQ(e.size(), 2001u);
    EXPECT_LT(max_shift_diff(e, c.rows), 1e-9) << c.id;
  }
}

TEST(Figures, QuasiPeriodicCurvesDoNotRepeat) {
  for (const char *id : {"2a", "2b", "2c", "2d"}) {
    const auto r = run_cli({"figure", id});
    ASSERT_EQ(r.code, kExitOk);
    const auto e = epsilon_column(r.out);
    for (std::size_t shift = 1; shift <= 1000; ++shift)
      ASSERT_GT(max_shift_diff(e, shift), 1e-6) << id << " shift " << shift;
  }
}

TEST(Classify, Output) {
  const auto p = run_cli({"classify", "--h", "5/7", "--J", "1"});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_EQ(p.out.substr(0, p.out.find('\n')), "Periodic, T=7pi");

  const auto q = run_cli({"classify", "--h", "sqrt(2)", "--J", "1"});
  EXPECT_EQ(q.code, kExitOk);
  EXPECT_EQ(q.out.rfind("QuasiPeriodic, T1=2.221441469079", 0), 0u) << q.out;

  const auto s = run_cli({"classify", "--h", "2", "--J", "1", "--t-max", "10"});
  EXPECT_NE(s.out.find("t=3.141592653590 family=odd-pi-time n=0 p=1"), std::string::npos)
      << s.out;
  EXPECT_NE(s.out.find("t=9.424777960769 family=odd-pi-time n=1 p=3"), std::string::npos)
      << s.out;
}

}  // namespace
}  // namespace entprod::cli
