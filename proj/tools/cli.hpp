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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entprod/complex_matrix.hpp"

namespace entprod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndefined = 3;

enum class Model { Ising, Heisenberg, Multimode };
enum class Method { Auto, Analytic, Numerical, Both };

struct MeasureConfig {
  Model model = Model::Ising;
  double h = 0.0;
  double J = 1.0;
  double J1 = 0.0;
  double t = 0.0;
  std::size_t modes = 2;  // multimode only
  double c = 1.0;         // multimode only
  double log_base = 2.0;
};

struct SweepConfig {
  Model model = Model::Ising;
  double h = 0.0;
  double J = 1.0;
  double J1 = 0.0;  // ignored for ising
  double t_max = 0.0;
  std::size_t steps = 2001;
  Method method = Method::Auto;
  double log_base = 2.0;
  unsigned threads = 1;
};

/// One CSV row. `numerical` is set only for Method::Both.
struct SweepRow {
  double t;
  double epsilon;
  std::optional<double> numerical;
};

/// Empty string when the config is usable, otherwise the reason.
std::string validate(const SweepConfig &config);

/// Rows of a validated sweep; throws std::invalid_argument otherwise.
std::vector<SweepRow> sweep_rows(const SweepConfig &config);

/// Fixed-point with 12 decimals; "inf" for +infinity; never "-0.000...".
std::string format_number(double v);

/// CSV text: header `t,epsilon[,epsilon_numerical]`, '\n' line endings.
std::string render_csv(std::span<const SweepRow> rows, bool with_numerical);

struct FigureSpec {
  std::string id;
  double h_over_J;
  std::string label;  // human-readable ratio, e.g. "5/7" or "sqrt(2)"
};

/// Parameter sets of the reference figures: 1a..1d periodic, 2a..2d quasi-periodic.
std::optional<FigureSpec> figure_spec(std::string_view id);
std::vector<FigureSpec> all_figures();

/// Default time window for the figure commands, in units of 1/J.
double default_figure_t_max();

/// Gnuplot script plotting epsilon against t from a CSV file.
std::string gnuplot_script(const std::string &csv_path, const std::string &title);

/**
 * Parses reals written as plain numbers or small expressions:
 * "0.5", "5/7", "pi", "8pi", "8*pi", "pi/2", "sqrt(2)", "sqrt(3)/2", "-1".
 */
std::optional<double> parse_real(std::string_view text);

int cmd_measure(const MeasureConfig &config, std::ostream &out, std::ostream &err);
int cmd_sweep(const SweepConfig &config, std::ostream &out, std::ostream &err);
int cmd_figure(std::string_view id, double t_max, std::size_t steps, std::ostream &out,
               std::ostream &err);
int cmd_classify(double h, double J, double t_max, std::ostream &out, std::ostream &err);

/// Full command line (argv[0] excluded). Handles --output and --gnuplot.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace entprod::cli
