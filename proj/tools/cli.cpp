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

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "entprod/errors.hpp"
#include "entprod/ising.hpp"
#include "entprod/measure.hpp"
#include "entprod/spin_models.hpp"

namespace entprod::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Recursive-descent evaluator behind parse_real.
class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  std::optional<double> parse() {
    skip_ws();
    auto v = product();
    skip_ws();
    if (!v || pos_ != s_.size() || !std::isfinite(*v)) return std::nullopt;
    return v;
  }

 private:
  std::optional<double> product() {
    double sign = 1.0;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    auto acc = factor();
    if (!acc) return std::nullopt;
    for (;;) {
      const std::size_t before = pos_;
      skip_ws();
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        skip_ws();
        auto rhs = factor();
        if (!rhs) return std::nullopt;
        acc = c == '*' ? *acc * *rhs : *acc / *rhs;
      } else if (pos_ == before && (c == 'p' || c == 's' || c == '(')) {
        auto rhs = factor();  // implicit product, e.g. "8pi"
        if (!rhs) return std::nullopt;
        *acc *= *rhs;
      } else {
        break;
      }
    }
    return sign * *acc;
  }

  std::optional<double> factor() {
    skip_ws();
    if (consume("pi")) return kPi;
    if (consume("sqrt(")) {
      auto inner = product();
      skip_ws();
      if (!inner || !consume(")") || *inner < 0.0) return std::nullopt;
      return std::sqrt(*inner);
    }
    if (consume("(")) {
      auto inner = product();
      skip_ws();
      if (!inner || !consume(")")) return std::nullopt;
      return inner;
    }
    double v = 0.0;
    const char *begin = s_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == begin) return std::nullopt;
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  bool consume(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

const char *model_name(Model m) {
  switch (m) {
    case Model::Ising:
      return "ising";
    case Model::Heisenberg:
      return "heisenberg";
    case Model::Multimode:
      return "multimode";
  }
  return "?";
}

MultipartiteOperator hamiltonian_of(Model model, double h, double J, double J1) {
  if (model == Model::Ising) return ising_hamiltonian(h, J);
  return heisenberg_hamiltonian({h, J, J1});
}

Method resolve(Method m, Model model) {
  if (m != Method::Auto) return m;
  return model == Model::Ising ? Method::Analytic : Method::Numerical;
}

double closed_form_epsilon(double h, double J, double t, double base) {
  return h == 0.0 ? epsilon_zero_field(J, t, base) : epsilon_ising(h, J, t, base);
}

// Describes why the Ising measure diverges at t, naming the family when the
// time matches one of the predicted singular instants.
std::string singular_message(double h, double J, double t) {
  std::string family = "vanishing trace of U(t)";
  if (J != 0.0 && t > 0.0) {
    for (const SingularitySpec &s : singularity_times(h, J, t * (1.0 + 1e-9))) {
      if (std::abs(s.time - t) > 1e-9 * std::max(1.0, t)) continue;
      switch (s.family) {
        case SingularFamily::OddPiTime:
          family = "odd-pi-time family: h/J = 2p/(1+2n), t = (1+2n)pi/J, n=" +
                   std::to_string(s.n) + " p=" + std::to_string(s.p);
          break;
        case SingularFamily::EvenPiTime:
          family = "even-pi-time family: h/J = (1+2n)/(2p), t = 2p pi/J, n=" +
                   std::to_string(s.n) + " p=" + std::to_string(s.p);
          break;
        case SingularFamily::ZeroField:
          family = "zero-field family: h = 0, t = (1+2n)pi/J, n=" + std::to_string(s.n);
          break;
      }
    }
  }
  return "singular point (" + family + "): the measure is undefined";
}

std::string pi_multiple(std::int64_t k) { return std::to_string(k) + "pi"; }

}  // namespace

std::optional<double> parse_real(std::string_view text) { return ExprParser(text).parse(); }

std::string format_number(double v) {
  if (std::isinf(v) && v > 0) return "inf";
  if (std::isinf(v)) return "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string validate(const SweepConfig &c) {
  if (c.steps < 2) return "--steps must be >= 2";
  if (!(c.t_max > 0.0) || !std::isfinite(c.t_max)) return "--t-max must be a positive number";
  if (!(c.log_base > 1.0) || !std::isfinite(c.log_base)) return "--log-base must be > 1";
  if (!std::isfinite(c.h) || !std::isfinite(c.J) || !std::isfinite(c.J1)) {
    return "model parameters must be finite";
  }
  if (c.model == Model::Multimode) return "sweep supports the ising and heisenberg models";
  const Method m = resolve(c.method, c.model);
  if ((m == Method::Analytic || m == Method::Both) && c.model != Model::Ising) {
    return "--method analytic/both requires --model ising";
  }
  if (c.threads == 0) return "--threads must be >= 1";
  return {};
}

std::vector<SweepRow> sweep_rows(const SweepConfig &c) {
  if (const std::string why = validate(c); !why.empty()) throw std::invalid_argument(why);
  const Method method = resolve(c.method, c.model);
  const std::vector<double> grid = uniform_grid(c.t_max, c.steps);

  std::vector<SweepRow> rows(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) rows[k].t = grid[k];

  if (method == Method::Analytic || method == Method::Both) {
    for (SweepRow &r : rows) r.epsilon = closed_form_epsilon(c.h, c.J, r.t, c.log_base);
  }
  if (method == Method::Numerical || method == Method::Both) {
    const auto series = evolution_measure_series(hamiltonian_of(c.model, c.h, c.J, c.J1), grid,
                                                 c.log_base, c.threads);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (method == Method::Both) {
        rows[k].numerical = series[k].epsilon;
      } else {
        rows[k].epsilon = series[k].epsilon;
      }
    }
  }
  return rows;
}

std::string render_csv(std::span<const SweepRow> rows, bool with_numerical) {
  std::string s = with_numerical ? "t,epsilon,epsilon_numerical\n" : "t,epsilon\n";
  for (const SweepRow &r : rows) {
    s += format_number(r.t);
    s += ',';
    s += format_number(r.epsilon);
    if (with_numerical) {
      s += ',';
      s += format_number(r.numerical.value_or(std::numeric_limits<double>::quiet_NaN()));
    }
    s += '\n';
  }
  return s;
}

std::vector<FigureSpec> all_figures() {
  return {
      {"1a", 1.0, "1"},
      {"1b", 5.0 / 7.0, "5/7"},
      {"1c", 7.0, "7"},
      {"1d", 8.0, "8"},
      {"2a", std::sqrt(2.0), "sqrt(2)"},
      {"2b", std::sqrt(3.0) / 2.0, "sqrt(3)/2"},
      {"2c", std::sqrt(5.0), "sqrt(5)"},
      {"2d", std::sqrt(7.0), "sqrt(7)"},
  };
}

std::optional<FigureSpec> figure_spec(std::string_view id) {
  for (FigureSpec &f : all_figures()) {
    if (f.id == id) return f;
  }
  return std::nullopt;
}

double default_figure_t_max() { return 8.0 * kPi; }

std::string gnuplot_script(const std::string &csv_path, const std::string &title) {
  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set datafile missing 'inf'\n"
    << "set key autotitle columnhead\n"
    << "set key off\n"
    << "set xlabel 't [1/J]'\n"
    << "set ylabel 'epsilon'\n"
    << "set title '" << title << "'\n"
    << "plot '" << csv_path << "' using 1:2 with lines\n";
  return s.str();
}

int cmd_measure(const MeasureConfig &c, std::ostream &out, std::ostream &err) {
  if (!(c.log_base > 1.0)) {
    err << "error: --log-base must be > 1\n";
    return kExitUsage;
  }
  MultipartiteOperator op = c.model == Model::Multimode
                                ? multimode_operator(c.modes, c.c)
                                : MultipartiteOperator{TensorSpace{2, 2},
                                                       evolution_operator(
                                                           hamiltonian_of(c.model, c.h, c.J, c.J1).matrix(),
                                                           c.t)};
  const bool ising = c.model == Model::Ising;
  if (ising && std::isinf(closed_form_epsilon(c.h, c.J, c.t, c.log_base))) {
    err << "error: " << singular_message(c.h, c.J, c.t) << "\n";
    return kExitUndefined;
  }
  MeasureResult r;
  try {
    r = production_measure(op, c.log_base);
  } catch (const ZeroTrace &e) {
    if (ising) {
      err << "error: " << singular_message(c.h, c.J, c.t) << "\n";
    } else {
      err << "error: undefined measure: " << e.what() << "\n";
    }
    return kExitUndefined;
  }

  out << "model: " << model_name(c.model) << "\n";
  if (c.model == Model::Multimode) {
    out << "modes: " << c.modes << "\n"
        << "C: " << format_number(c.c) << "\n";
  } else {
    out << "h: " << format_number(c.h) << "\n"
        << "J: " << format_number(c.J) << "\n";
    if (c.model == Model::Heisenberg) out << "J1: " << format_number(c.J1) << "\n";
    out << "t: " << format_number(c.t) << "\n";
  }
  out << "log_base: " << format_number(r.log_base) << "\n"
      << "epsilon: " << format_number(r.epsilon) << "\n"
      << "norm_full: " << format_number(r.norm_full) << "\n"
      << "norm_counterpart: " << format_number(r.norm_counterpart) << "\n"
      << "trace_re: " << format_number(r.trace_full.real()) << "\n"
      << "trace_im: " << format_number(r.trace_full.imag()) << "\n";
  if (ising) {
    out << "epsilon_closed_form: "
        << format_number(closed_form_epsilon(c.h, c.J, c.t, c.log_base)) << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const SweepConfig &c, std::ostream &out, std::ostream &err) {
  if (const std::string why = validate(c); !why.empty()) {
    err << "error: " << why << "\n";
    return kExitUsage;
  }
  const std::vector<SweepRow> rows = sweep_rows(c);
  out << render_csv(rows, resolve(c.method, c.model) == Method::Both);
  return kExitOk;
}

int cmd_figure(std::string_view id, double t_max, std::size_t steps, std::ostream &out,
               std::ostream &err) {
  const auto spec = figure_spec(id);
  if (!spec) {
    err << "error: unknown figure '" << id << "' (expected 1a-1d or 2a-2d)\n";
    return kExitUsage;
  }
  SweepConfig c;
  c.model = Model::Ising;
  c.h = spec->h_over_J;
  c.J = 1.0;
  c.t_max = t_max;
  c.steps = steps;
  c.method = Method::Analytic;
  c.log_base = 2.0;
  return cmd_sweep(c, out, err);
}

int cmd_classify(double h, double J, double t_max, std::ostream &out, std::ostream &err) {
  if (J == 0.0) {
    err << "error: J = 0 means no interaction; the measure vanishes identically for all t\n";
    return kExitUsage;
  }
  if (!(t_max > 0.0)) {
    err << "error: --t-max must be > 0\n";
    return kExitUsage;
  }
  const PeriodicityClassification pc = classify_periodicity(h, J);
  const auto& [t1, t2, t3] = pc.period_triple;
  if (pc.kind == Dynamics::Periodic) {
    out << "Periodic, T=" << pi_multiple(*pc.period_pi_multiple);
    if (std::abs(J) != 1.0) out << "/|J|";
    out << "\n";
  } else {
    out << "QuasiPeriodic, T1=" << format_number(t1) << ", T2=" << format_number(t2)
        << ", T3=" << format_number(t3) << "\n";
  }
  out << "kind: " << to_string(pc.kind) << "\n";
  if (pc.rational_form) {
    out << "h/J: " << (h / J < 0 ? "-" : "") << pc.rational_form->p << "/"
        << pc.rational_form->q << "\n";
  }
  if (pc.period) out << "period: " << format_number(*pc.period) << "\n";
  out << "T1: " << format_number(t1) << "\n"
      << "T2: " << format_number(t2) << "\n"
      << "T3: " << format_number(t3) << "\n";

  const auto sing = singularity_times(h, J, t_max);
  out << "singularities up to t=" << format_number(t_max) << ":";
  if (sing.empty()) out << " none";
  out << "\n";
  for (const SingularitySpec &s : sing) {
    out << "  t=" << format_number(s.time) << " family=" << to_string(s.family)
        << " n=" << s.n << " p=" << s.p << "\n";
  }
  return kExitOk;
}

namespace {

struct Sink {
  std::ofstream file;
  std::ostream *stream;
};

bool open_sink(const std::string &path, std::ostream &fallback, Sink &sink, std::ostream &err) {
  if (path.empty() || path == "stdout" || path == "-") {
    sink.stream = &fallback;
    return true;
  }
  sink.file.open(path, std::ios::binary);
  if (!sink.file) {
    err << "error: cannot open output file '" << path << "'\n";
    return false;
  }
  sink.stream = &sink.file;
  return true;
}

// Registers a string-valued option whose text is evaluated with parse_real.
CLI::Option *real_option(CLI::App *app, const std::string &name, double &target,
                         const std::string &help) {
  return app->add_option_function<std::string>(
         name,
         [&target, name](const std::string &s) {
           const auto v = parse_real(s);
           if (!v) throw CLI::ValidationError(name, "cannot parse '" + s + "' as a number");
           target = *v;
         },
         help)
      ->type_name("REAL");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Entanglement production by evolution operators of two-spin models"};
  app.require_subcommand(1);
  // --h is the field strength, so help is long-form only (inherited by subcommands).
  app.set_help_flag("--help", "Print this help message and exit");

  const std::map<std::string, Model> models{{"ising", Model::Ising},
                                            {"heisenberg", Model::Heisenberg},
                                            {"multimode", Model::Multimode}};
  const std::map<std::string, Method> methods{{"auto", Method::Auto},
                                              {"analytic", Method::Analytic},
                                              {"numerical", Method::Numerical},
                                              {"both", Method::Both}};

  MeasureConfig mc;
  SweepConfig sc;
  std::string output;
  std::string gnuplot;
  std::string figure_id;
  double fig_t_max = default_figure_t_max();
  std::size_t fig_steps = 2001;
  double cls_h = 0.0, cls_J = 1.0, cls_t_max = 0.0;

  auto *measure = app.add_subcommand("measure", "Measure at a single time (or of the multimode operator)");
  measure->add_option("--model", mc.model, "ising | heisenberg | multimode")
      ->transform(CLI::CheckedTransformer(models, CLI::ignore_case));
  real_option(measure, "--h", mc.h, "Zeeman field");
  real_option(measure, "--J", mc.J, "longitudinal coupling");
  real_option(measure, "--J1", mc.J1, "transverse coupling (heisenberg)");
  real_option(measure, "--t", mc.t, "time");
  measure->add_option("--M", mc.modes, "number of modes (multimode)")->check(CLI::Range(2, 64));
  real_option(measure, "--C", mc.c, "amplitude C (multimode, nonzero)");
  real_option(measure, "--log-base", mc.log_base, "logarithm base (default 2)");
  measure->add_option("--output", output, "output path or 'stdout'");

  auto *sweep = app.add_subcommand("sweep", "epsilon(t) over a uniform time grid as CSV");
  sweep->add_option("--model", sc.model, "ising | heisenberg")
      ->transform(CLI::CheckedTransformer(models, CLI::ignore_case));
  real_option(sweep, "--h", sc.h, "Zeeman field");
  real_option(sweep, "--J", sc.J, "longitudinal coupling");
  real_option(sweep, "--J1", sc.J1, "transverse coupling (heisenberg)");
  real_option(sweep, "--t-max", sc.t_max, "end of the time grid")->required();
  sweep->add_option("--steps", sc.steps, "grid points including both ends");
  sweep->add_option("--method", sc.method, "auto | analytic | numerical | both")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  real_option(sweep, "--log-base", sc.log_base, "logarithm base (default 2)");
  sweep->add_option("--threads", sc.threads, "worker threads for the numerical path");
  sweep->add_option("--output", output, "output path or 'stdout'");
  sweep->add_option("--gnuplot", gnuplot, "also write a gnuplot script to this path");

  auto *figure = app.add_subcommand("figure", "Curve for a reference parameter set (1a-1d, 2a-2d)");
  figure->add_option("id", figure_id, "figure id")->required();
  real_option(figure, "--t-max", fig_t_max, "end of the time grid (default 8pi)");
  figure->add_option("--steps", fig_steps, "grid points (default 2001)");
  figure->add_option("--output", output, "output path or 'stdout'");
  figure->add_option("--gnuplot", gnuplot, "also write a gnuplot script to this path");

  auto *classify = app.add_subcommand("classify", "Periodicity and singularities of the Ising measure");
  real_option(classify, "--h", cls_h, "Zeeman field");
  real_option(classify, "--J", cls_J, "longitudinal coupling");
  real_option(classify, "--t-max", cls_t_max, "singularity horizon (default 8pi/|J|)");
  classify->add_option("--output", output, "output path or 'stdout'");

  std::vector<const char *> argv{"entprod"};
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Sink sink;
  if (!open_sink(output, out, sink, err)) return kExitUsage;
  std::ostream &dst = *sink.stream;

  auto write_gnuplot = [&](const std::string &title) {
    if (gnuplot.empty()) return true;
    std::ofstream g(gnuplot, std::ios::binary);
    if (!g) {
      err << "error: cannot open gnuplot script path '" << gnuplot << "'\n";
      return false;
    }
    g << gnuplot_script(output.empty() || output == "stdout" ? "data.csv" : output, title);
    return true;
  };

  try {
    if (measure->parsed()) return cmd_measure(mc, dst, err);
    if (sweep->parsed()) {
      const int rc = cmd_sweep(sc, dst, err);
      if (rc == kExitOk && !write_gnuplot("epsilon(t), " + std::string(model_name(sc.model)))) {
        return kExitUsage;
      }
      return rc;
    }
    if (figure->parsed()) {
      const int rc = cmd_figure(figure_id, fig_t_max, fig_steps, dst, err);
      if (rc == kExitOk) {
        const auto spec = figure_spec(figure_id);
        if (!write_gnuplot("figure " + figure_id + ", h/J = " + spec->label)) return kExitUsage;
      }
      return rc;
    }
    if (classify->parsed()) {
      const double horizon = cls_t_max > 0.0 ? cls_t_max : 8.0 * kPi / std::abs(cls_J == 0.0 ? 1.0 : cls_J);
      return cmd_classify(cls_h, cls_J, horizon, dst, err);
    }
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitUndefined;
  }
  return kExitUsage;
}

}  // namespace entprod::cli
