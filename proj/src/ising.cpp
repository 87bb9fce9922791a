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

#include "entprod/ising.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "entprod/errors.hpp"
#include "entprod/spin_models.hpp"

namespace entprod {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr Complex kI{0.0, 1.0};

void require_interaction(double J, const char *who) {
  if (J == 0.0) {
    throw NoInteraction(std::string(who) +
                        ": J = 0, no interaction; the measure vanishes identically");
  }
}

}  // namespace

ComplexMatrix ising_evolution_closed(double h, double J, double t) {
  const SpinHalfOps s = spin_half_ops();
  const TensorSpace pair{2, 2};
  // Z = H0/h and W = Hint/J do not depend on h or J, so the h -> 0 and
  // J -> 0 limits are regular. Z^3 = Z and (2W)^2 = 1.
  ComplexMatrix z = embed_local(s.sz, pair, 0).matrix() + embed_local(s.sz, pair, 1).matrix();
  z *= -1.0;
  ComplexMatrix w = kron(s.sz, s.sz);
  w *= 2.0;
  const ComplexMatrix z2 = z * z;
  const ComplexMatrix one = ComplexMatrix::identity(4);

  const double ch = std::cos(h * t);
  const double sh = std::sin(h * t);
  const double cj = std::cos(0.5 * J * t);
  const double sj = std::sin(0.5 * J * t);

  ComplexMatrix u = (one + z2 * Complex(ch - 1.0)) * Complex(cj);
  u -= z * Complex(sh * sj);
  u -= (w * Complex(2.0) + z2 * Complex(ch - 1.0)) * (kI * sj);
  u -= z * (kI * sh * cj);
  return u;
}

ComplexMatrix ising_partial_evolution(double h, double J, double t) {
  const SpinHalfOps s = spin_half_ops();
  const double ch = std::cos(h * t);
  const double sh = std::sin(h * t);
  const double cj = std::cos(0.5 * J * t);
  const double sj = std::sin(0.5 * J * t);
  const ComplexMatrix one = ComplexMatrix::identity(2);
  return one * Complex((1.0 + ch) * cj, (1.0 - ch) * sj) +
         s.sz * Complex(2.0 * sh * sj, 2.0 * sh * cj);
}

Complex ising_trace(double h, double J, double t) {
  const double ch = std::cos(h * t);
  return {2.0 * (1.0 + ch) * std::cos(0.5 * J * t), 2.0 * (1.0 - ch) * std::sin(0.5 * J * t)};
}

double ising_denominator(double h, double J, double t) {
  const double a = std::cos(0.5 * (h + J) * t);
  const double b = std::cos(0.5 * (h - J) * t);
  return a * a + b * b;
}

double ising_partial_norm_sq(double h, double J, double t) {
  return 4.0 * ising_denominator(h, J, t);
}

double ising_trace_sq(double h, double J, double t) {
  // 1 + cos ht = 2cos^2(ht/2), 1 - cos ht = 2sin^2(ht/2).
  const double c2 = std::pow(std::cos(0.5 * h * t), 2);
  const double s2 = std::pow(std::sin(0.5 * h * t), 2);
  const double cj = std::cos(0.5 * J * t);
  const double sj = std::sin(0.5 * J * t);
  return 16.0 * (c2 * c2 * cj * cj + s2 * s2 * sj * sj);
}

double epsilon_ising(double h, double J, double t, double log_base) {
  h = std::abs(h);
  J = std::abs(J);
  const double d = ising_denominator(h, J, t);
  if (d <= kSingularTolerance) return kInf;
  const double x = std::cos(h * t) * std::sin(J * t) / d;
  return 0.5 * std::log1p(x * x) / std::log(log_base);
}

double epsilon_zero_field(double J, double t, double log_base) {
  const double c = std::cos(0.5 * J * t);
  const double d = 2.0 * c * c;  // 1 + cos Jt
  if (d <= kSingularTolerance) return kInf;
  return 0.5 * std::log(2.0 / d) / std::log(log_base);
}

std::optional<Rational> rational_approximation(double x, double tolerance,
                                               std::int64_t max_denominator) {
  if (!(x >= 0.0) || !std::isfinite(x) || x > 1e15) return std::nullopt;
  // Convergents p_k / q_k of the continued fraction [a0; a1, a2, ...].
  std::int64_t p_prev = 1, p = static_cast<std::int64_t>(std::floor(x));
  std::int64_t q_prev = 0, q = 1;
  double frac = x - std::floor(x);
  while (q <= max_denominator) {
    if (std::abs(x - static_cast<double>(p) / static_cast<double>(q)) <= tolerance) {
      return Rational{p, q};
    }
    if (frac <= 0.0) break;
    const double inv = 1.0 / frac;
    if (inv > 1e15) break;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    frac = inv - std::floor(inv);
    const std::int64_t p_next = a * p + p_prev;
    const std::int64_t q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return std::nullopt;
}

PeriodicityClassification classify_periodicity(double h, double J,
                                               double rational_tolerance,
                                               std::int64_t max_denominator) {
  require_interaction(J, "classify_periodicity");
  const double pi = std::numbers::pi;
  auto period_of = [&](double freq) {
    return freq == 0.0 ? kInf : pi / std::abs(freq);
  };

  PeriodicityClassification out;
  out.period_triple = {period_of(h), 2.0 * period_of(h + J), 2.0 * period_of(h - J)};
  out.rational_form =
      rational_approximation(std::abs(h / J), rational_tolerance, max_denominator);
  if (!out.rational_form) {
    out.kind = Dynamics::QuasiPeriodic;
    return out;
  }
  const auto [p, q] = *out.rational_form;
  const bool both_odd = (p % 2 != 0) && (q % 2 != 0);
  out.kind = Dynamics::Periodic;
  out.period_pi_multiple = both_odd ? q : 2 * q;
  out.period = static_cast<double>(*out.period_pi_multiple) * pi / std::abs(J);
  return out;
}

std::vector<SingularitySpec> singularity_times(double h, double J, double t_max,
                                               double rational_tolerance,
                                               std::int64_t max_denominator) {
  require_interaction(J, "singularity_times");
  if (!(t_max > 0.0)) throw std::invalid_argument("singularity_times: t_max must be > 0");
  std::vector<SingularitySpec> out;
  const double unit = std::numbers::pi / std::abs(J);

  const auto r = rational_approximation(std::abs(h / J), rational_tolerance, max_denominator);
  if (!r) return out;
  const auto [a, b] = *r;

  // The divergence needs cos(ht) cos(Jt) = -1. Writing |h/J| = a/b in lowest
  // terms, solutions exist only when exactly one of a, b is even, and then
  // fall at t = b k pi/|J| for odd k. a = 0 is the zero-field case.
  SingularFamily family;
  if (a == 0) {
    family = SingularFamily::ZeroField;
  } else if (a % 2 == 0 && b % 2 != 0) {
    family = SingularFamily::OddPiTime;
  } else if (a % 2 != 0 && b % 2 == 0) {
    family = SingularFamily::EvenPiTime;
  } else {
    return out;
  }

  for (std::int64_t k = 1;; k += 2) {
    const double time = static_cast<double>(b * k) * unit;
    if (time > t_max * (1.0 + 1e-12)) break;
    switch (family) {
      case SingularFamily::ZeroField:
        out.push_back({family, (k - 1) / 2, 0, time});
        break;
      case SingularFamily::OddPiTime:
        out.push_back({family, (b * k - 1) / 2, a * k / 2, time});
        break;
      case SingularFamily::EvenPiTime:
        out.push_back({family, (a * k - 1) / 2, b * k / 2, time});
        break;
    }
  }
  return out;
}

const char *to_string(SingularFamily family) {
  switch (family) {
    case SingularFamily::OddPiTime:
      return "odd-pi-time";
    case SingularFamily::EvenPiTime:
      return "even-pi-time";
    case SingularFamily::ZeroField:
      return "zero-field";
  }
  return "?";
}

const char *to_string(Dynamics kind) {
  return kind == Dynamics::Periodic ? "Periodic" : "QuasiPeriodic";
}

}  // namespace entprod
