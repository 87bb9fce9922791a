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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "entprod/complex_matrix.hpp"
#include "entprod/measure.hpp"

// Closed-form results for the two-spin Ising pair
//   H = -h (S1z + S2z) + 2J S1z S2z.
// The Zeeman and interaction parts commute, so exp(-iHt) factorises and
// every quantity below reduces to trigonometric functions of ht and Jt.
// Times are absolute; with J = 1 they are in units of 1/J.

namespace entprod {

/// Denominators below this are treated as zero and epsilon reports +inf.
inline constexpr double kSingularTolerance = 1e-12;

/// exp(-iHt) assembled from the factorised Zeeman and interaction exponentials.
ComplexMatrix ising_evolution_closed(double h, double J, double t);

/// Reduction of exp(-iHt) onto either spin (both reductions coincide).
ComplexMatrix ising_partial_evolution(double h, double J, double t);

/// Tr exp(-iHt) = 2(1 + cos ht) cos(Jt/2) + 2i (1 - cos ht) sin(Jt/2).
Complex ising_trace(double h, double J, double t);

/// ||U_j(t)||^2 = 4 (1 + cos ht cos Jt), in [0, 8].
double ising_partial_norm_sq(double h, double J, double t);

/// |Tr U(t)|^2 = 4 (1 + cos^2 ht + 2 cos ht cos Jt), in [0, 16].
double ising_trace_sq(double h, double J, double t);

/// 1 + cos(ht) cos(Jt), evaluated as cos^2((h+J)t/2) + cos^2((h-J)t/2).
double ising_denominator(double h, double J, double t);

/**
 * epsilon(t) = log( sqrt(1 + cos^2 ht + 2 cos ht cos Jt) / (1 + cos ht cos Jt) ).
 *
 * Evaluated as 0.5 * log1p((cos ht sin Jt / D)^2), D = ising_denominator,
 * which is the same quantity without cancellation near t = 0 and makes
 * epsilon >= 0 manifest. Returns +inf where D <= kSingularTolerance.
 * Depends only on |h| and |J|.
 */
double epsilon_ising(double h, double J, double t, double log_base = kDefaultLogBase);

/// Zero-field case 0.5 * log(2 / (1 + cos Jt)); +inf at t = (1+2n) pi / |J|.
double epsilon_zero_field(double J, double t, double log_base = kDefaultLogBase);

struct Rational {
  std::int64_t p;
  std::int64_t q;  // > 0, gcd(p, q) == 1

  friend bool operator==(const Rational &, const Rational &) = default;
};

inline constexpr double kRationalTolerance = 1e-9;
inline constexpr std::int64_t kMaxDenominator = 1000;

/// First continued-fraction convergent p/q of x >= 0 with q <= max_denominator
/// and |x - p/q| <= tolerance, if any.
std::optional<Rational> rational_approximation(double x,
                                               double tolerance = kRationalTolerance,
                                               std::int64_t max_denominator = kMaxDenominator);

enum class Dynamics { Periodic, QuasiPeriodic };

struct PeriodicityClassification {
  Dynamics kind;
  /// Present iff Periodic: pi q / |J| when p, q are both odd, else 2 pi q / |J|.
  std::optional<double> period;
  /// period == period_pi_multiple * pi / |J|.
  std::optional<std::int64_t> period_pi_multiple;
  /// (pi/|h|, 2pi/|h+J|, 2pi/|h-J|); +inf where a denominator vanishes.
  std::array<double, 3> period_triple;
  /// |h/J| = p/q when detected as rational.
  std::optional<Rational> rational_form;
};

/// Throws NoInteraction when J == 0 (epsilon is then identically zero).
PeriodicityClassification classify_periodicity(double h, double J,
                                               double rational_tolerance = kRationalTolerance,
                                               std::int64_t max_denominator = kMaxDenominator);

enum class SingularFamily {
  OddPiTime,   // h/J = 2p/(1+2n), t = (1+2n) pi/|J|
  EvenPiTime,  // h/J = (1+2n)/(2p), t = 2p pi/|J|
  ZeroField,   // h = 0, t = (1+2n) pi/|J|
};

struct SingularitySpec {
  SingularFamily family;
  std::int64_t n;
  std::int64_t p;  // 0 for ZeroField
  double time;
};

/**
 * All times in (0, t_max] at which epsilon diverges, sorted by time.
 * Empty when |h/J| is not rational (within tolerance) or fits neither
 * family. Throws NoInteraction when J == 0.
 */
std::vector<SingularitySpec> singularity_times(double h, double J, double t_max,
                                               double rational_tolerance = kRationalTolerance,
                                               std::int64_t max_denominator = kMaxDenominator);

const char *to_string(SingularFamily family);
const char *to_string(Dynamics kind);

}  // namespace entprod
