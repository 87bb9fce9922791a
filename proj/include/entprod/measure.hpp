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
#include <span>
#include <vector>

#include "entprod/complex_matrix.hpp"
#include "entprod/tensor.hpp"

namespace entprod {

inline constexpr double kDefaultLogBase = 2.0;

/// |Tr A| <= kZeroTraceRelTol * ||A|| counts as a vanishing trace.
inline constexpr double kZeroTraceRelTol = 1e-12;

/**
 * Entanglement-production measure of an operator together with the
 * quantities it is built from.
 *
 * epsilon = log_base(norm_full / norm_counterpart). It is zero for product
 * operators, can be negative for non-unitary operators, and is expressed in
 * bits when log_base == 2.
 */
struct MeasureResult {
  double epsilon;
  double log_base;
  double norm_full;
  double norm_counterpart;
  Complex trace_full;
};

/**
 * Non-entangling counterpart (A_1 (x) ... (x) A_N) / (Tr A)^(N-1), where
 * A_i is the reduction of A onto factor i. It has the same trace as A.
 *
 * Throws ZeroTrace when |Tr A| <= 1e-12 * ||A||.
 */
MultipartiteOperator nonentangling_counterpart(const MultipartiteOperator &op);

/**
 * Measure computed from the reductions alone:
 *
 *   epsilon = log(||A|| |Tr A|^(N-1) / prod_i ||A_i||)
 *
 * The counterpart is never formed, so cost is one pass per factor.
 * Throws ZeroTrace as nonentangling_counterpart does, and
 * std::invalid_argument unless log_base > 1.
 */
MeasureResult production_measure(const MultipartiteOperator &op,
                                 double log_base = kDefaultLogBase);

/// Cross-check path: materialises the counterpart and takes the norm ratio
/// directly. Must agree with production_measure up to rounding.
MeasureResult production_measure_materialized(const MultipartiteOperator &op,
                                              double log_base = kDefaultLogBase);

/// One sample of epsilon(t); epsilon is +inf where the trace of U(t) vanishes.
struct CurvePoint {
  double t;
  double epsilon;
};

/// t_k = t_max * k / (steps - 1), k = 0..steps-1. Requires steps >= 2.
std::vector<double> uniform_grid(double t_max, std::size_t steps);

/**
 * epsilon(U(t)) for U(t) = exp(-i H t) over a time grid.
 *
 * H is diagonalised once. Points whose evolution operator has vanishing
 * trace are returned as +inf instead of raising. Work is split over
 * `threads` workers; the output is in grid order and bit-identical for any
 * thread count. Throws NonHermitianInput for a non-Hermitian generator.
 */
std::vector<CurvePoint> evolution_measure_series(const MultipartiteOperator &hamiltonian,
                                                 std::span<const double> times,
                                                 double log_base = kDefaultLogBase,
                                                 unsigned threads = 1);

/// Return probability |<psi0| U(t) |psi0>|^2, in [0, 1].
double entanglement_probability(const MultipartiteOperator &hamiltonian,
                                const StateVector &psi0, double t);

}  // namespace entprod
