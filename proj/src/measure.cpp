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

#include "entprod/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "entprod/errors.hpp"

namespace entprod {

namespace {

void require_log_base(double base) {
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw std::invalid_argument("log base must be finite and > 1, got " +
                                std::to_string(base));
  }
}

Complex checked_trace(const MultipartiteOperator &op, double norm) {
  const Complex tr = trace(op.matrix());
  if (std::abs(tr) <= kZeroTraceRelTol * norm) {
    throw ZeroTrace("operator trace " + std::to_string(std::abs(tr)) +
                    " vanishes relative to its norm " + std::to_string(norm));
  }
  return tr;
}

}  // namespace

MultipartiteOperator nonentangling_counterpart(const MultipartiteOperator &op) {
  const Complex tr = checked_trace(op, hs_norm(op.matrix()));
  const std::size_t n = op.space().factors();
  ComplexMatrix acc = partial_trace(op, 0).matrix();
  for (std::size_t i = 1; i < n; ++i) acc = kron(acc, partial_trace(op, i).matrix());
  acc *= std::pow(tr, -static_cast<double>(n - 1));
  return {op.space(), std::move(acc)};
}

MeasureResult production_measure(const MultipartiteOperator &op, double log_base) {
  require_log_base(log_base);
  const double norm = hs_norm(op.matrix());
  const Complex tr = checked_trace(op, norm);
  const std::size_t n = op.space().factors();

  // Work in logarithms: products of N reduced norms overflow quickly.
  double log_reduced = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    log_reduced += std::log(hs_norm(partial_trace(op, i).matrix()));
  }
  const double log_trace_power = static_cast<double>(n - 1) * std::log(std::abs(tr));
  const double log_counterpart = log_reduced - log_trace_power;

  MeasureResult r;
  r.epsilon = (std::log(norm) - log_counterpart) / std::log(log_base);
  r.log_base = log_base;
  r.norm_full = norm;
  r.norm_counterpart = std::exp(log_counterpart);
  r.trace_full = tr;
  return r;
}

MeasureResult production_measure_materialized(const MultipartiteOperator &op,
                                              double log_base) {
  require_log_base(log_base);
  const MultipartiteOperator counterpart = nonentangling_counterpart(op);
  MeasureResult r;
  r.norm_full = hs_norm(op.matrix());
  r.norm_counterpart = hs_norm(counterpart.matrix());
  r.trace_full = trace(op.matrix());
  r.log_base = log_base;
  r.epsilon = std::log(r.norm_full / r.norm_counterpart) / std::log(log_base);
  return r;
}

std::vector<double> uniform_grid(double t_max, std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("uniform_grid: steps must be >= 2");
  if (!std::isfinite(t_max)) throw std::invalid_argument("uniform_grid: t_max not finite");
  std::vector<double> t(steps);
  const double last = static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) t[k] = t_max * static_cast<double>(k) / last;
  return t;
}

std::vector<CurvePoint> evolution_measure_series(const MultipartiteOperator &hamiltonian,
                                                 std::span<const double> times,
                                                 double log_base, unsigned threads) {
  require_log_base(log_base);
  for (double t : times) {
    if (!std::isfinite(t)) throw std::invalid_argument("evolution_measure_series: non-finite time");
  }
  const Propagator propagator(hamiltonian.matrix());
  const TensorSpace &space = hamiltonian.space();

  std::vector<CurvePoint> out(times.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      double eps;
      try {
        eps = production_measure({space, propagator.at(times[k])}, log_base).epsilon;
      } catch (const ZeroTrace &) {
        eps = std::numeric_limits<double>::infinity();
      }
      out[k] = {times[k], eps};
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(times.size(), 1));
  if (workers == 1) {
    work(0, times.size());
    return out;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (times.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(times.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(work, begin, end);
  }
  pool.clear();  // joins
  return out;
}

double entanglement_probability(const MultipartiteOperator &hamiltonian,
                                const StateVector &psi0, double t) {
  if (!(hamiltonian.space() == psi0.space)) {
    throw DimensionMismatch("entanglement_probability: state and Hamiltonian spaces differ");
  }
  const MultipartiteOperator u{hamiltonian.space(), evolution_operator(hamiltonian.matrix(), t)};
  const double p = std::norm(inner(psi0, apply(u, psi0)));
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace entprod
