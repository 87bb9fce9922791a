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

#include "entprod/short_time.hpp"

#include <cmath>
#include <string>

#include "entprod/errors.hpp"

namespace entprod {

namespace {

// m_other * Tr_other H^2 - (Tr_other H)^2, on the kept factor.
ComplexMatrix reduced_variance(const MultipartiteOperator &h, const MultipartiteOperator &h2,
                               std::size_t keep, double m_other) {
  const ComplexMatrix r1 = partial_trace(h, keep).matrix();
  ComplexMatrix out = partial_trace(h2, keep).matrix();
  out *= m_other;
  return out - r1 * r1;
}

}  // namespace

ShortTimeData short_time_data(const MultipartiteOperator &hamiltonian, double log_base) {
  const TensorSpace &space = hamiltonian.space();
  if (space.factors() != 2) {
    throw DimensionMismatch("short_time_data: bipartite space required, got " +
                            std::to_string(space.factors()) + " factors");
  }
  if (!(log_base > 1.0)) throw std::invalid_argument("short_time_data: log base must be > 1");
  const ComplexMatrix &h = hamiltonian.matrix();
  const double defect = hermitian_defect(h);
  if (defect > kHermitianTolerance) {
    throw NonHermitianInput("short_time_data: asymmetry " + std::to_string(defect));
  }
  const double m1 = static_cast<double>(space.dim(0));
  const double m2 = static_cast<double>(space.dim(1));
  const MultipartiteOperator h2{space, h * h};

  ComplexMatrix d1 = reduced_variance(hamiltonian, h2, 0, m2);
  ComplexMatrix d2 = reduced_variance(hamiltonian, h2, 1, m1);
  const Complex tr = trace(h);
  const double d12 = (m1 * m2 * trace(h2.matrix()) - tr * tr).real();
  const double mu = (m1 * trace(d1).real() + m2 * trace(d2).real() - d12) / (m1 * m2);

  return ShortTimeData{
      MultipartiteOperator{TensorSpace{space.dim(0)}, std::move(d1)},
      MultipartiteOperator{TensorSpace{space.dim(1)}, std::move(d2)},
      d12,
      mu,
      mu / (2.0 * m1 * m2 * std::log(log_base)),
      log_base,
  };
}

double epsilon_quadratic(const ShortTimeData &data, double t) { return data.coeff * t * t; }

IsingSeries ising_series(double h, double J, double log_base) {
  const double ln = std::log(log_base);
  return {J * J / (8.0 * ln), J * J * (J * J - 12.0 * h * h) / (192.0 * ln)};
}

}  // namespace entprod
