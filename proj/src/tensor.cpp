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

#include "entprod/tensor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "entprod/errors.hpp"

namespace entprod {

TensorSpace::TensorSpace(std::vector<std::size_t> dims)
    : dims_(std::move(dims)), strides_(dims_.size()), total_(1) {
  if (dims_.empty()) throw std::invalid_argument("TensorSpace: no factors");
  for (std::size_t i = dims_.size(); i-- > 0;) {
    if (dims_[i] == 0) throw std::invalid_argument("TensorSpace: zero dimension");
    strides_[i] = total_;
    total_ *= dims_[i];
  }
}

MultipartiteOperator::MultipartiteOperator(TensorSpace space, ComplexMatrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.rows() != space_.total()) {
    throw DimensionMismatch("MultipartiteOperator: matrix " +
                            std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) +
                            " does not fit space of dimension " +
                            std::to_string(space_.total()));
  }
}

StateVector::StateVector(TensorSpace sp, std::vector<Complex> amps,
                         bool require_normalized)
    : space(std::move(sp)), amplitudes(std::move(amps)) {
  if (amplitudes.size() != space.total()) {
    throw DimensionMismatch("StateVector: " + std::to_string(amplitudes.size()) +
                            " amplitudes for dimension " +
                            std::to_string(space.total()));
  }
  if (require_normalized && !is_normalized()) {
    throw std::invalid_argument("StateVector: not normalised");
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex &z : amplitudes) s += std::norm(z);
  return std::sqrt(s);
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

MultipartiteOperator partial_trace(const MultipartiteOperator &op, std::size_t keep) {
  const TensorSpace &space = op.space();
  if (keep >= space.factors()) {
    throw std::out_of_range("partial_trace: factor " + std::to_string(keep) +
                            " of " + std::to_string(space.factors()));
  }
  const std::size_t m = space.dim(keep);
  const std::size_t s = space.stride(keep);
  const ComplexMatrix &a = op.matrix();

  // Flat indices whose `keep` digit is zero enumerate the complement; the
  // kept digit then adds a*s on the row side and b*s on the column side.
  ComplexMatrix out(m, m);
  for (std::size_t x = 0; x < space.total(); ++x) {
    if ((x / s) % m != 0) continue;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) out(r, c) += a(x + r * s, x + c * s);
    }
  }
  return {TensorSpace{m}, std::move(out)};
}

MultipartiteOperator embed_local(const ComplexMatrix &local, const TensorSpace &space,
                                 std::size_t at) {
  if (at >= space.factors()) {
    throw std::out_of_range("embed_local: factor " + std::to_string(at) + " of " +
                            std::to_string(space.factors()));
  }
  if (!local.is_square() || local.rows() != space.dim(at)) {
    throw DimensionMismatch("embed_local: local operator does not match factor " +
                            std::to_string(at));
  }
  ComplexMatrix acc = at == 0 ? local : ComplexMatrix::identity(space.dim(0));
  for (std::size_t i = 1; i < space.factors(); ++i) {
    acc = kron(acc, i == at ? local : ComplexMatrix::identity(space.dim(i)));
  }
  return {space, std::move(acc)};
}

StateVector product_state(std::span<const StateVector> factors, bool strict) {
  if (factors.empty()) throw std::invalid_argument("product_state: no factors");
  std::vector<std::size_t> dims;
  std::vector<Complex> amps{1.0};
  for (const StateVector &f : factors) {
    if (strict && !f.is_normalized()) {
      throw std::invalid_argument("product_state: factor not normalised");
    }
    for (std::size_t d : f.space.dims()) dims.push_back(d);
    std::vector<Complex> next;
    next.reserve(amps.size() * f.amplitudes.size());
    for (const Complex &a : amps) {
      for (const Complex &b : f.amplitudes) next.push_back(a * b);
    }
    amps = std::move(next);
  }
  return StateVector(TensorSpace(std::move(dims)), std::move(amps));
}

StateVector apply(const MultipartiteOperator &op, const StateVector &psi) {
  if (!(op.space() == psi.space)) {
    throw DimensionMismatch("apply: operator and state live on different spaces");
  }
  const ComplexMatrix &a = op.matrix();
  std::vector<Complex> out(psi.amplitudes.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * psi.amplitudes[j];
  }
  return StateVector(psi.space, std::move(out));
}

Complex inner(const StateVector &a, const StateVector &b) {
  if (a.amplitudes.size() != b.amplitudes.size()) {
    throw DimensionMismatch("inner: state dimensions differ");
  }
  Complex acc{};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return acc;
}

}  // namespace entprod
