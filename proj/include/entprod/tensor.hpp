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
#include <initializer_list>
#include <span>
#include <vector>

#include "entprod/complex_matrix.hpp"

namespace entprod {

/**
 * Ordered factorisation H = H_1 (x) ... (x) H_N of a Hilbert space.
 *
 * Factor 0 is the outermost (slowest) Kronecker index, consistent with
 * kron(). stride(i) is the step in the flat index when factor i advances.
 */
class TensorSpace {
 public:
  explicit TensorSpace(std::vector<std::size_t> dims);
  TensorSpace(std::initializer_list<std::size_t> dims)
      : TensorSpace(std::vector<std::size_t>(dims)) {}

  std::size_t factors() const { return dims_.size(); }
  std::size_t dim(std::size_t i) const { return dims_.at(i); }
  std::size_t total() const { return total_; }
  std::size_t stride(std::size_t i) const { return strides_.at(i); }
  std::span<const std::size_t> dims() const { return dims_; }

  friend bool operator==(const TensorSpace &a, const TensorSpace &b) {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_;
};

/** Square operator on a TensorSpace; side equals space.total(). */
class MultipartiteOperator {
 public:
  MultipartiteOperator(TensorSpace space, ComplexMatrix matrix);

  const TensorSpace &space() const { return space_; }
  const ComplexMatrix &matrix() const { return matrix_; }

 private:
  TensorSpace space_;
  ComplexMatrix matrix_;
};

/** Amplitudes on a TensorSpace. */
struct StateVector {
  TensorSpace space;
  std::vector<Complex> amplitudes;

  /// Validates length; when `require_normalized`, also unit norm to 1e-12.
  StateVector(TensorSpace space, std::vector<Complex> amplitudes,
              bool require_normalized = false);

  double norm() const;
  bool is_normalized(double tol = 1e-12) const;
};

/// Reduction onto factor `keep`: the trace over every other factor.
/// Throws std::out_of_range when keep >= factors().
MultipartiteOperator partial_trace(const MultipartiteOperator &op, std::size_t keep);

/// local placed at position `at`, identities elsewhere, factor order kept.
MultipartiteOperator embed_local(const ComplexMatrix &local,
                                 const TensorSpace &space, std::size_t at);

/// Kronecker product of the factor states. With `strict`, a factor that is
/// not normalised to 1e-12 raises std::invalid_argument.
StateVector product_state(std::span<const StateVector> factors, bool strict = true);

/// Matrix-vector action of an operator on a state of the same space.
StateVector apply(const MultipartiteOperator &op, const StateVector &psi);

/// <a|b>.
Complex inner(const StateVector &a, const StateVector &b);

}  // namespace entprod
