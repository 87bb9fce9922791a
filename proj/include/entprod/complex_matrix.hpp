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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entprod {

using Complex = std::complex<double>;

/**
 * Dense row-major complex matrix.
 *
 * Every operator in the library (Hamiltonians, evolution operators,
 * partial traces) is carried by this type. Entries are checked to be
 * finite whenever a matrix is built from caller-supplied data.
 */
class ComplexMatrix {
 public:
  /** rows x cols zero matrix. */
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /** Takes ownership of row-major entries; throws on size or NaN/Inf. */
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /** Nested row lists, e.g. {{0, 1}, {1, 0}}. */
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  ComplexMatrix adjoint() const;

  ComplexMatrix &operator+=(const ComplexMatrix &other);
  ComplexMatrix &operator-=(const ComplexMatrix &other);
  ComplexMatrix &operator*=(Complex s);

  friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product; the left factor carries the outer (slow) block index:
/// (A (x) B)[i*p + k, j*q + l] = A[i,j] * B[k,l] for B of shape p x q.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

Complex trace(const ComplexMatrix &a);

/// Hilbert-Schmidt (Frobenius) norm sqrt(Tr A^dagger A).
double hs_norm(const ComplexMatrix &a);

/// Largest |A[i,j]|.
double max_abs(const ComplexMatrix &a);

/// Largest |A[i,j] - B[i,j]|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest |A[i,j] - conj(A[j,i])|.
double hermitian_defect(const ComplexMatrix &a);

/** Spectral data of a Hermitian matrix, eigenvalues ascending. */
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;  // column k pairs with eigenvalues[k]

  /// V diag(f(lambda)) V^dagger.
  template <typename F>
  ComplexMatrix apply(F &&f) const;
};

/// Asymmetry allowed on input to hermitian_eig, per entry.
inline constexpr double kHermitianTolerance = 1e-10;

/**
 * Cyclic complex Jacobi diagonalisation.
 *
 * Sweeps until the off-diagonal Frobenius mass falls below 1e-14 * ||H||.
 * Throws NonHermitianInput when |H[i,j] - conj(H[j,i])| > 1e-10.
 */
EigenDecomposition hermitian_eig(const ComplexMatrix &h);

/**
 * Evolution operator exp(-i H t) built from a single decomposition of H,
 * so that a whole time grid costs one diagonalisation.
 */
class Propagator {
 public:
  explicit Propagator(const ComplexMatrix &hamiltonian);

  ComplexMatrix at(double t) const;
  const EigenDecomposition &spectrum() const { return spectrum_; }

 private:
  EigenDecomposition spectrum_;
};

/// exp(-i H t) via the Hermitian eigendecomposition of H.
ComplexMatrix evolution_operator(const ComplexMatrix &h, double t);

template <typename F>
ComplexMatrix EigenDecomposition::apply(F &&f) const {
  const std::size_t n = eigenvalues.size();
  std::vector<Complex> fl(n);
  for (std::size_t k = 0; k < n; ++k) fl[k] = f(eigenvalues[k]);
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) {
        acc += eigenvectors(i, k) * fl[k] * std::conj(eigenvectors(j, k));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace entprod
