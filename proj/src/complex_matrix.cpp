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

#include "entprod/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entprod/errors.hpp"

namespace entprod {

namespace {

void require_finite(std::span<const Complex> data) {
  for (const Complex &z : data) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NonFiniteEntry("ComplexMatrix: non-finite entry");
    }
  }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b,
                        const char *op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": shape " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionMismatch("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw DimensionMismatch("ComplexMatrix: dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("ComplexMatrix: entry count " +
                            std::to_string(data_.size()) + " != " +
                            std::to_string(rows * cols));
  }
  require_finite(data_);
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionMismatch("ComplexMatrix: dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_) {
      throw DimensionMismatch("ComplexMatrix: ragged initializer");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
  require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  require_finite(m.entries());
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  std::vector<Complex> z(diag.begin(), diag.end());
  return diagonal(std::span<const Complex>(z));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
  for (Complex &z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
  return matmul(a, b);
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + std::to_string(a.cols()) +
                            " columns vs " + std::to_string(b.rows()) + " rows");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  ComplexMatrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t l = 0; l < q; ++l) out(i * p + k, j * q + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

Complex trace(const ComplexMatrix &a) {
  if (!a.is_square()) throw DimensionMismatch("trace: matrix is not square");
  Complex acc{};
  for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

double hs_norm(const ComplexMatrix &a) {
  // Scaled accumulation keeps tiny and huge entries from under/overflowing.
  double scale = 0.0;
  double ssq = 1.0;
  for (const Complex &z : a.entries()) {
    for (double v : {z.real(), z.imag()}) {
      const double av = std::abs(v);
      if (av == 0.0) continue;
      if (scale < av) {
        ssq = 1.0 + ssq * (scale / av) * (scale / av);
        scale = av;
      } else {
        ssq += (av / scale) * (av / scale);
      }
    }
  }
  return scale * std::sqrt(ssq);
}

double max_abs(const ComplexMatrix &a) {
  double m = 0.0;
  for (const Complex &z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return m;
}

double hermitian_defect(const ComplexMatrix &a) {
  if (!a.is_square()) throw DimensionMismatch("hermitian_defect: not square");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return m;
}

namespace {

double off_diagonal_mass(const ComplexMatrix &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The unitary J acts on the
// (p,q) plane: J = diag(1, conj(phase)) * R(c, s), where the phase makes the
// pivot real and R is the classical real symmetric rotation.
void rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase_c = std::conj(apq / mag);

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * phase_c;
  const Complex jqq = c * phase_c;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix &h) {
  if (!h.is_square()) throw DimensionMismatch("hermitian_eig: not square");
  const double defect = hermitian_defect(h);
  if (defect > kHermitianTolerance) {
    throw NonHermitianInput("hermitian_eig: asymmetry " + std::to_string(defect) +
                            " exceeds tolerance");
  }
  const std::size_t n = h.rows();

  // Symmetrise so rounding-level asymmetry cannot leak into the rotations.
  ComplexMatrix a = h;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex m = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = 1e-14 * hs_norm(h);
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_mass(a) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

Propagator::Propagator(const ComplexMatrix &hamiltonian)
    : spectrum_(hermitian_eig(hamiltonian)) {}

ComplexMatrix Propagator::at(double t) const {
  return spectrum_.apply([t](double e) { return std::polar(1.0, -e * t); });
}

ComplexMatrix evolution_operator(const ComplexMatrix &h, double t) {
  return Propagator(h).at(t);
}

}  // namespace entprod
