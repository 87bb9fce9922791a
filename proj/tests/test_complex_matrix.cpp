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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "entprod/complex_matrix.hpp"
#include "entprod/errors.hpp"
#include "entprod/spin_models.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace entprod {
namespace {

using testing::random_hermitian;
using testing::Rng;

const Complex I{0.0, 1.0};

TEST(ComplexMatrix, ConstructionChecksSizeAndFiniteness) {
  EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionMismatch);
  std::vector<Complex> bad(4);
  bad[2] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(ComplexMatrix(2, 2, bad), NonFiniteEntry);
  bad[2] = {0.0, std::numeric_limits<double>::infinity()};
  EXPECT_THROW(ComplexMatrix(2, 2, bad), NonFiniteEntry);
}

TEST(ComplexMatrix, MatmulSmall) {
  const ComplexMatrix a{{1, 2}, {3, 4}};
  const ComplexMatrix b{{0, 1}, {1, 0}};
  const ComplexMatrix expect{{2, 1}, {4, 3}};
  EXPECT_EQ(matmul(a, b), expect);
  EXPECT_THROW(matmul(a, ComplexMatrix(3, 3)), DimensionMismatch);
}

TEST(ComplexMatrix, KronLeftFactorIsOuter) {
  const ComplexMatrix a{{1, 2}, {3, 4}};
  const ComplexMatrix b{{0, 1}, {1, 0}};
  const ComplexMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 4u);
  // block (i, j) of the result is a(i, j) * b
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(k(2 * i + r, 2 * j + c), a(i, j) * b(r, c));
}

TEST(ComplexMatrix, TraceAndNorm) {
  const ComplexMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(trace(a), Complex(5.0));
  EXPECT_NEAR(hs_norm(a), std::sqrt(30.0), 1e-15);
  EXPECT_NEAR(hs_norm(ComplexMatrix::identity(4)), 2.0, 1e-15);
  EXPECT_THROW(trace(ComplexMatrix(2, 3)), DimensionMismatch);
  // no overflow on huge entries
  ComplexMatrix big{{1e200, 0}, {0, 1e200}};
  EXPECT_NEAR(hs_norm(big) / 1e200, std::sqrt(2.0), 1e-14);
}

TEST(ComplexMatrix, AdjointConjugatesAndTransposes) {
  const ComplexMatrix a{{1, I}, {2.0 + 3.0 * I, 4}};
  const ComplexMatrix ad = a.adjoint();
  EXPECT_EQ(ad(0, 1), 2.0 - 3.0 * I);
  EXPECT_EQ(ad(1, 0), -I);
}

TEST(HermitianEig, DiagonalInput) {
  const double d[] = {3, 1, 2};
  const auto e = hermitian_eig(ComplexMatrix::diagonal(std::span<const double>(d)));
  ASSERT_EQ(e.eigenvalues.size(), 3u);
  EXPECT_NEAR(e.eigenvalues[0], 1, 1e-15);
  EXPECT_NEAR(e.eigenvalues[1], 2, 1e-15);
  EXPECT_NEAR(e.eigenvalues[2], 3, 1e-15);
}

TEST(HermitianEig, SpinX) {
  const auto e = hermitian_eig(spin_half_ops().sx);
  EXPECT_NEAR(e.eigenvalues[0], -0.5, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], 0.5, 1e-14);
}

TEST(HermitianEig, IsingPairSpectrum) {
  // enumerated diagonal, h = J = 1
  const auto e = hermitian_eig(ising_hamiltonian(1.0, 1.0).matrix());
  std::array<double, 4> d = testing::ising_diagonal(1.0, 1.0);
  std::sort(d.begin(), d.end());
  EXPECT_NEAR(d[0], -0.5, 1e-15);
  EXPECT_NEAR(d[3], 1.5, 1e-15);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(e.eigenvalues[k], d[k], 1e-12);
}

TEST(HermitianEig, RejectsNonHermitian) {
  const ComplexMatrix a{{0, 1}, {0, 0}};
  EXPECT_THROW(hermitian_eig(a), NonHermitianInput);
  EXPECT_THROW(hermitian_eig(ComplexMatrix(2, 3)), DimensionMismatch);
  // inside tolerance is accepted
  const ComplexMatrix b{{0, 1.0 + 1e-12}, {1, 0}};
  EXPECT_NO_THROW(hermitian_eig(b));
}

TEST(HermitianEig, ReconstructsRandomMatrices) {
  for (std::size_t n : {1u, 2u, 3u, 4u, 6u, 9u, 12u}) {
    Rng rng(100 + n);
    const ComplexMatrix h = random_hermitian(rng, n);
    const auto e = hermitian_eig(h);
    const ComplexMatrix back = e.apply([](double l) { return Complex(l); });
    EXPECT_LT(max_abs_diff(back, h), 1e-12 * (1 + hs_norm(h))) << "n=" << n;
    for (std::size_t k = 1; k < n; ++k) EXPECT_LE(e.eigenvalues[k - 1], e.eigenvalues[k]);
    const ComplexMatrix vv = e.eigenvectors.adjoint() * e.eigenvectors;
    EXPECT_LT(max_abs_diff(vv, ComplexMatrix::identity(n)), 1e-13);
  }
}

TEST(HermitianEig, DegenerateSpectrum) {
  // eigenvalues 1 and 2 repeated, rotated by a random unitary
  Rng rng(7);
  const ComplexMatrix u = testing::random_unitary(rng, 5);
  const double d[] = {1, 1, 1, 2, 2};
  const ComplexMatrix h = u * ComplexMatrix::diagonal(std::span<const double>(d)) * u.adjoint();
  const auto e = hermitian_eig(h);
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(e.eigenvalues[k], d[k], 1e-12);
}

TEST(Propagator, IdentityAtZero) {
  Rng rng(1);
  const ComplexMatrix h = random_hermitian(rng, 4);
  EXPECT_LT(max_abs_diff(evolution_operator(h, 0.0), ComplexMatrix::identity(4)), 1e-14);
}

TEST(Propagator, MatchesIndependentExponential) {
  for (int k = 0; k < 10; ++k) {
    Rng rng(200 + k);
    const std::size_t n = 2 + k % 5;
    const ComplexMatrix h = random_hermitian(rng, n);
    const double t = testing::uniform(rng, -3.0, 3.0);
    EXPECT_LT(max_abs_diff(evolution_operator(h, t), testing::taylor_expm(h, t)), 1e-11);
  }
}

TEST(Propagator, DiagonalHamiltonianPhases) {
  const auto d = testing::ising_diagonal(0.7, 1.3);
  const double t = 2.1;
  const ComplexMatrix u = Propagator(ising_hamiltonian(0.7, 1.3).matrix()).at(t);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex expect = i == j ? std::exp(-I * d[i] * t) : Complex{};
      EXPECT_LT(std::abs(u(i, j) - expect), 1e-13);
    }
  }
}

TEST(Propagator, UnitaryAndGroupLaw) {
  Rng rng(3);
  const ComplexMatrix h = random_hermitian(rng, 6);
  const Propagator p(h);
  const double t1 = 0.37, t2 = -1.9;
  const ComplexMatrix u1 = p.at(t1);
  EXPECT_LT(max_abs_diff(u1 * u1.adjoint(), ComplexMatrix::identity(6)), 1e-12);
  EXPECT_LT(max_abs_diff(p.at(t1) * p.at(t2), p.at(t1 + t2)), 1e-12);
  EXPECT_LT(max_abs_diff(p.at(-t1), u1.adjoint()), 1e-12);
}

}  // namespace
}  // namespace entprod
