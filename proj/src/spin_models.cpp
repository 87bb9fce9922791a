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

#include "entprod/spin_models.hpp"

#include <stdexcept>

namespace entprod {

namespace {
constexpr Complex kI{0.0, 1.0};
const TensorSpace kPair{2, 2};
}  // namespace

SpinHalfOps spin_half_ops() {
  return SpinHalfOps{
      ComplexMatrix{{0.0, 0.5}, {0.5, 0.0}},
      ComplexMatrix{{0.0, -0.5 * kI}, {0.5 * kI, 0.0}},
      ComplexMatrix{{0.5, 0.0}, {0.0, -0.5}},
      ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}},
      ComplexMatrix{{0.0, 0.0}, {1.0, 0.0}},
  };
}

MultipartiteOperator zeeman_term(double h) {
  const SpinHalfOps s = spin_half_ops();
  ComplexMatrix m = embed_local(s.sz, kPair, 0).matrix() + embed_local(s.sz, kPair, 1).matrix();
  m *= -h;
  return {kPair, std::move(m)};
}

MultipartiteOperator interaction_term(double J, double J1) {
  // Built from the ladder form so every entry is an exact real combination.
  const SpinHalfOps s = spin_half_ops();
  ComplexMatrix m = kron(s.sz, s.sz);
  m *= 2.0 * J;
  ComplexMatrix flip = kron(s.splus, s.sminus) + kron(s.sminus, s.splus);
  flip *= J1;
  return {kPair, m + flip};
}

MultipartiteOperator heisenberg_hamiltonian(const SpinModelParams &p) {
  return {kPair, zeeman_term(p.h).matrix() + interaction_term(p.J, p.J1).matrix()};
}

MultipartiteOperator ising_hamiltonian(double h, double J) {
  return heisenberg_hamiltonian({h, J, 0.0});
}

MultipartiteOperator multimode_operator(std::size_t modes, Complex c) {
  if (modes < 2) throw std::invalid_argument("multimode_operator: need at least 2 modes");
  if (c == Complex{}) throw std::invalid_argument("multimode_operator: C must be nonzero");
  ComplexMatrix a(modes * modes, modes * modes);
  for (std::size_t m = 0; m < modes; ++m) {
    for (std::size_t n = 0; n < modes; ++n) a(m * modes + m, n * modes + n) = c;
  }
  return {TensorSpace{modes, modes}, std::move(a)};
}

}  // namespace entprod
