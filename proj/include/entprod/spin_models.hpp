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

#include "entprod/complex_matrix.hpp"
#include "entprod/tensor.hpp"

namespace entprod {

// Basis convention for every spin-1/2 factor: index 0 = up (+1/2),
// index 1 = down (-1/2). Two-spin operators put spin 1 outermost.

/** Spin-1/2 operators S = sigma / 2 and ladders S+- = Sx +- i Sy. */
struct SpinHalfOps {
  ComplexMatrix sx;
  ComplexMatrix sy;
  ComplexMatrix sz;
  ComplexMatrix splus;
  ComplexMatrix sminus;
};

SpinHalfOps spin_half_ops();

/** Two-spin model parameters in energy units (hbar = 1); any sign. */
struct SpinModelParams {
  double h = 0.0;   // Zeeman field
  double J = 0.0;   // longitudinal (zz) coupling
  double J1 = 0.0;  // transverse (xy) coupling
};

/// -h (S1z (x) 1 + 1 (x) S2z).
MultipartiteOperator zeeman_term(double h);

/// 2J S1z S2z + J1 (S1+ S2- + S1- S2+)  ==  2J S1z S2z + 2J1 (S1x S2x + S1y S2y).
MultipartiteOperator interaction_term(double J, double J1);

/// Anisotropic Heisenberg pair in a field: zeeman_term(h) + interaction_term(J, J1).
MultipartiteOperator heisenberg_hamiltonian(const SpinModelParams &p);

/// Ising pair: the Heisenberg pair at J1 = 0. Diagonal in the product basis.
MultipartiteOperator ising_hamiltonian(double h, double J);

/**
 * C sum_{m,n} |mm><nn| on an M (x) M space. Maps every product state onto
 * a multiple of the maximally entangled state sum_m |mm>.
 * Throws std::invalid_argument for M < 2 or C == 0.
 */
MultipartiteOperator multimode_operator(std::size_t modes, Complex c);

}  // namespace entprod
