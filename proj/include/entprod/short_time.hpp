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

#include "entprod/measure.hpp"
#include "entprod/tensor.hpp"

namespace entprod {

/**
 * Second-order data of epsilon(U(t)) for a bipartite Hamiltonian H on
 * M1 (x) M2:
 *
 *   delta1  = M2 Tr_2 H^2 - (Tr_2 H)^2        (operator on factor 1)
 *   delta2  = M1 Tr_1 H^2 - (Tr_1 H)^2        (operator on factor 2)
 *   delta12 = M1 M2 Tr H^2 - (Tr H)^2
 *   mu      = (M1 Tr delta1 + M2 Tr delta2 - delta12) / (M1 M2)
 *
 * so that ||U_counterpart(t)||^2 = M1 M2 - mu t^2 + O(t^4) and
 *
 *   epsilon(t) = mu t^2 / (2 M1 M2 ln base) + O(t^4).
 *
 * Note the 1/(M1 M2): the shorthand "epsilon ~ mu t^2 / 2" that is sometimes
 * quoted for this expansion drops it, and disagrees with the exact curves
 * (for two spins-1/2 it overstates the coefficient by a factor of 4).
 */
struct ShortTimeData {
  MultipartiteOperator delta1;
  MultipartiteOperator delta2;
  double delta12;
  double mu;
  double coeff;  // coefficient of t^2 in epsilon, in the chosen base
  double log_base;
};

/// Throws NonHermitianInput, or DimensionMismatch for a non-bipartite space.
ShortTimeData short_time_data(const MultipartiteOperator &hamiltonian,
                              double log_base = kDefaultLogBase);

/// coeff * t^2.
double epsilon_quadratic(const ShortTimeData &data, double t);

/// Ising pair only: epsilon(t) = c2 t^2 + c4 t^4 + O(t^6) with
/// c2 = J^2 / (8 ln base), c4 = J^2 (J^2 - 12 h^2) / (192 ln base).
struct IsingSeries {
  double c2;
  double c4;
};

IsingSeries ising_series(double h, double J, double log_base = kDefaultLogBase);

}  // namespace entprod
