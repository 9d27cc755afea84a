// Copyright 2026 The qdfsim Authors
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

#include "qdf/types.hpp"

namespace qdf {

/// Pure collective dephasing through sum_i sigma_z^i, without coherent
/// driving:
///   rho_{z1 z2}(t) = rho_{z1 z2}(0) exp(-gamma_d t (S_z1 - S_z2)^2 / 2),
/// where S_z is the total spin of configuration z. Throws on a negative rate
/// or time, or a non-square / non-power-of-two matrix.
CMatrix collective_dephasing(const CMatrix& rho, double gamma_d, double t);

/// Total sigma_z eigenvalue of basis configuration `index` on n qubits.
int total_spin(std::uint32_t index, int n_qubits);

}  // namespace qdf
