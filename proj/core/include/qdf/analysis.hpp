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

#include <span>
#include <vector>

#include "qdf/model.hpp"
#include "qdf/sector_dm.hpp"
#include "qdf/types.hpp"

namespace qdf {

/// Qubit density matrix: sum of all detector sectors.
CMatrix reduce_qubits(const SectorDM& dm);
CMatrix reduce_qubits(const StateVector& flat, int n_qubits, SectorLayout layout);

/// Rotating-frame frequencies W'_i = sqrt(W_i^2 + eps_i^2 / 4).
std::vector<double> rotating_frequencies(const ModelParams& p);

/// R(t) = (x)_i [cos(W'_i t) 1 + i sin(W'_i t) sigma_x]; unitary.
CMatrix rotating_frame_unitary(std::span<const double> frequencies, double t);

/// R(t) rho R(t)^dagger.
CMatrix rotating_frame(const CMatrix& rho_q, std::span<const double> frequencies, double t);
CMatrix rotating_frame(const CMatrix& rho_q, const ModelParams& p, double t);

/// Re Tr[rho0 rho]. Throws std::domain_error if either trace differs from 1
/// by more than 1e-6 or the imaginary part of the overlap exceeds 1e-10.
double fidelity(const CMatrix& rho0, const CMatrix& rho);

/// Re Tr[rho^2].
double purity(const CMatrix& rho);

}  // namespace qdf
