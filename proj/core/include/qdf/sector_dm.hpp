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

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include "qdf/types.hpp"

namespace qdf {

/// Detector island charge sectors: empty, one electron of either spin, doubly
/// occupied.
enum class Sector { a = 0, b_up = 1, b_dn = 2, c = 3 };

/// Flat Liouville-space layouts.
///
/// full:         sectors (a, b_up, b_dn, c)
/// spin_reduced: sectors (a, b, c) with b = b_up + b_dn
///
/// In both, flat = sector * D^2 + z1 * D + z2 with D = 2^N: sector-major, then
/// z1-major, z2-minor.
enum class SectorLayout { full, spin_reduced };

int sector_count(SectorLayout layout);
std::string_view sector_name(SectorLayout layout, int sector);

inline std::size_t flat_index(std::size_t qubit_dim, int sector, std::size_t z1, std::size_t z2) {
  return static_cast<std::size_t>(sector) * qubit_dim * qubit_dim + z1 * qubit_dim + z2;
}

std::size_t liouville_dimension(int n_qubits, SectorLayout layout);

/// Sector-resolved density matrix of qubits plus detector island.
struct SectorDM {
  int n_qubits = 0;
  std::array<CMatrix, 4> rho;

  explicit SectorDM(int n_qubits);

  std::size_t qubit_dim() const { return std::size_t{1} << n_qubits; }
  CMatrix& operator[](Sector s) { return rho[static_cast<std::size_t>(s)]; }
  const CMatrix& operator[](Sector s) const { return rho[static_cast<std::size_t>(s)]; }

  /// Sum of the traces over all four sectors (real part).
  double total_trace() const;
  /// Largest |rho - rho^dagger| entry over all sectors.
  double hermiticity_defect() const;
  /// Real trace of each sector, in Sector order.
  std::array<double, 4> populations() const;
};

/// Throws std::invalid_argument if the spin-reduced layout is requested and
/// b_up != b_dn (beyond 1e-12).
StateVector flatten(const SectorDM& dm, SectorLayout layout);

/// Spin-reduced input is split evenly: b_up = b_dn = b / 2.
SectorDM unflatten(std::span<const Complex> flat, int n_qubits, SectorLayout layout);
SectorDM unflatten(const StateVector& flat, int n_qubits, SectorLayout layout);

/// Trace functional T(v) = sum over sectors and z of v[sector, z, z].
Complex trace_functional(std::span<const Complex> flat, int n_qubits, SectorLayout layout);

}  // namespace qdf
