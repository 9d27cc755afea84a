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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qdf/model.hpp"
#include "qdf/sector_dm.hpp"
#include "qdf/types.hpp"

namespace qdf {

struct GeneratorEntry {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  Complex value;

  friend bool operator==(const GeneratorEntry&, const GeneratorEntry&) = default;
};

/// Time-independent sparse generator L with d(vec rho)/dt = L vec rho.
///
/// Entries are kept sorted by (row, col) with duplicates summed, and stored
/// in CSR form for apply(). Immutable after construction.
class Generator {
 public:
  Generator(int n_qubits, SectorLayout layout, std::vector<GeneratorEntry> entries);

  int n_qubits() const noexcept { return n_qubits_; }
  SectorLayout layout() const noexcept { return layout_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t qubit_dim() const noexcept { return std::size_t{1} << n_qubits_; }

  std::span<const GeneratorEntry> entries() const noexcept { return entries_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }

  /// y = L x. Row-wise summation in column order; deterministic.
  void apply(std::span<const Complex> x, std::span<Complex> y) const;
  StateVector apply(const StateVector& x) const;

  Eigen::MatrixXcd to_dense() const;

 private:
  int n_qubits_;
  SectorLayout layout_;
  std::size_t dimension_;
  std::vector<GeneratorEntry> entries_;
  std::vector<std::uint32_t> row_ptr_;
  std::vector<std::uint32_t> col_;
  std::vector<Complex> val_;
};

/// Full four-sector generator of the coupled qubit/island density-matrix
/// equations. With D = 2^N, the state has 4 D^2 complex components.
///
///   a:   (i[J_z2 - J_z1] - [GL_z1 + GL_z2]) a  - i sum_j W_j (a[g_j z1, z2] - a[z1, g_j z2])
///        + sqrt(GR_z1 GR_z2) (b_up + b_dn)
///   b_s: (i[J_z2 - J_z1] - [GL'_z1 + GL'_z2 + GR_z1 + GR_z2] / 2) b_s - i sum_j W_j (...)
///        + sqrt(GL_z1 GL_z2) a + sqrt(GR'_z1 GR'_z2) c
///   c:   (i[J_z2 - J_z1] - [GR'_z1 + GR'_z2]) c - i sum_j W_j (...)
///        + sqrt(GL'_z1 GL'_z2) (b_up + b_dn)
///
/// where W_j is the tunnel coupling of qubit j, g_j flips qubit j, and J_z is
/// config_energy(z).
Generator assemble(const ModelParams& p);

/// Three-sector generator on (a, b = b_up + b_dn, c): P L E with
/// E(a, b, c) = (a, b/2, b/2, c) and P the matching sum. Exact on the
/// spin-symmetric subspace, which L leaves invariant; throws
/// std::invalid_argument if L does not commute with the b_up <-> b_dn swap.
Generator reduce_spin_symmetric(const Generator& g);

/// Largest |sum_{trace rows} L(row, col)| over columns; zero iff the
/// generator preserves the total trace.
double trace_preservation_defect(const Generator& g);

/// Largest |L(s,z1,z2 <- s',w1,w2) - conj L(s,z2,z1 <- s',w2,w1)|.
double conjugation_symmetry_defect(const Generator& g);

/// Applies L to every element of a Hermitian basis of sector stacks and
/// returns the largest anti-Hermitian residue in any output sector.
double hermiticity_preservation_defect(const Generator& g);

/// Debug dump: one line per entry, "sector,z1,z2 <- sector,w1,w2 : re,im",
/// with configuration labels for z and 17 significant digits, sorted
/// lexicographically.
void write_dump(std::ostream& os, const Generator& g);

}  // namespace qdf
