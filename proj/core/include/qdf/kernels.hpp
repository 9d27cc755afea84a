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
#include <optional>
#include <span>
#include <vector>

#include "qdf/liouvillian.hpp"

namespace qdf {

/// Split real/imaginary storage for a flat Liouville-space vector.
struct SplitVector {
  std::vector<double> re;
  std::vector<double> im;

  SplitVector() = default;
  explicit SplitVector(std::size_t n) : re(n, 0.0), im(n, 0.0) {}

  std::size_t size() const noexcept { return re.size(); }

  static SplitVector from(std::span<const Complex> v);
  static SplitVector from(const StateVector& v);
  StateVector to_state() const;
};

/// Generator regrouped into xor-bands for repeated application.
///
/// Every entry couples row (s, i) to column (s', i ^ m), where i = z1 * D + z2
/// is the in-sector index. Entries sharing (s, s', m) form one band. Bands whose
/// coefficient is the same at every in-sector position are stored as a single
/// scalar (the tunnel-coupling terms); the rest keep a coefficient vector,
/// real-only when every imaginary part is zero (the inter-sector terms).
///
/// Within a band, x[i ^ m] is contiguous over runs whose length is the lowest
/// set bit of m, so the inner loops vectorize. Valid for any input vector.
class BandedGenerator {
 public:
  explicit BandedGenerator(const Generator& g);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t band_count() const noexcept { return bands_.size(); }

  /// y = L x; x and y must be distinct. Deterministic band order.
  void apply(const SplitVector& x, SplitVector& y) const;
  void apply(std::span<const Complex> x, std::span<Complex> y) const;

 private:
  enum class Kind { scalar, real_vector, complex_vector };
  struct Band {
    int row_sector = 0;
    int col_sector = 0;
    std::uint32_t mask = 0;
    Kind kind = Kind::scalar;
    double c_re = 0.0;
    double c_im = 0.0;
    std::vector<double> re;
    std::vector<double> im;
  };

  std::size_t dimension_;
  std::size_t sector_size_;
  std::vector<Band> bands_;
};

/// Fast path for Hermitian sector stacks.
///
/// Recognizes generators of the form
///   L x = Diag (.) x + sum_{s'} C_{s<-s'} (.) x_{s'} - i (H x_s - x_s H)
/// with H = sum_j W_j sigma_x^j shared by all sectors, real symmetric
/// couplings C and Hermitian-paired diagonal Diag. For Hermitian x_s,
/// x_s H = (H x_s)^dagger, so only whole-row flips are needed.
///
/// Output is exactly Hermitian whenever the input is exactly Hermitian.
class HermitianGenerator {
 public:
  /// std::nullopt if g does not have the structure above.
  static std::optional<HermitianGenerator> compile(const Generator& g);

  std::size_t dimension() const noexcept { return dimension_; }

  /// y = L x for sector-wise Hermitian x (not checked); x and y distinct.
  void apply(const SplitVector& x, SplitVector& y) const;

  /// Packed form: per sector only the entries with z1 <= z2, row by row.
  std::size_t packed_dimension() const noexcept { return static_cast<std::size_t>(sectors_) * packed_size_; }
  SplitVector pack(const SplitVector& full) const;
  void unpack(const SplitVector& packed, SplitVector& full) const;
  void apply_packed(const SplitVector& x, SplitVector& y) const;

 private:
  HermitianGenerator() = default;

  struct Coupling {
    int row_sector = 0;
    int col_sector = 0;
    std::vector<double> coeff;
  };

  int n_qubits_ = 0;
  int sectors_ = 0;
  std::size_t qubit_dim_ = 0;
  std::size_t sector_size_ = 0;
  std::size_t dimension_ = 0;
  std::size_t packed_size_ = 0;
  std::vector<std::size_t> packed_row_;  // z1 of each packed entry
  std::vector<std::size_t> packed_col_;
  std::vector<double> omega_;  // qubits with nonzero tunnelling only
  // Per packed entry and active qubit: packed position of the row-flipped and
  // column-flipped neighbours, with -1 where the stored value is conjugated.
  std::vector<std::uint32_t> row_nb_;
  std::vector<std::uint32_t> col_nb_;
  std::vector<double> row_sign_;
  std::vector<double> col_sign_;
  std::vector<double> diag_re_;  // packed
  std::vector<double> diag_im_;
  std::vector<Coupling> couplings_;  // packed coefficients
};

/// Largest |x[s,z1,z2] - conj x[s,z2,z1]|.
double sector_hermiticity_defect(const SplitVector& x, std::size_t qubit_dim);

/// Replaces every sector by (x + x^dagger) / 2.
void make_hermitian(SplitVector& x, std::size_t qubit_dim);

}  // namespace qdf
