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

#include "qdf/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace qdf {

SplitVector SplitVector::from(std::span<const Complex> v) {
  SplitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.re[i] = v[i].real();
    out.im[i] = v[i].imag();
  }
  return out;
}

SplitVector SplitVector::from(const StateVector& v) {
  return from(std::span<const Complex>(v.data(), static_cast<std::size_t>(v.size())));
}

StateVector SplitVector::to_state() const {
  StateVector out(static_cast<Eigen::Index>(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = Complex(re[i], im[i]);
  }
  return out;
}

namespace {

// Length of the contiguous runs of i ^ mask over i.
std::size_t run_length(std::uint32_t mask, std::size_t sector_size) {
  return mask == 0 ? sector_size : static_cast<std::size_t>(mask & (~mask + 1));
}

}  // namespace

BandedGenerator::BandedGenerator(const Generator& g)
    : dimension_(g.dimension()), sector_size_(g.qubit_dim() * g.qubit_dim()) {
  using Key = std::tuple<int, int, std::uint32_t>;
  std::map<Key, std::vector<const GeneratorEntry*>> groups;
  for (const auto& e : g.entries()) {
    const auto rs = static_cast<int>(e.row / sector_size_);
    const auto cs = static_cast<int>(e.col / sector_size_);
    const auto mask = static_cast<std::uint32_t>((e.row % sector_size_) ^ (e.col % sector_size_));
    groups[{rs, cs, mask}].push_back(&e);
  }

  for (const auto& [key, members] : groups) {
    Band band;
    std::tie(band.row_sector, band.col_sector, band.mask) = key;
    band.re.assign(sector_size_, 0.0);
    band.im.assign(sector_size_, 0.0);
    for (const auto* e : members) {
      const std::size_t i = e->row % sector_size_;
      band.re[i] = e->value.real();
      band.im[i] = e->value.imag();
    }
    const bool full = members.size() == sector_size_;
    const bool uniform =
        full && std::all_of(members.begin(), members.end(),
                            [&](const auto* e) { return e->value == members.front()->value; });
    const bool real_only = std::all_of(band.im.begin(), band.im.end(), [](double v) { return v == 0.0; });
    if (uniform) {
      band.kind = Kind::scalar;
      band.c_re = members.front()->value.real();
      band.c_im = members.front()->value.imag();
      band.re.clear();
      band.im.clear();
    } else if (real_only) {
      band.kind = Kind::real_vector;
      band.im.clear();
    } else {
      band.kind = Kind::complex_vector;
    }
    bands_.push_back(std::move(band));
  }
}

void BandedGenerator::apply(const SplitVector& x, SplitVector& y) const {
  if (x.size() != dimension_ || y.size() != dimension_) {
    throw std::invalid_argument("BandedGenerator::apply: dimension mismatch");
  }
  if (&x == &y) throw std::invalid_argument("BandedGenerator::apply: x and y alias");
  std::fill(y.re.begin(), y.re.end(), 0.0);
  std::fill(y.im.begin(), y.im.end(), 0.0);

  const std::size_t n = sector_size_;
  for (const auto& b : bands_) {
    const double* __restrict xr = x.re.data() + static_cast<std::size_t>(b.col_sector) * n;
    const double* __restrict xi = x.im.data() + static_cast<std::size_t>(b.col_sector) * n;
    double* __restrict yr = y.re.data() + static_cast<std::size_t>(b.row_sector) * n;
    double* __restrict yi = y.im.data() + static_cast<std::size_t>(b.row_sector) * n;
    const std::size_t run = run_length(b.mask, n);

    switch (b.kind) {
      case Kind::scalar: {
        const double cr = b.c_re, ci = b.c_im;
        for (std::size_t base = 0; base < n; base += run) {
          const std::size_t src = base ^ b.mask;
          for (std::size_t k = 0; k < run; ++k) {
            const double ar = xr[src + k], ai = xi[src + k];
            yr[base + k] += cr * ar - ci * ai;
            yi[base + k] += cr * ai + ci * ar;
          }
        }
        break;
      }
      case Kind::real_vector: {
        const double* __restrict cr = b.re.data();
        for (std::size_t base = 0; base < n; base += run) {
          const std::size_t src = base ^ b.mask;
          for (std::size_t k = 0; k < run; ++k) {
            yr[base + k] += cr[base + k] * xr[src + k];
            yi[base + k] += cr[base + k] * xi[src + k];
          }
        }
        break;
      }
      case Kind::complex_vector: {
        const double* __restrict cr = b.re.data();
        const double* __restrict ci = b.im.data();
        for (std::size_t base = 0; base < n; base += run) {
          const std::size_t src = base ^ b.mask;
          for (std::size_t k = 0; k < run; ++k) {
            const double ar = xr[src + k], ai = xi[src + k];
            const double c_r = cr[base + k], c_i = ci[base + k];
            yr[base + k] += c_r * ar - c_i * ai;
            yi[base + k] += c_r * ai + c_i * ar;
          }
        }
        break;
      }
    }
  }
}

void BandedGenerator::apply(std::span<const Complex> x, std::span<Complex> y) const {
  if (x.size() != dimension_ || y.size() != dimension_) {
    throw std::invalid_argument("BandedGenerator::apply: dimension mismatch");
  }
  const SplitVector xs = SplitVector::from(x);
  SplitVector ys(dimension_);
  apply(xs, ys);
  for (std::size_t i = 0; i < dimension_; ++i) y[i] = Complex(ys.re[i], ys.im[i]);
}

}  // namespace qdf

namespace qdf {

namespace {

constexpr double kPairingTolerance = 1e-13;

}  // namespace

std::optional<HermitianGenerator> HermitianGenerator::compile(const Generator& g) {
  HermitianGenerator h;
  h.n_qubits_ = g.n_qubits();
  h.sectors_ = sector_count(g.layout());
  h.qubit_dim_ = g.qubit_dim();
  h.sector_size_ = h.qubit_dim_ * h.qubit_dim_;
  h.dimension_ = g.dimension();
  std::vector<double> diag_re(h.dimension_, 0.0);
  std::vector<double> diag_im(h.dimension_, 0.0);

  const std::size_t d = h.qubit_dim_;
  const std::size_t s2 = h.sector_size_;
  const int n = h.n_qubits_;

  std::vector<std::optional<double>> omega(static_cast<std::size_t>(n));
  std::vector<std::size_t> row_flips(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> col_flips(static_cast<std::size_t>(n), 0);
  std::map<std::pair<int, int>, std::vector<double>> couplings;

  auto record_omega = [&](int q, double w) {
    auto& slot = omega[static_cast<std::size_t>(q)];
    if (!slot) slot = w;
    return *slot == w;
  };

  for (const auto& e : g.entries()) {
    const auto rs = static_cast<int>(e.row / s2);
    const auto cs = static_cast<int>(e.col / s2);
    const std::size_t i = e.row % s2;
    const std::size_t mask = i ^ (e.col % s2);
    if (rs == cs && mask == 0) {
      diag_re[e.row] = e.value.real();
      diag_im[e.row] = e.value.imag();
      continue;
    }
    if (rs == cs) {
      if (e.value.real() != 0.0 || !std::has_single_bit(mask)) return std::nullopt;
      const int bit = std::countr_zero(mask);
      if (bit >= n) {
        // z1 flip: coefficient -i W
        if (!record_omega(bit - n, -e.value.imag())) return std::nullopt;
        ++row_flips[static_cast<std::size_t>(bit - n)];
      } else {
        // z2 flip: coefficient +i W
        if (!record_omega(bit, e.value.imag())) return std::nullopt;
        ++col_flips[static_cast<std::size_t>(bit)];
      }
      continue;
    }
    if (mask != 0 || e.value.imag() != 0.0) return std::nullopt;
    auto& c = couplings[{rs, cs}];
    if (c.empty()) c.assign(s2, 0.0);
    c[i] = e.value.real();
  }

  const std::size_t full = static_cast<std::size_t>(h.sectors_) * s2;
  std::vector<int> active;
  for (int q = 0; q < n; ++q) {
    const auto qi = static_cast<std::size_t>(q);
    if (!omega[qi]) continue;
    if (row_flips[qi] != full || col_flips[qi] != full) return std::nullopt;
    if (*omega[qi] == 0.0) continue;
    active.push_back(q);
    h.omega_.push_back(*omega[qi]);
  }

  // The diagonal must pair up as (x, conj x) and the couplings must be
  // symmetric for the map to send Hermitian stacks to Hermitian stacks.
  for (int s = 0; s < h.sectors_; ++s) {
    for (std::size_t z1 = 0; z1 < d; ++z1) {
      for (std::size_t z2 = z1 + 1; z2 < d; ++z2) {
        const std::size_t a = flat_index(d, s, z1, z2);
        const std::size_t b = flat_index(d, s, z2, z1);
        if (std::abs(diag_re[a] - diag_re[b]) > kPairingTolerance ||
            std::abs(diag_im[a] + diag_im[b]) > kPairingTolerance) {
          return std::nullopt;
        }
      }
    }
  }
  for (const auto& [key, c] : couplings) {
    for (std::size_t z1 = 0; z1 < d; ++z1) {
      for (std::size_t z2 = z1 + 1; z2 < d; ++z2) {
        if (std::abs(c[z1 * d + z2] - c[z2 * d + z1]) > kPairingTolerance) return std::nullopt;
      }
    }
  }

  h.packed_size_ = d * (d + 1) / 2;
  std::vector<std::size_t> position(s2, 0);
  for (std::size_t z1 = 0; z1 < d; ++z1) {
    for (std::size_t z2 = z1; z2 < d; ++z2) {
      position[z1 * d + z2] = h.packed_row_.size();
      h.packed_row_.push_back(z1);
      h.packed_col_.push_back(z2);
    }
  }
  auto locate = [&](std::size_t z1, std::size_t z2, std::uint32_t& index, double& sign) {
    index = static_cast<std::uint32_t>(z1 <= z2 ? position[z1 * d + z2] : position[z2 * d + z1]);
    sign = z1 <= z2 ? 1.0 : -1.0;
  };
  const std::size_t m = active.size();
  h.row_nb_.resize(h.packed_size_ * m);
  h.col_nb_.resize(h.packed_size_ * m);
  h.row_sign_.resize(h.packed_size_ * m);
  h.col_sign_.resize(h.packed_size_ * m);
  for (std::size_t p = 0; p < h.packed_size_; ++p) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t bit = std::size_t{1} << active[j];
      locate(h.packed_row_[p] ^ bit, h.packed_col_[p], h.row_nb_[p * m + j], h.row_sign_[p * m + j]);
      locate(h.packed_row_[p], h.packed_col_[p] ^ bit, h.col_nb_[p * m + j], h.col_sign_[p * m + j]);
    }
  }

  h.diag_re_.resize(h.packed_dimension());
  h.diag_im_.resize(h.packed_dimension());
  for (int s = 0; s < h.sectors_; ++s) {
    for (std::size_t p = 0; p < h.packed_size_; ++p) {
      const std::size_t src = flat_index(d, s, h.packed_row_[p], h.packed_col_[p]);
      h.diag_re_[static_cast<std::size_t>(s) * h.packed_size_ + p] = diag_re[src];
      h.diag_im_[static_cast<std::size_t>(s) * h.packed_size_ + p] = diag_im[src];
    }
  }
  for (const auto& [key, c] : couplings) {
    std::vector<double> packed(h.packed_size_);
    for (std::size_t p = 0; p < h.packed_size_; ++p) packed[p] = c[h.packed_row_[p] * d + h.packed_col_[p]];
    h.couplings_.push_back({key.first, key.second, std::move(packed)});
  }
  return h;
}

SplitVector HermitianGenerator::pack(const SplitVector& full) const {
  if (full.size() != dimension_) throw std::invalid_argument("HermitianGenerator::pack: dimension mismatch");
  SplitVector out(packed_dimension());
  for (int s = 0; s < sectors_; ++s) {
    for (std::size_t p = 0; p < packed_size_; ++p) {
      const std::size_t src = flat_index(qubit_dim_, s, packed_row_[p], packed_col_[p]);
      out.re[static_cast<std::size_t>(s) * packed_size_ + p] = full.re[src];
      out.im[static_cast<std::size_t>(s) * packed_size_ + p] = full.im[src];
    }
  }
  return out;
}

void HermitianGenerator::unpack(const SplitVector& packed, SplitVector& full) const {
  if (packed.size() != packed_dimension()) {
    throw std::invalid_argument("HermitianGenerator::unpack: dimension mismatch");
  }
  full.re.resize(dimension_);
  full.im.resize(dimension_);
  for (int s = 0; s < sectors_; ++s) {
    for (std::size_t p = 0; p < packed_size_; ++p) {
      const std::size_t z1 = packed_row_[p];
      const std::size_t z2 = packed_col_[p];
      const double re = packed.re[static_cast<std::size_t>(s) * packed_size_ + p];
      const double im = packed.im[static_cast<std::size_t>(s) * packed_size_ + p];
      const std::size_t a = flat_index(qubit_dim_, s, z1, z2);
      const std::size_t b = flat_index(qubit_dim_, s, z2, z1);
      full.re[a] = re;
      full.im[a] = z1 == z2 ? 0.0 : im;
      full.re[b] = re;
      full.im[b] = z1 == z2 ? 0.0 : -im;
    }
  }
}

namespace {

// Commutator sweep for one sector; M > 0 fixes the active-qubit count at
// compile time, M == 0 reads it from m.
template <std::size_t M>
void commutator_sector(std::size_t ps, std::size_t m, const double* __restrict w,
                       const std::uint32_t* __restrict rn, const std::uint32_t* __restrict cn,
                       const double* __restrict rsg, const double* __restrict csg,
                       const double* __restrict dr, const double* __restrict di,
                       const double* __restrict xr, const double* __restrict xi, double* __restrict yr,
                       double* __restrict yi) {
  const std::size_t count = M > 0 ? M : m;
  for (std::size_t p = 0; p < ps; ++p) {
    // [H, x] at (z1, z2) = sum_q W_q (x[z1 ^ q, z2] - x[z1, z2 ^ q]).
    double cr = 0.0, ci = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      const std::size_t k = p * count + j;
      const std::uint32_t r = rn[k], c = cn[k];
      cr += w[j] * (xr[r] - xr[c]);
      ci += w[j] * (rsg[k] * xi[r] - csg[k] * xi[c]);
    }
    yr[p] = dr[p] * xr[p] - di[p] * xi[p] + ci;
    yi[p] = dr[p] * xi[p] + di[p] * xr[p] - cr;
  }
}

}  // namespace

void HermitianGenerator::apply_packed(const SplitVector& x, SplitVector& y) const {
  if (x.size() != packed_dimension() || y.size() != packed_dimension()) {
    throw std::invalid_argument("HermitianGenerator::apply_packed: dimension mismatch");
  }
  if (&x == &y) throw std::invalid_argument("HermitianGenerator::apply_packed: x and y alias");
  const std::size_t ps = packed_size_;
  const std::size_t m = omega_.size();
  auto sweep = commutator_sector<0>;
  switch (m) {
    case 2: sweep = commutator_sector<2>; break;
    case 3: sweep = commutator_sector<3>; break;
    case 4: sweep = commutator_sector<4>; break;
    case 5: sweep = commutator_sector<5>; break;
    case 6: sweep = commutator_sector<6>; break;
    default: break;
  }

  for (int s = 0; s < sectors_; ++s) {
    const std::size_t off = static_cast<std::size_t>(s) * ps;
    sweep(ps, m, omega_.data(), row_nb_.data(), col_nb_.data(), row_sign_.data(), col_sign_.data(),
          diag_re_.data() + off, diag_im_.data() + off, x.re.data() + off, x.im.data() + off, y.re.data() + off,
          y.im.data() + off);
  }

  for (const auto& c : couplings_) {
    const double* __restrict cf = c.coeff.data();
    const double* __restrict xr = x.re.data() + static_cast<std::size_t>(c.col_sector) * ps;
    const double* __restrict xi = x.im.data() + static_cast<std::size_t>(c.col_sector) * ps;
    double* __restrict yr = y.re.data() + static_cast<std::size_t>(c.row_sector) * ps;
    double* __restrict yi = y.im.data() + static_cast<std::size_t>(c.row_sector) * ps;
    for (std::size_t k = 0; k < ps; ++k) {
      yr[k] += cf[k] * xr[k];
      yi[k] += cf[k] * xi[k];
    }
  }
}

void HermitianGenerator::apply(const SplitVector& x, SplitVector& y) const {
  if (x.size() != dimension_ || y.size() != dimension_) {
    throw std::invalid_argument("HermitianGenerator::apply: dimension mismatch");
  }
  if (&x == &y) throw std::invalid_argument("HermitianGenerator::apply: x and y alias");
  SplitVector out(packed_dimension());
  apply_packed(pack(x), out);
  unpack(out, y);
}

double sector_hermiticity_defect(const SplitVector& x, std::size_t qubit_dim) {
  const std::size_t s2 = qubit_dim * qubit_dim;
  double worst = 0.0;
  for (std::size_t off = 0; off + s2 <= x.size(); off += s2) {
    for (std::size_t z1 = 0; z1 < qubit_dim; ++z1) {
      for (std::size_t z2 = z1; z2 < qubit_dim; ++z2) {
        const std::size_t a = off + z1 * qubit_dim + z2;
        const std::size_t b = off + z2 * qubit_dim + z1;
        worst = std::max(worst, std::hypot(x.re[a] - x.re[b], x.im[a] + x.im[b]));
      }
    }
  }
  return worst;
}

void make_hermitian(SplitVector& x, std::size_t qubit_dim) {
  const std::size_t s2 = qubit_dim * qubit_dim;
  for (std::size_t off = 0; off + s2 <= x.size(); off += s2) {
    for (std::size_t z1 = 0; z1 < qubit_dim; ++z1) {
      const std::size_t diag = off + z1 * qubit_dim + z1;
      x.im[diag] = 0.0;
      for (std::size_t z2 = z1 + 1; z2 < qubit_dim; ++z2) {
        const std::size_t a = off + z1 * qubit_dim + z2;
        const std::size_t b = off + z2 * qubit_dim + z1;
        const double re = 0.5 * (x.re[a] + x.re[b]);
        const double im = 0.5 * (x.im[a] - x.im[b]);
        x.re[a] = x.re[b] = re;
        x.im[a] = im;
        x.im[b] = -im;
      }
    }
  }
}

}  // namespace qdf
