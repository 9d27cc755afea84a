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

#include "qdf/liouvillian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qdf/rates.hpp"

namespace qdf {

namespace {

constexpr Complex kI{0.0, 1.0};

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

struct FlatCoord {
  int sector;
  std::uint32_t z1;
  std::uint32_t z2;
};

FlatCoord decode(std::uint32_t flat, std::size_t d) {
  const auto d2 = static_cast<std::uint32_t>(d * d);
  const auto rem = flat % d2;
  return {static_cast<int>(flat / d2), rem / static_cast<std::uint32_t>(d),
          rem % static_cast<std::uint32_t>(d)};
}

}  // namespace

Generator::Generator(int n_qubits, SectorLayout layout, std::vector<GeneratorEntry> entries)
    : n_qubits_(n_qubits),
      layout_(layout),
      dimension_(liouville_dimension(n_qubits, layout)),
      entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const auto& x, const auto& y) {
    return std::pair(x.row, x.col) < std::pair(y.row, y.col);
  });
  // sum duplicates, drop exact zeros
  std::vector<GeneratorEntry> merged;
  merged.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (e.row >= dimension_ || e.col >= dimension_) {
      throw std::out_of_range("generator entry outside the Liouville space");
    }
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.value == Complex{0.0, 0.0}; });
  entries_ = std::move(merged);

  row_ptr_.assign(dimension_ + 1, 0);
  col_.reserve(entries_.size());
  val_.reserve(entries_.size());
  for (const auto& e : entries_) {
    ++row_ptr_[e.row + 1];
    col_.push_back(e.col);
    val_.push_back(e.value);
  }
  for (std::size_t r = 0; r < dimension_; ++r) row_ptr_[r + 1] += row_ptr_[r];
}

void Generator::apply(std::span<const Complex> x, std::span<Complex> y) const {
  if (x.size() != dimension_ || y.size() != dimension_) {
    throw std::invalid_argument("Generator::apply: dimension mismatch (" +
                                std::to_string(x.size()) + " vs " + std::to_string(dimension_) +
                                ")");
  }
  const Complex* xs = x.data();
  for (std::size_t r = 0; r < dimension_; ++r) {
    Complex acc{0.0, 0.0};
    for (std::uint32_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) acc += val_[k] * xs[col_[k]];
    y[r] = acc;
  }
}

StateVector Generator::apply(const StateVector& x) const {
  StateVector y(x.size());
  apply(std::span<const Complex>(x.data(), static_cast<std::size_t>(x.size())),
        std::span<Complex>(y.data(), static_cast<std::size_t>(y.size())));
  return y;
}

Eigen::MatrixXcd Generator::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dimension_);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& e : entries_) m(e.row, e.col) += e.value;
  return m;
}

Generator assemble(const ModelParams& p) {
  p.validate();
  const RateTable rates(p);
  const std::size_t d = std::size_t{1} << p.n_qubits;
  const int n = p.n_qubits;

  std::vector<double> energy(d);
  for (std::uint32_t z = 0; z < d; ++z) energy[z] = config_energy(QubitConfig(n, z), p);

  std::vector<GeneratorEntry> entries;
  entries.reserve(4 * d * d * (3 + 2 * static_cast<std::size_t>(n)));
  auto flat = [d](Sector s, std::uint32_t z1, std::uint32_t z2) {
    return static_cast<std::uint32_t>(flat_index(d, static_cast<int>(s), z1, z2));
  };

  constexpr Sector kSectors[] = {Sector::a, Sector::b_up, Sector::b_dn, Sector::c};
  for (Sector s : kSectors) {
    for (std::uint32_t z1 = 0; z1 < d; ++z1) {
      for (std::uint32_t z2 = 0; z2 < d; ++z2) {
        const auto& r1 = rates[z1];
        const auto& r2 = rates[z2];
        const std::uint32_t row = flat(s, z1, z2);

        double decay = 0.0;
        switch (s) {
          case Sector::a: decay = r1.gamma_L + r2.gamma_L; break;
          case Sector::b_up:
          case Sector::b_dn:
            decay = 0.5 * (r1.gamma_L_primed + r2.gamma_L_primed + r1.gamma_R + r2.gamma_R);
            break;
          case Sector::c: decay = r1.gamma_R_primed + r2.gamma_R_primed; break;
        }
        entries.push_back({row, row, kI * (energy[z2] - energy[z1]) - decay});

        for (int j = 0; j < n; ++j) {
          const double w = p.omega[static_cast<std::size_t>(j)];
          if (w == 0.0) continue;
          const std::uint32_t bit = std::uint32_t{1} << j;
          entries.push_back({row, flat(s, z1 ^ bit, z2), -kI * w});
          entries.push_back({row, flat(s, z1, z2 ^ bit), kI * w});
        }

        switch (s) {
          case Sector::a: {
            const double in = std::sqrt(r1.gamma_R * r2.gamma_R);
            entries.push_back({row, flat(Sector::b_up, z1, z2), in});
            entries.push_back({row, flat(Sector::b_dn, z1, z2), in});
            break;
          }
          case Sector::b_up:
          case Sector::b_dn:
            entries.push_back({row, flat(Sector::a, z1, z2), std::sqrt(r1.gamma_L * r2.gamma_L)});
            entries.push_back(
                {row, flat(Sector::c, z1, z2), std::sqrt(r1.gamma_R_primed * r2.gamma_R_primed)});
            break;
          case Sector::c: {
            const double in = std::sqrt(r1.gamma_L_primed * r2.gamma_L_primed);
            entries.push_back({row, flat(Sector::b_up, z1, z2), in});
            entries.push_back({row, flat(Sector::b_dn, z1, z2), in});
            break;
          }
        }
      }
    }
  }
  return Generator(n, SectorLayout::full, std::move(entries));
}

Generator reduce_spin_symmetric(const Generator& g) {
  if (g.layout() != SectorLayout::full) {
    throw std::invalid_argument("reduce_spin_symmetric expects a full four-sector generator");
  }
  const std::size_t d = g.qubit_dim();
  const auto d2 = static_cast<std::uint32_t>(d * d);
  constexpr int kUp = static_cast<int>(Sector::b_up);
  constexpr int kDn = static_cast<int>(Sector::b_dn);

  // Precondition: L commutes with the b_up <-> b_dn swap.
  auto swap_sector = [&](std::uint32_t flat) {
    const auto s = static_cast<int>(flat / d2);
    const std::uint32_t rem = flat % d2;
    const int t = s == kUp ? kDn : (s == kDn ? kUp : s);
    return static_cast<std::uint32_t>(t) * d2 + rem;
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> lookup;
  for (const auto& e : g.entries()) lookup.emplace(std::pair(e.row, e.col), e.value);
  for (const auto& e : g.entries()) {
    auto it = lookup.find({swap_sector(e.row), swap_sector(e.col)});
    const Complex other = it == lookup.end() ? Complex{} : it->second;
    if (std::abs(other - e.value) > 1e-14 * (1.0 + std::abs(e.value))) {
      throw std::invalid_argument("generator is not symmetric under island spin exchange");
    }
  }

  // Full sector -> reduced sector: a->0, b_up/b_dn->1, c->2.
  auto reduced_sector = [](int s) { return s == 0 ? 0 : (s == 3 ? 2 : 1); };
  std::vector<GeneratorEntry> out;
  out.reserve(g.nonzeros());
  for (const auto& e : g.entries()) {
    const int rs = static_cast<int>(e.row / d2);
    const int cs = static_cast<int>(e.col / d2);
    const double embed = (cs == kUp || cs == kDn) ? 0.5 : 1.0;
    out.push_back({static_cast<std::uint32_t>(reduced_sector(rs)) * d2 + e.row % d2,
                   static_cast<std::uint32_t>(reduced_sector(cs)) * d2 + e.col % d2,
                   embed * e.value});
  }
  // P sums the two b rows, so every b-row contribution appears twice; the
  // constructor's duplicate merge performs that sum.
  return Generator(g.n_qubits(), SectorLayout::spin_reduced, std::move(out));
}

double trace_preservation_defect(const Generator& g) {
  const std::size_t d = g.qubit_dim();
  std::vector<Complex> column_sum(g.dimension(), Complex{});
  for (const auto& e : g.entries()) {
    const auto c = decode(e.row, d);
    if (c.z1 == c.z2) column_sum[e.col] += e.value;
  }
  double worst = 0.0;
  for (const auto& v : column_sum) worst = std::max(worst, std::abs(v));
  return worst;
}

double conjugation_symmetry_defect(const Generator& g) {
  const std::size_t d = g.qubit_dim();
  const auto d2 = static_cast<std::uint32_t>(d * d);
  const auto du = static_cast<std::uint32_t>(d);
  auto transpose = [&](std::uint32_t flat) {
    const auto c = decode(flat, d);
    return static_cast<std::uint32_t>(c.sector) * d2 + c.z2 * du + c.z1;
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> lookup;
  for (const auto& e : g.entries()) lookup.emplace(std::pair(e.row, e.col), e.value);
  double worst = 0.0;
  for (const auto& e : g.entries()) {
    auto it = lookup.find({transpose(e.row), transpose(e.col)});
    const Complex mirror = it == lookup.end() ? Complex{} : it->second;
    worst = std::max(worst, std::abs(e.value - std::conj(mirror)));
  }
  return worst;
}

double hermiticity_preservation_defect(const Generator& g) {
  const std::size_t d = g.qubit_dim();
  const std::size_t n = g.dimension();
  const int sectors = sector_count(g.layout());
  std::vector<Complex> x(n, Complex{}), y(n);
  double worst = 0.0;

  auto check_output = [&] {
    for (int s = 0; s < sectors; ++s) {
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
          const Complex lhs = y[flat_index(d, s, a, b)];
          const Complex rhs = std::conj(y[flat_index(d, s, b, a)]);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
  };

  for (int s = 0; s < sectors; ++s) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a; b < d; ++b) {
        const std::size_t ab = flat_index(d, s, a, b);
        const std::size_t ba = flat_index(d, s, b, a);
        // real symmetric element
        x[ab] = 1.0;
        x[ba] = 1.0;
        g.apply(x, y);
        check_output();
        x[ab] = x[ba] = Complex{};
        if (a == b) continue;
        // imaginary antisymmetric element
        x[ab] = kI;
        x[ba] = -kI;
        g.apply(x, y);
        check_output();
        x[ab] = x[ba] = Complex{};
      }
    }
  }
  return worst;
}

void write_dump(std::ostream& os, const Generator& g) {
  const std::size_t d = g.qubit_dim();
  const int n = g.n_qubits();
  auto coord = [&](std::uint32_t flat) {
    const auto c = decode(flat, d);
    return std::string(sector_name(g.layout(), c.sector)) + "," + QubitConfig(n, c.z1).label() +
           "," + QubitConfig(n, c.z2).label();
  };
  std::vector<std::string> lines;
  lines.reserve(g.nonzeros());
  for (const auto& e : g.entries()) {
    lines.push_back(coord(e.row) + " <- " + coord(e.col) + " : " + format_double(e.value.real()) +
                    "," + format_double(e.value.imag()));
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& line : lines) os << line << '\n';
}

}  // namespace qdf
