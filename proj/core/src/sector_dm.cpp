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

#include "qdf/sector_dm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qdf {

int sector_count(SectorLayout layout) { return layout == SectorLayout::full ? 4 : 3; }

std::string_view sector_name(SectorLayout layout, int sector) {
  static constexpr std::array<std::string_view, 4> kFull{"a", "b_up", "b_dn", "c"};
  static constexpr std::array<std::string_view, 3> kReduced{"a", "b", "c"};
  if (sector < 0 || sector >= sector_count(layout)) {
    throw std::out_of_range("sector index out of range");
  }
  return layout == SectorLayout::full ? kFull[static_cast<std::size_t>(sector)]
                                      : kReduced[static_cast<std::size_t>(sector)];
}

std::size_t liouville_dimension(int n_qubits, SectorLayout layout) {
  const std::size_t d = std::size_t{1} << n_qubits;
  return static_cast<std::size_t>(sector_count(layout)) * d * d;
}

SectorDM::SectorDM(int n) : n_qubits(n) {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
  const auto d = static_cast<Eigen::Index>(qubit_dim());
  for (auto& m : rho) m = CMatrix::Zero(d, d);
}

double SectorDM::total_trace() const {
  double t = 0.0;
  for (const auto& m : rho) t += m.trace().real();
  return t;
}

double SectorDM::hermiticity_defect() const {
  double worst = 0.0;
  for (const auto& m : rho) {
    worst = std::max(worst, (m - m.adjoint()).cwiseAbs().maxCoeff());
  }
  return worst;
}

std::array<double, 4> SectorDM::populations() const {
  std::array<double, 4> out{};
  for (std::size_t s = 0; s < 4; ++s) out[s] = rho[s].trace().real();
  return out;
}

StateVector flatten(const SectorDM& dm, SectorLayout layout) {
  const std::size_t d2 = dm.qubit_dim() * dm.qubit_dim();
  StateVector out(static_cast<Eigen::Index>(liouville_dimension(dm.n_qubits, layout)));
  auto put = [&](int sector, const CMatrix& m) {
    std::copy_n(m.data(), d2, out.data() + static_cast<std::size_t>(sector) * d2);
  };
  if (layout == SectorLayout::full) {
    for (int s = 0; s < 4; ++s) put(s, dm.rho[static_cast<std::size_t>(s)]);
  } else {
    const auto& up = dm[Sector::b_up];
    const auto& dn = dm[Sector::b_dn];
    if (d2 > 0 && (up - dn).cwiseAbs().maxCoeff() > 1e-12) {
      throw std::invalid_argument("spin-reduced layout requires b_up == b_dn");
    }
    put(0, dm[Sector::a]);
    put(1, up + dn);
    put(2, dm[Sector::c]);
  }
  return out;
}

SectorDM unflatten(std::span<const Complex> flat, int n_qubits, SectorLayout layout) {
  if (flat.size() != liouville_dimension(n_qubits, layout)) {
    throw std::invalid_argument("flat state has dimension " + std::to_string(flat.size()) +
                                ", expected " +
                                std::to_string(liouville_dimension(n_qubits, layout)));
  }
  SectorDM dm(n_qubits);
  const std::size_t d2 = dm.qubit_dim() * dm.qubit_dim();
  auto get = [&](int sector, CMatrix& m) {
    std::copy_n(flat.data() + static_cast<std::size_t>(sector) * d2, d2, m.data());
  };
  if (layout == SectorLayout::full) {
    for (int s = 0; s < 4; ++s) get(s, dm.rho[static_cast<std::size_t>(s)]);
  } else {
    get(0, dm[Sector::a]);
    get(1, dm[Sector::b_up]);
    dm[Sector::b_up] *= 0.5;
    dm[Sector::b_dn] = dm[Sector::b_up];
    get(2, dm[Sector::c]);
  }
  return dm;
}

SectorDM unflatten(const StateVector& flat, int n_qubits, SectorLayout layout) {
  return unflatten(std::span<const Complex>(flat.data(), static_cast<std::size_t>(flat.size())),
                   n_qubits, layout);
}

Complex trace_functional(std::span<const Complex> flat, int n_qubits, SectorLayout layout) {
  const std::size_t d = std::size_t{1} << n_qubits;
  if (flat.size() != liouville_dimension(n_qubits, layout)) {
    throw std::invalid_argument("trace_functional: dimension mismatch");
  }
  Complex sum{0.0, 0.0};
  for (int s = 0; s < sector_count(layout); ++s) {
    for (std::size_t z = 0; z < d; ++z) sum += flat[flat_index(d, s, z, z)];
  }
  return sum;
}

}  // namespace qdf
