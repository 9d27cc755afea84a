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

#include "qdf/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qdf {

namespace {

constexpr double kTraceTolerance = 1e-6;
constexpr double kImagTolerance = 1e-10;

}  // namespace

CMatrix reduce_qubits(const SectorDM& dm) {
  return dm.rho[0] + dm.rho[1] + dm.rho[2] + dm.rho[3];
}

CMatrix reduce_qubits(const StateVector& flat, int n_qubits, SectorLayout layout) {
  if (static_cast<std::size_t>(flat.size()) != liouville_dimension(n_qubits, layout)) {
    throw std::invalid_argument("reduce_qubits: dimension mismatch");
  }
  const auto d = Eigen::Index{1} << n_qubits;
  CMatrix out = CMatrix::Zero(d, d);
  for (int s = 0; s < sector_count(layout); ++s) {
    out += Eigen::Map<const CMatrix>(flat.data() + static_cast<Eigen::Index>(s) * d * d, d, d);
  }
  return out;
}

std::vector<double> rotating_frequencies(const ModelParams& p) {
  std::vector<double> out(static_cast<std::size_t>(p.n_qubits));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::sqrt(p.omega[i] * p.omega[i] + 0.25 * p.epsilon[i] * p.epsilon[i]);
  }
  return out;
}

CMatrix rotating_frame_unitary(std::span<const double> frequencies, double t) {
  const auto n = static_cast<int>(frequencies.size());
  const auto d = Eigen::Index{1} << n;
  CMatrix r = CMatrix::Zero(d, d);
  // Entry (row, col) is the product over qubits of the single-qubit factor:
  // cos on matching bits, i sin where the bit differs.
  for (Eigen::Index row = 0; row < d; ++row) {
    for (Eigen::Index col = 0; col < d; ++col) {
      Complex v{1.0, 0.0};
      for (int q = 0; q < n; ++q) {
        const double phase = frequencies[static_cast<std::size_t>(q)] * t;
        const bool differs = ((row ^ col) >> q) & 1;
        v *= differs ? Complex(0.0, std::sin(phase)) : Complex(std::cos(phase), 0.0);
      }
      r(row, col) = v;
    }
  }
  return r;
}

CMatrix rotating_frame(const CMatrix& rho_q, std::span<const double> frequencies, double t) {
  if (rho_q.rows() != (Eigen::Index{1} << frequencies.size()) || rho_q.cols() != rho_q.rows()) {
    throw std::invalid_argument("rotating_frame: matrix size does not match the qubit count");
  }
  const CMatrix r = rotating_frame_unitary(frequencies, t);
  return r * rho_q * r.adjoint();
}

CMatrix rotating_frame(const CMatrix& rho_q, const ModelParams& p, double t) {
  const auto freq = rotating_frequencies(p);
  return rotating_frame(rho_q, freq, t);
}

double fidelity(const CMatrix& rho0, const CMatrix& rho) {
  if (rho0.rows() != rho.rows() || rho0.cols() != rho.cols()) {
    throw std::invalid_argument("fidelity: size mismatch");
  }
  const double t0 = rho0.trace().real();
  const double t1 = rho.trace().real();
  if (std::abs(t0 - 1.0) > kTraceTolerance || std::abs(t1 - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg << "fidelity: traces " << t0 << " and " << t1 << " are not unit";
    throw std::domain_error(msg.str());
  }
  // Tr[A B] = sum_ij A_ij B_ji
  const Complex overlap = (rho0.array() * rho.transpose().array()).sum();
  if (std::abs(overlap.imag()) > kImagTolerance) {
    std::ostringstream msg;
    msg << "fidelity: overlap has imaginary part " << overlap.imag();
    throw std::domain_error(msg.str());
  }
  return overlap.real();
}

double purity(const CMatrix& rho) { return (rho.array() * rho.transpose().array()).sum().real(); }

}  // namespace qdf
