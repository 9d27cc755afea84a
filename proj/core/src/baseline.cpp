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

#include "qdf/baseline.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qdf {

int total_spin(std::uint32_t index, int n_qubits) {
  const int up = std::popcount(index);
  return 2 * up - n_qubits;
}

CMatrix collective_dephasing(const CMatrix& rho, double gamma_d, double t) {
  if (!(gamma_d >= 0.0)) throw std::invalid_argument("dephasing rate must be non-negative");
  if (!(t >= 0.0)) throw std::invalid_argument("time must be non-negative");
  const auto d = static_cast<std::size_t>(rho.rows());
  if (rho.rows() != rho.cols() || d < 2 || !std::has_single_bit(d)) {
    throw std::invalid_argument("collective_dephasing: expected a 2^N square matrix");
  }
  const int n = std::countr_zero(d);
  CMatrix out = rho;
  for (Eigen::Index z1 = 0; z1 < rho.rows(); ++z1) {
    const int s1 = total_spin(static_cast<std::uint32_t>(z1), n);
    for (Eigen::Index z2 = 0; z2 < rho.cols(); ++z2) {
      const int diff = s1 - total_spin(static_cast<std::uint32_t>(z2), n);
      if (diff != 0) out(z1, z2) *= std::exp(-0.5 * gamma_d * t * diff * diff);
    }
  }
  return out;
}

}  // namespace qdf
