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

#include "qdf/rates.hpp"

#include <stdexcept>
#include <string>

namespace qdf {

double qubit_branch_rate(int qubit, int spin, const ModelParams& p) {
  if (qubit < 0 || qubit >= p.n_qubits) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
  }
  if (spin != 1 && spin != -1) throw std::out_of_range("spin must be -1 or +1");
  const auto i = static_cast<std::size_t>(qubit);
  const double rate = p.gamma0[i] + spin * p.delta_gamma[i];
  if (!(rate > 0.0)) {
    throw std::domain_error("qubit " + std::to_string(qubit) + " branch rate " +
                            std::to_string(rate) + " is not positive");
  }
  return rate;
}

BarrierRates barrier_rates(const QubitConfig& z, const ModelParams& p) {
  if (z.size() != p.n_qubits) {
    throw std::invalid_argument("configuration size does not match the model");
  }
  if (p.left_barrier.empty() || p.right_barrier.empty()) {
    throw std::invalid_argument("barrier has no qubits assigned");
  }
  auto series = [&](const std::vector<int>& qubits) {
    double inverse = 0.0;
    for (int q : qubits) inverse += 1.0 / qubit_branch_rate(q, z.spin(q), p);
    return 1.0 / inverse;
  };
  BarrierRates r;
  r.gamma_L = series(p.left_barrier);
  r.gamma_R = series(p.right_barrier);
  // Every branch rate scales by primed_scale, so the series rate does too.
  r.gamma_L_primed = p.primed_scale * r.gamma_L;
  r.gamma_R_primed = p.primed_scale * r.gamma_R;
  return r;
}

RateTable::RateTable(const ModelParams& p) : n_qubits_(p.n_qubits) {
  p.validate();
  const std::uint32_t count = std::uint32_t{1} << p.n_qubits;
  rates_.reserve(count);
  for (std::uint32_t z = 0; z < count; ++z) {
    rates_.push_back(barrier_rates(QubitConfig(p.n_qubits, z), p));
  }
}

}  // namespace qdf
