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
#include <vector>

#include "qdf/model.hpp"

namespace qdf {

/// Effective tunneling rates of the two detector barriers for one qubit
/// configuration. The primed rates are evaluated one charging energy above
/// the Fermi level and govern transitions involving a doubly occupied island.
struct BarrierRates {
  double gamma_L = 0.0;
  double gamma_R = 0.0;
  double gamma_L_primed = 0.0;
  double gamma_R_primed = 0.0;
};

/// gamma0_i + spin * delta_gamma_i. Throws std::domain_error if the result is
/// not positive and std::out_of_range on a bad index or spin.
double qubit_branch_rate(int qubit, int spin, const ModelParams& p);

/// Qubits on one barrier act as series resistances:
/// 1/Gamma_barrier = sum_i 1/Gamma_i^(s_i).
BarrierRates barrier_rates(const QubitConfig& z, const ModelParams& p);

/// Barrier rates for all 2^N configurations, indexed by QubitConfig::index().
class RateTable {
 public:
  explicit RateTable(const ModelParams& p);

  int n_qubits() const noexcept { return n_qubits_; }
  const BarrierRates& operator[](std::uint32_t config_index) const { return rates_[config_index]; }
  std::size_t size() const noexcept { return rates_.size(); }

 private:
  int n_qubits_;
  std::vector<BarrierRates> rates_;
};

}  // namespace qdf
