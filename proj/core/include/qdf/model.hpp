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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdf/types.hpp"

namespace qdf {

/// Classical joint sigma_z configuration of N qubits.
///
/// Qubit indices are zero-based throughout the library. Qubit q is stored in
/// bit q of the index (little-endian), with spin -1 (down) encoded as 0.
class QubitConfig {
 public:
  QubitConfig(int n_qubits, std::uint32_t index);

  static QubitConfig from_spins(std::span<const int> spins);

  int size() const noexcept { return n_qubits_; }
  std::uint32_t index() const noexcept { return index_; }
  std::uint32_t count() const noexcept { return std::uint32_t{1} << n_qubits_; }

  /// Eigenvalue of sigma_z for `qubit`: -1 (down) or +1 (up).
  int spin(int qubit) const;
  std::vector<int> spins() const;

  /// Pair labels: qubits (1,2) give the first letter, (3,4) the second, with
  /// A = down-down, B = down-up, C = up-down, D = up-up.
  std::string label() const;

  friend bool operator==(const QubitConfig&, const QubitConfig&) = default;

 private:
  int n_qubits_;
  std::uint32_t index_;
};

/// Single-qubit spin flip. Involution; throws std::out_of_range on a bad index.
QubitConfig flip(const QubitConfig& z, int qubit);

/// Effective model parameters. Energies and rates are in units of kGammaUnit.
struct ModelParams {
  int n_qubits = 0;
  std::vector<double> omega;        // inter-dot tunnel coupling per qubit
  std::vector<double> epsilon;      // gate bias per qubit
  std::vector<double> j_coupling;   // nearest-neighbour sz-sz coupling, size n-1
  std::vector<double> gamma0;       // mean barrier rate per qubit
  std::vector<double> delta_gamma;  // rate modulation per qubit
  double primed_scale = 1.0;        // rate at mu+U relative to the rate at mu
  std::vector<int> left_barrier;
  std::vector<int> right_barrier;

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
};

enum class BarrierLayout {
  split,   // first half of the qubits on the left barrier, rest on the right
  shared,  // every qubit modulates both barriers
};

struct UniformSettings {
  int n_qubits = 4;
  double omega = 2.0;
  double epsilon = 0.0;
  double j_coupling = 0.0;
  double zeta = 0.2;  // measurement strength, delta_gamma / gamma0
  double primed_scale = 1.0;
  BarrierLayout barriers = BarrierLayout::split;
};

ModelParams make_uniform(const UniformSettings& settings);

/// Split assignment: qubits [0, ceil(n/2)) left, remainder right.
std::vector<int> default_left_barrier(int n_qubits);
std::vector<int> default_right_barrier(int n_qubits);

/// Diagonal of the qubit Hamiltonian in the configuration basis:
/// sum_i eps_i s_i + sum_i J_{i,i+1} s_i s_{i+1}.
double config_energy(const QubitConfig& z, const ModelParams& p);

enum class ScenarioKind { uniform, case_i, case_ii, case_iii, custom };

std::string_view to_string(ScenarioKind kind);
/// Throws std::invalid_argument on an unknown name.
ScenarioKind parse_scenario_kind(std::string_view name);

/// Non-uniformity recipe. For the named cases the affected qubits are fixed:
/// case_i -> qubit 3, case_ii -> qubits 2 and 3, case_iii -> qubit 4 (written
/// one-based; stored zero-based in `affected`).
struct Scenario {
  ScenarioKind kind = ScenarioKind::uniform;
  std::vector<int> affected;
  double eta = 0.0;

  static Scenario named(ScenarioKind kind, double eta);
  static Scenario custom(std::vector<int> affected, double eta);
};

/// For each affected qubit k: omega_k *= (1-eta), epsilon_k = eta (absolute),
/// gamma0_k and delta_gamma_k *= (1-eta). Other qubits are copied verbatim.
ModelParams apply_scenario(const ModelParams& base, const Scenario& s);

}  // namespace qdf
