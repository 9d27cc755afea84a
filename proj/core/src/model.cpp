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

#include "qdf/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdf {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
}

void check_length(const std::vector<double>& v, std::size_t expected, const char* name) {
  if (v.size() != expected) {
    throw std::invalid_argument(std::string(name) + " has " + std::to_string(v.size()) +
                                " entries, expected " + std::to_string(expected));
  }
}

}  // namespace

QubitConfig::QubitConfig(int n_qubits, std::uint32_t index) : n_qubits_(n_qubits), index_(index) {
  check_qubit_count(n_qubits);
  if (index >= count()) {
    throw std::out_of_range("configuration index " + std::to_string(index) + " out of range for " +
                            std::to_string(n_qubits) + " qubits");
  }
}

QubitConfig QubitConfig::from_spins(std::span<const int> spins) {
  std::uint32_t index = 0;
  for (std::size_t q = 0; q < spins.size(); ++q) {
    if (spins[q] != 1 && spins[q] != -1) {
      throw std::invalid_argument("spin values must be -1 or +1");
    }
    if (spins[q] == 1) index |= std::uint32_t{1} << q;
  }
  return QubitConfig(static_cast<int>(spins.size()), index);
}

int QubitConfig::spin(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
  }
  return ((index_ >> qubit) & 1U) ? 1 : -1;
}

std::vector<int> QubitConfig::spins() const {
  std::vector<int> out(static_cast<std::size_t>(n_qubits_));
  for (int q = 0; q < n_qubits_; ++q) out[static_cast<std::size_t>(q)] = spin(q);
  return out;
}

std::string QubitConfig::label() const {
  std::string out;
  int q = 0;
  for (; q + 1 < n_qubits_; q += 2) {
    const int first_up = (index_ >> q) & 1U;
    const int second_up = (index_ >> (q + 1)) & 1U;
    out.push_back(static_cast<char>('A' + 2 * first_up + second_up));
  }
  // odd trailing qubit
  if (q < n_qubits_) out.push_back(((index_ >> q) & 1U) ? 'u' : 'd');
  return out;
}

QubitConfig flip(const QubitConfig& z, int qubit) {
  if (qubit < 0 || qubit >= z.size()) {
    throw std::out_of_range("flip: qubit index " + std::to_string(qubit) + " out of range");
  }
  return QubitConfig(z.size(), z.index() ^ (std::uint32_t{1} << qubit));
}

void ModelParams::validate() const {
  check_qubit_count(n_qubits);
  const auto n = static_cast<std::size_t>(n_qubits);
  check_length(omega, n, "omega");
  check_length(epsilon, n, "epsilon");
  check_length(j_coupling, n - 1, "j_coupling");
  check_length(gamma0, n, "gamma0");
  check_length(delta_gamma, n, "delta_gamma");
  if (!(primed_scale > 0.0) || !std::isfinite(primed_scale)) {
    throw std::invalid_argument("primed_scale must be positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(omega[i]) || !std::isfinite(epsilon[i]) || !std::isfinite(gamma0[i]) ||
        !std::isfinite(delta_gamma[i])) {
      throw std::invalid_argument("non-finite parameter for qubit " + std::to_string(i));
    }
    if (!(gamma0[i] - std::abs(delta_gamma[i]) > 0.0)) {
      throw std::invalid_argument("qubit " + std::to_string(i) +
                                  ": gamma0 - |delta_gamma| must be positive");
    }
  }
  for (double j : j_coupling) {
    if (!std::isfinite(j)) throw std::invalid_argument("non-finite j_coupling");
  }

  auto sorted_unique = [&](std::vector<int> v, const char* name) {
    if (v.empty()) throw std::invalid_argument(std::string(name) + " barrier has no qubits");
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
      throw std::invalid_argument(std::string(name) + " barrier lists a qubit twice");
    }
    if (v.front() < 0 || v.back() >= n_qubits) {
      throw std::invalid_argument(std::string(name) + " barrier qubit index out of range");
    }
    return v;
  };
  const auto left = sorted_unique(left_barrier, "left");
  const auto right = sorted_unique(right_barrier, "right");

  std::vector<int> all(n);
  for (int q = 0; q < n_qubits; ++q) all[static_cast<std::size_t>(q)] = q;
  const bool shared = left == all && right == all;
  if (!shared) {
    std::vector<int> both;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                          std::back_inserter(both));
    if (!both.empty()) {
      throw std::invalid_argument("barrier sets overlap (qubit " + std::to_string(both.front()) +
                                  ")");
    }
    if (left.size() + right.size() != n) {
      throw std::invalid_argument("barrier sets do not cover every qubit");
    }
  }
}

std::vector<int> default_left_barrier(int n_qubits) {
  std::vector<int> out;
  for (int q = 0; q < (n_qubits + 1) / 2; ++q) out.push_back(q);
  return out;
}

std::vector<int> default_right_barrier(int n_qubits) {
  std::vector<int> out;
  for (int q = (n_qubits + 1) / 2; q < n_qubits; ++q) out.push_back(q);
  return out;
}

ModelParams make_uniform(const UniformSettings& s) {
  check_qubit_count(s.n_qubits);
  const auto n = static_cast<std::size_t>(s.n_qubits);
  ModelParams p;
  p.n_qubits = s.n_qubits;
  p.omega.assign(n, s.omega);
  p.epsilon.assign(n, s.epsilon);
  p.j_coupling.assign(n - 1, s.j_coupling);
  p.gamma0.assign(n, kGammaUnit);
  p.delta_gamma.assign(n, s.zeta * kGammaUnit);
  p.primed_scale = s.primed_scale;
  if (s.barriers == BarrierLayout::shared) {
    for (int q = 0; q < s.n_qubits; ++q) {
      p.left_barrier.push_back(q);
      p.right_barrier.push_back(q);
    }
  } else {
    p.left_barrier = default_left_barrier(s.n_qubits);
    p.right_barrier = default_right_barrier(s.n_qubits);
  }
  p.validate();
  return p;
}

double config_energy(const QubitConfig& z, const ModelParams& p) {
  if (z.size() != p.n_qubits) {
    throw std::invalid_argument("configuration size does not match the model");
  }
  double energy = 0.0;
  for (int i = 0; i < p.n_qubits; ++i) {
    energy += p.epsilon[static_cast<std::size_t>(i)] * z.spin(i);
  }
  for (int i = 0; i + 1 < p.n_qubits; ++i) {
    energy += p.j_coupling[static_cast<std::size_t>(i)] * z.spin(i) * z.spin(i + 1);
  }
  return energy;
}

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::uniform: return "uniform";
    case ScenarioKind::case_i: return "case_i";
    case ScenarioKind::case_ii: return "case_ii";
    case ScenarioKind::case_iii: return "case_iii";
    case ScenarioKind::custom: return "custom";
  }
  return "unknown";
}

ScenarioKind parse_scenario_kind(std::string_view name) {
  for (auto kind : {ScenarioKind::uniform, ScenarioKind::case_i, ScenarioKind::case_ii,
                    ScenarioKind::case_iii, ScenarioKind::custom}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

Scenario Scenario::named(ScenarioKind kind, double eta) {
  Scenario s;
  s.kind = kind;
  s.eta = eta;
  switch (kind) {
    case ScenarioKind::uniform: break;
    case ScenarioKind::case_i: s.affected = {2}; break;
    case ScenarioKind::case_ii: s.affected = {1, 2}; break;
    case ScenarioKind::case_iii: s.affected = {3}; break;
    case ScenarioKind::custom:
      throw std::invalid_argument("custom scenarios need an explicit qubit list");
  }
  return s;
}

Scenario Scenario::custom(std::vector<int> affected, double eta) {
  Scenario s;
  s.kind = ScenarioKind::custom;
  s.affected = std::move(affected);
  s.eta = eta;
  return s;
}

ModelParams apply_scenario(const ModelParams& base, const Scenario& s) {
  base.validate();
  if (!(s.eta >= 0.0 && s.eta < 1.0)) {
    throw std::invalid_argument("eta must lie in [0, 1)");
  }
  for (int k : s.affected) {
    if (k < 0 || k >= base.n_qubits) {
      throw std::out_of_range("scenario '" + std::string(to_string(s.kind)) + "' touches qubit " +
                              std::to_string(k + 1) + " but the model has " +
                              std::to_string(base.n_qubits));
    }
  }
  if (s.eta == 0.0) return base;

  ModelParams out = base;
  const double keep = 1.0 - s.eta;
  for (int k : s.affected) {
    const auto i = static_cast<std::size_t>(k);
    out.omega[i] = keep * base.omega[i];
    out.epsilon[i] = s.eta * kGammaUnit;
    out.gamma0[i] = keep * base.gamma0[i];
    out.delta_gamma[i] = keep * base.delta_gamma[i];
  }
  out.validate();
  return out;
}

}  // namespace qdf
