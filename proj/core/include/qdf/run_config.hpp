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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdf/model.hpp"
#include "qdf/state.hpp"

namespace qdf {

/// A configuration problem tied to a field path such as "zeta" or
/// "epsilon[2]".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class FrameChoice {
  modified,  // rotate with the scenario-modified W'_i
  baseline,  // rotate with the uniform (pre-scenario) W'_i
};

/// One simulation run. Qubit indices in the barrier and affected lists are
/// one-based, as in the physical labelling of the qubits.
struct RunConfig {
  int n_qubits = 4;
  std::string state = "psi2";
  double omega = 2.0;
  std::vector<double> epsilon;  // empty: all zero
  std::vector<double> j;        // empty: all zero; else n_qubits - 1 values
  double zeta = 0.2;
  double eta = 0.0;
  std::string scenario = "uniform";
  std::vector<int> affected_qubits;  // custom scenario only
  double primed_scale = 1.0;
  double t_end = 50.0;
  double dt = 1e-3;
  double sample_interval = 0.1;
  std::vector<int> left_barrier;   // empty: default split
  std::vector<int> right_barrier;  // empty: default split
  std::string frame = "modified";
  std::string logical_zero = "down";
  std::string output;  // CSV path; empty writes to stdout
};

/// Strict JSON parse: unknown fields and wrong types raise ConfigError.
RunConfig parse_run_config(std::string_view json_text);

/// Pretty JSON with every field present.
std::string serialize_run_config(const RunConfig& cfg);

/// Throws ConfigError for the first invalid field.
void validate(const RunConfig& cfg);

FrameChoice frame_choice(const RunConfig& cfg);
LogicalEncoding logical_encoding(const RunConfig& cfg);

/// Uniform parameters before the scenario is applied.
ModelParams base_params(const RunConfig& cfg);
/// base_params with the configured scenario applied.
ModelParams scenario_params(const RunConfig& cfg);
Scenario scenario_of(const RunConfig& cfg);

}  // namespace qdf
