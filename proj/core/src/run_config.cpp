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

#include "qdf/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

namespace qdf {
namespace {

using nlohmann::json;

double read_number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
  return v;
}

int read_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ConfigError(field, "expected an integer");
  return j.get<int>();
}

std::string read_string(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError(field, "expected a string");
  return j.get<std::string>();
}

template <typename T, typename Reader>
std::vector<T> read_list(const json& j, const std::string& field, Reader reader) {
  if (!j.is_array()) throw ConfigError(field, "expected an array");
  std::vector<T> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(reader(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void check_qubit_list(const std::vector<int>& list, int n, const std::string& field) {
  std::set<int> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = field + "[" + std::to_string(i) + "]";
    if (list[i] < 1 || list[i] > n) {
      throw ConfigError(path, "qubit index must lie in 1.." + std::to_string(n));
    }
    if (!seen.insert(list[i]).second) throw ConfigError(path, "duplicate qubit index");
  }
}

std::vector<int> to_zero_based(const std::vector<int>& one_based) {
  std::vector<int> out;
  out.reserve(one_based.size());
  for (int q : one_based) out.push_back(q - 1);
  return out;
}

// True when `interval` is a whole multiple of `dt` to within rounding.
bool whole_steps(double interval, double dt) {
  const double ratio = interval / dt;
  return std::abs(ratio - std::round(ratio)) <= 1e-9 * std::max(1.0, ratio);
}

}  // namespace

RunConfig parse_run_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", e.what());
  }
  if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");

  RunConfig cfg;
  const auto ints = [](const json& j, const std::string& f) { return read_int(j, f); };
  const auto nums = [](const json& j, const std::string& f) { return read_number(j, f); };
  for (const auto& [key, value] : doc.items()) {
    if (key == "n_qubits") {
      cfg.n_qubits = read_int(value, key);
    } else if (key == "state") {
      cfg.state = read_string(value, key);
    } else if (key == "omega") {
      cfg.omega = read_number(value, key);
    } else if (key == "epsilon") {
      cfg.epsilon = read_list<double>(value, key, nums);
    } else if (key == "j") {
      cfg.j = read_list<double>(value, key, nums);
    } else if (key == "zeta") {
      cfg.zeta = read_number(value, key);
    } else if (key == "eta") {
      cfg.eta = read_number(value, key);
    } else if (key == "scenario") {
      cfg.scenario = read_string(value, key);
    } else if (key == "affected_qubits") {
      cfg.affected_qubits = read_list<int>(value, key, ints);
    } else if (key == "primed_scale") {
      cfg.primed_scale = read_number(value, key);
    } else if (key == "t_end") {
      cfg.t_end = read_number(value, key);
    } else if (key == "dt") {
      cfg.dt = read_number(value, key);
    } else if (key == "sample_interval") {
      cfg.sample_interval = read_number(value, key);
    } else if (key == "left_barrier") {
      cfg.left_barrier = read_list<int>(value, key, ints);
    } else if (key == "right_barrier") {
      cfg.right_barrier = read_list<int>(value, key, ints);
    } else if (key == "frame") {
      cfg.frame = read_string(value, key);
    } else if (key == "logical_zero") {
      cfg.logical_zero = read_string(value, key);
    } else if (key == "output") {
      cfg.output = read_string(value, key);
    } else {
      throw ConfigError(key, "unknown field");
    }
  }
  validate(cfg);
  return cfg;
}

std::string serialize_run_config(const RunConfig& cfg) {
  json doc = json::object();
  doc["n_qubits"] = cfg.n_qubits;
  doc["state"] = cfg.state;
  doc["omega"] = cfg.omega;
  doc["epsilon"] = cfg.epsilon;
  doc["j"] = cfg.j;
  doc["zeta"] = cfg.zeta;
  doc["eta"] = cfg.eta;
  doc["scenario"] = cfg.scenario;
  doc["affected_qubits"] = cfg.affected_qubits;
  doc["primed_scale"] = cfg.primed_scale;
  doc["t_end"] = cfg.t_end;
  doc["dt"] = cfg.dt;
  doc["sample_interval"] = cfg.sample_interval;
  doc["left_barrier"] = cfg.left_barrier;
  doc["right_barrier"] = cfg.right_barrier;
  doc["frame"] = cfg.frame;
  doc["logical_zero"] = cfg.logical_zero;
  doc["output"] = cfg.output;
  return doc.dump(2) + "\n";
}

FrameChoice frame_choice(const RunConfig& cfg) {
  if (cfg.frame == "modified") return FrameChoice::modified;
  if (cfg.frame == "baseline") return FrameChoice::baseline;
  throw ConfigError("frame", "expected \"modified\" or \"baseline\"");
}

LogicalEncoding logical_encoding(const RunConfig& cfg) {
  if (cfg.logical_zero == "down") return LogicalEncoding{true};
  if (cfg.logical_zero == "up") return LogicalEncoding{false};
  throw ConfigError("logical_zero", "expected \"down\" or \"up\"");
}

Scenario scenario_of(const RunConfig& cfg) {
  ScenarioKind kind;
  try {
    kind = parse_scenario_kind(cfg.scenario);
  } catch (const std::exception&) {
    throw ConfigError("scenario", "unknown scenario '" + cfg.scenario + "'");
  }
  if (kind == ScenarioKind::custom) return Scenario::custom(to_zero_based(cfg.affected_qubits), cfg.eta);
  return Scenario::named(kind, cfg.eta);
}

void validate(const RunConfig& cfg) {
  const int n = cfg.n_qubits;
  if (n < 2 || n > kMaxQubits) {
    throw ConfigError("n_qubits", "must lie in 2.." + std::to_string(kMaxQubits));
  }
  QubitState psi;
  try {
    psi = parse_named_state(cfg.state, logical_encoding(cfg));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("state", e.what());
  }
  if (psi.n_qubits != n) {
    throw ConfigError("state", "'" + cfg.state + "' has " + std::to_string(psi.n_qubits) +
                                   " qubits but n_qubits is " + std::to_string(n));
  }
  if (!cfg.epsilon.empty() && cfg.epsilon.size() != static_cast<std::size_t>(n)) {
    throw ConfigError("epsilon", "expected 0 or " + std::to_string(n) + " values");
  }
  if (!cfg.j.empty() && cfg.j.size() != static_cast<std::size_t>(n - 1)) {
    throw ConfigError("j", "expected 0 or " + std::to_string(n - 1) + " values");
  }
  if (!(cfg.zeta >= 0.0 && cfg.zeta < 1.0)) throw ConfigError("zeta", "must lie in [0, 1)");
  if (!(cfg.eta >= 0.0 && cfg.eta < 1.0)) throw ConfigError("eta", "must lie in [0, 1)");
  if (!(cfg.primed_scale > 0.0)) throw ConfigError("primed_scale", "must be positive");
  if (!(cfg.t_end >= 0.0)) throw ConfigError("t_end", "must be non-negative");
  if (!(cfg.dt > 0.0)) throw ConfigError("dt", "must be positive");
  if (!(cfg.sample_interval >= 0.0)) throw ConfigError("sample_interval", "must be non-negative");
  if (cfg.sample_interval > 0.0 && !whole_steps(cfg.sample_interval, cfg.dt)) {
    throw ConfigError("sample_interval", "must be a whole number of dt steps");
  }
  if (!whole_steps(cfg.t_end, cfg.dt)) throw ConfigError("t_end", "must be a whole number of dt steps");

  const Scenario scenario = scenario_of(cfg);
  if (scenario.kind != ScenarioKind::custom && !cfg.affected_qubits.empty()) {
    throw ConfigError("affected_qubits", "only allowed with the custom scenario");
  }
  check_qubit_list(cfg.affected_qubits, n, "affected_qubits");
  for (int k : scenario.affected) {
    if (k >= n) {
      throw ConfigError("scenario", "'" + cfg.scenario + "' needs at least " + std::to_string(k + 1) +
                                        " qubits");
    }
  }

  if (cfg.left_barrier.empty() != cfg.right_barrier.empty()) {
    throw ConfigError(cfg.left_barrier.empty() ? "left_barrier" : "right_barrier",
                      "give both barrier lists or neither");
  }
  check_qubit_list(cfg.left_barrier, n, "left_barrier");
  check_qubit_list(cfg.right_barrier, n, "right_barrier");

  frame_choice(cfg);
  ModelParams params;
  try {
    params = base_params(cfg);
    params.validate();
  } catch (const std::exception& e) {
    throw ConfigError("left_barrier", e.what());
  }
  try {
    apply_scenario(params, scenario);
  } catch (const std::exception& e) {
    throw ConfigError("scenario", e.what());
  }
}

ModelParams base_params(const RunConfig& cfg) {
  UniformSettings s;
  s.n_qubits = cfg.n_qubits;
  s.omega = cfg.omega;
  s.zeta = cfg.zeta;
  s.primed_scale = cfg.primed_scale;
  ModelParams p = make_uniform(s);
  if (!cfg.epsilon.empty()) p.epsilon = cfg.epsilon;
  if (!cfg.j.empty()) p.j_coupling = cfg.j;
  if (!cfg.left_barrier.empty()) {
    p.left_barrier = to_zero_based(cfg.left_barrier);
    p.right_barrier = to_zero_based(cfg.right_barrier);
    std::sort(p.left_barrier.begin(), p.left_barrier.end());
    std::sort(p.right_barrier.begin(), p.right_barrier.end());
  }
  return p;
}

ModelParams scenario_params(const RunConfig& cfg) { return apply_scenario(base_params(cfg), scenario_of(cfg)); }

}  // namespace qdf
