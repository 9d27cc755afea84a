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

#include "qdf/experiment.hpp"

#include <stdexcept>

#include "qdf/analysis.hpp"
#include "qdf/liouvillian.hpp"

namespace qdf {

std::vector<SampleRow> simulate(const SimulationSpec& spec) {
  if (spec.initial.n_qubits != spec.params.n_qubits) {
    throw std::invalid_argument("simulate: initial state and model disagree on the qubit count");
  }
  if (spec.frame.size() != static_cast<std::size_t>(spec.params.n_qubits)) {
    throw std::invalid_argument("simulate: one frame frequency per qubit is required");
  }
  const int n = spec.params.n_qubits;
  Generator g = assemble(spec.params);
  if (spec.layout == SectorLayout::spin_reduced) g = reduce_spin_symmetric(g);

  const SectorDM dm0 = to_density(spec.initial);
  const CMatrix rho0 = reduce_qubits(dm0);
  const StateVector v0 = flatten(dm0, spec.layout);

  std::vector<SampleRow> rows;
  integrate_rk4(g, v0, spec.rk4, [&](double t, const StateVector& v) {
    const SectorDM dm = unflatten(v, n, spec.layout);
    const auto pops = dm.populations();
    SampleRow row;
    row.t = t;
    row.trace_error = dm.total_trace() - 1.0;
    row.hermiticity = dm.hermiticity_defect();
    row.pop_a = pops[0];
    row.pop_b = pops[1] + pops[2];
    row.pop_c = pops[3];
    row.fidelity = fidelity(rho0, rotating_frame(reduce_qubits(dm), spec.frame, t));
    rows.push_back(row);
  });
  return rows;
}

SimulationSpec make_spec(const RunConfig& cfg) {
  validate(cfg);
  SimulationSpec spec;
  spec.params = scenario_params(cfg);
  spec.frame = rotating_frequencies(frame_choice(cfg) == FrameChoice::modified ? spec.params
                                                                              : base_params(cfg));
  spec.initial = parse_named_state(cfg.state, logical_encoding(cfg));
  spec.rk4.t_end = cfg.t_end;
  spec.rk4.dt = cfg.dt;
  spec.rk4.sample_interval = cfg.sample_interval;
  return spec;
}

Table run_single(const RunConfig& cfg) {
  Table table;
  table.header = {"t", "F", "trace_err", "pop_a", "pop_b", "pop_c"};
  for (const auto& r : simulate(make_spec(cfg))) {
    table.rows.push_back({r.t, r.fidelity, r.trace_error, r.pop_a, r.pop_b, r.pop_c});
  }
  return table;
}

}  // namespace qdf
