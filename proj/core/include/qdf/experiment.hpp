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

#include <vector>

#include "qdf/csv.hpp"
#include "qdf/integrator.hpp"
#include "qdf/model.hpp"
#include "qdf/run_config.hpp"
#include "qdf/sector_dm.hpp"
#include "qdf/state.hpp"

namespace qdf {

struct SimulationSpec {
  ModelParams params;
  std::vector<double> frame;  // rotating-frame frequency per qubit
  QubitState initial;
  Rk4Options rk4;
  SectorLayout layout = SectorLayout::spin_reduced;
};

struct SampleRow {
  double t = 0.0;
  double fidelity = 0.0;
  double trace_error = 0.0;  // total trace minus one
  double hermiticity = 0.0;  // largest |rho - rho^dagger| over sectors
  double pop_a = 0.0;
  double pop_b = 0.0;  // both spin species
  double pop_c = 0.0;
};

std::vector<SampleRow> simulate(const SimulationSpec& spec);

SimulationSpec make_spec(const RunConfig& cfg);

/// Columns t,F,trace_err,pop_a,pop_b,pop_c; one row per sample time.
Table run_single(const RunConfig& cfg);

}  // namespace qdf
