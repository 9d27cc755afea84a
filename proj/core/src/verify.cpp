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

#include "qdf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qdf/analysis.hpp"
#include "qdf/baseline.hpp"
#include "qdf/csv.hpp"
#include "qdf/experiment.hpp"
#include "qdf/integrator.hpp"
#include "qdf/state.hpp"

namespace qdf {
namespace {

constexpr double kFaultSize = 1e-3;

// Model variants covering both qubit counts, both barrier layouts, bias,
// coupling, non-uniform rates and primed rates different from unprimed.
std::vector<ModelParams> sample_models() {
  std::vector<ModelParams> out;
  for (int n : {2, 4}) {
    for (double zeta : {0.2, 0.6}) {
      UniformSettings s;
      s.n_qubits = n;
      s.zeta = zeta;
      out.push_back(make_uniform(s));
    }
  }
  UniformSettings shared;
  shared.n_qubits = 2;
  shared.barriers = BarrierLayout::shared;
  out.push_back(make_uniform(shared));

  UniformSettings rough;
  rough.epsilon = 0.5;
  rough.j_coupling = 0.3;
  rough.primed_scale = 1.7;
  ModelParams p = make_uniform(rough);
  p.omega = {2.0, 1.5, 0.0, 2.5};
  p.epsilon[2] = -0.7;
  p.gamma0 = {1.0, 0.8, 1.3, 1.1};
  p.delta_gamma = {0.2, -0.4, 0.6, 0.1};
  out.push_back(apply_scenario(p, Scenario::named(ScenarioKind::case_ii, 0.05)));
  return out;
}

CheckResult make_check(std::string name, double measured, double tolerance, std::string detail = {}) {
  return {std::move(name), measured <= tolerance, measured, tolerance, std::move(detail)};
}

}  // namespace

Generator perturb_diagonal_row(const Generator& g, Complex delta) {
  std::vector<GeneratorEntry> entries(g.entries().begin(), g.entries().end());
  const std::size_t d = g.qubit_dim();
  for (auto& e : entries) {
    const std::size_t within = e.row % (d * d);
    if (within / d == within % d) {
      e.value += delta;
      return Generator(g.n_qubits(), g.layout(), std::move(entries));
    }
  }
  throw std::logic_error("perturb_diagonal_row: no diagonal row found");
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  auto& checks = report.checks;

  double trace_defect = 0.0, conj_defect = 0.0, herm_defect = 0.0;
  for (const auto& p : sample_models()) {
    const Generator full = assemble(p);
    for (const Generator& g : {full, reduce_spin_symmetric(full)}) {
      const Generator probe = options.inject_fault ? perturb_diagonal_row(g, kFaultSize) : g;
      trace_defect = std::max(trace_defect, trace_preservation_defect(probe));
      conj_defect = std::max(conj_defect, conjugation_symmetry_defect(g));
      herm_defect = std::max(herm_defect, hermiticity_preservation_defect(g));
    }
  }
  checks.push_back(make_check("trace_preservation", trace_defect, 1e-12,
                              options.inject_fault ? "fault injected" : ""));
  checks.push_back(make_check("conjugation_symmetry", conj_defect, 1e-12));
  checks.push_back(make_check("hermiticity_preservation", herm_defect, 1e-12));

  {
    const Generator clean = assemble(make_uniform({}));
    const double detected = trace_preservation_defect(perturb_diagonal_row(clean, kFaultSize));
    CheckResult c{"fault_injection_self_test", detected >= 0.5 * kFaultSize, detected, 0.5 * kFaultSize,
                  "a perturbed entry must raise the trace defect above the tolerance"};
    checks.push_back(c);
  }

  {
    const Generator full = assemble(make_uniform({}));
    const Generator reduced = reduce_spin_symmetric(full);
    UniformSettings two;
    two.n_qubits = 2;
    const Generator full2 = assemble(make_uniform(two));
    const Generator reduced2 = reduce_spin_symmetric(full2);
    const bool ok = full.dimension() == 1024 && reduced.dimension() == 768 && full2.dimension() == 64 &&
                    reduced2.dimension() == 48;
    checks.push_back({"equation_count", ok, static_cast<double>(reduced.dimension()), 768.0,
                      "N=4 " + std::to_string(reduced.dimension()) + "/" + std::to_string(full.dimension()) +
                          ", N=2 " + std::to_string(reduced2.dimension()) + "/" +
                          std::to_string(full2.dimension())});
  }

  {
    RunConfig cfg;
    cfg.state = "psi2";
    cfg.zeta = 0.6;
    cfg.t_end = 5.0;
    SimulationSpec spec = make_spec(cfg);
    spec.rk4.kernel = Kernel::banded;
    spec.layout = SectorLayout::spin_reduced;
    const auto reduced = simulate(spec);
    spec.layout = SectorLayout::full;
    const auto full = simulate(spec);
    double worst = 0.0;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      worst = std::max(worst, std::abs(reduced[k].fidelity - full[k].fidelity));
    }
    checks.push_back(make_check("reduction_equivalence", worst, 1e-10, "psi2, zeta=0.6, t<=5"));
  }

  {
    UniformSettings two;
    two.n_qubits = 2;
    two.zeta = 0.2;
    const Generator g = assemble(make_uniform(two));
    const StateVector v0 = flatten(to_density(make_bell(BellState::d)), SectorLayout::full);
    Rk4Options rk;
    rk.sample_interval = 0.0;
    const StateVector rk4 = evolve_rk4(g, v0, rk).states.back();
    const StateVector exact = evolve_expm(g, v0, rk.t_end);
    checks.push_back(make_check("oracle_equivalence_n2", (rk4 - exact).cwiseAbs().maxCoeff(), 1e-8,
                                "bell-d, zeta=0.2, t=50"));
  }

  {
    RunConfig cfg;
    cfg.n_qubits = 2;
    cfg.state = "bell-c";
    cfg.zeta = 0.0;
    double worst = 0.0;
    for (const auto& r : simulate(make_spec(cfg))) worst = std::max(worst, std::abs(r.fidelity - 1.0));
    checks.push_back(make_check("decoupled_limit", worst, 1e-8, "bell-c, zeta=0, t<=50"));
  }

  {
    double df_worst = 0.0, b_worst = 0.0;
    const std::vector<QubitState> df = {make_df4(DfState::psi1), make_df4(DfState::psi2),
                                        make_df4(DfState::psi3), make_bell(BellState::c),
                                        make_bell(BellState::d)};
    const CMatrix rho_b = reduce_qubits(to_density(make_bell(BellState::b)));
    for (double gamma_d : {0.1, 1.0}) {
      for (int k = 0; k <= 50; ++k) {
        const double t = 0.1 * k;
        for (const auto& psi : df) {
          const CMatrix rho0 = reduce_qubits(to_density(psi));
          df_worst = std::max(df_worst, std::abs(fidelity(rho0, collective_dephasing(rho0, gamma_d, t)) - 1.0));
        }
        const double f = fidelity(rho_b, collective_dephasing(rho_b, gamma_d, t));
        b_worst = std::max(b_worst, std::abs(f - 0.5 * (1.0 + std::exp(-8.0 * gamma_d * t))));
      }
    }
    checks.push_back(make_check("df_baseline_certification", df_worst, 1e-14, "psi1-3, bell-c, bell-d"));
    checks.push_back(make_check("bell_b_dephasing_closed_form", b_worst, 1e-10));
  }
  return report;
}

void print_report(std::ostream& os, const VerifyReport& report) {
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " measured=" << format_number(c.measured)
       << " tolerance=" << format_number(c.tolerance);
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const CheckResult& c) { return !c.passed; });
  os << (failed == 0 ? "all " + std::to_string(report.checks.size()) + " checks passed"
                     : std::to_string(failed) + " of " + std::to_string(report.checks.size()) +
                           " checks failed")
     << '\n';
}

}  // namespace qdf
