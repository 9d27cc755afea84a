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

#include <gtest/gtest.h>

#include "qdf/csv.hpp"
#include "qdf/experiment.hpp"

namespace qdf {
namespace {

// F(t = 50) for psi2 at zeta = 0.2, checked against the dense matrix
// exponential by the acceptance suite.
constexpr double kGoldenPsi2Weak = 0.734445236898;

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(-2.5e-17), "-2.5e-17");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(123456789012345.0), "1.23456789012e+14");
}

TEST(Table, CsvLayout) {
  Table t;
  t.header = {"t", "F"};
  t.rows = {{0.0, 1.0}, {0.5, 0.25}};
  EXPECT_EQ(t.to_csv(), "t,F\n0,1\n0.5,0.25\n");
  EXPECT_EQ(t.column("F"), 1u);
  EXPECT_THROW(t.column("G"), std::out_of_range);
}

TEST(RunSingle, ColumnsAndSampleCount) {
  RunConfig cfg;
  cfg.n_qubits = 2;
  cfg.state = "bell-b";
  cfg.t_end = 1.0;
  const Table t = run_single(cfg);
  EXPECT_EQ(t.header, (std::vector<std::string>{"t", "F", "trace_err", "pop_a", "pop_b", "pop_c"}));
  ASSERT_EQ(t.rows.size(), 11u);
  EXPECT_NEAR(t.rows.front()[1], 1.0, 1e-15);
  EXPECT_NEAR(t.rows.front()[3], 1.0, 1e-15);
  for (const auto& r : t.rows) {
    EXPECT_LT(std::abs(r[2]), 1e-12);
    EXPECT_NEAR(r[3] + r[4] + r[5], 1.0, 1e-12);
  }
}

TEST(RunSingle, DeterministicBytes) {
  RunConfig cfg;
  cfg.n_qubits = 2;
  cfg.state = "bell-c";
  cfg.zeta = 0.6;
  cfg.t_end = 5.0;
  EXPECT_EQ(run_single(cfg).to_csv(), run_single(cfg).to_csv());
}

TEST(RunSingle, DecoupledBellCStaysAtOne) {
  RunConfig cfg;
  cfg.n_qubits = 2;
  cfg.state = "bell-c";
  cfg.zeta = 0.0;
  for (const auto& r : run_single(cfg).rows) EXPECT_NEAR(r[1], 1.0, 1e-8) << r[0];
}

TEST(RunSingle, GoldenPsiTwoWeakMeasurement) {
  RunConfig cfg;
  cfg.state = "psi2";
  cfg.zeta = 0.2;
  cfg.sample_interval = 0.0;
  const Table t = run_single(cfg);
  EXPECT_EQ(t.rows.back()[0], 50.0);
  EXPECT_NEAR(t.rows.back()[1], kGoldenPsi2Weak, 1e-9);
}

TEST(RunSingle, NonUniformityLowersPsiOneFidelity) {
  RunConfig cfg;
  cfg.state = "psi1";
  cfg.zeta = 0.2;
  cfg.scenario = "case_ii";
  cfg.sample_interval = 0.0;
  const double uniform = run_single(cfg).rows.back()[1];
  cfg.eta = 0.05;
  const double perturbed = run_single(cfg).rows.back()[1];
  EXPECT_LT(perturbed, uniform);
}

TEST(Simulate, SectorPopulationsStayPhysical) {
  RunConfig cfg;
  cfg.n_qubits = 2;
  cfg.state = "bell-b";
  cfg.zeta = 0.6;
  cfg.primed_scale = 0.4;
  for (const auto& r : simulate(make_spec(cfg))) {
    for (double pop : {r.pop_a, r.pop_b, r.pop_c}) {
      EXPECT_GE(pop, -1e-9);
      EXPECT_LE(pop, 1.0 + 1e-9);
    }
    EXPECT_LT(r.hermiticity, 1e-12);
  }
}

TEST(Simulate, LayoutsAgree) {
  RunConfig cfg;
  cfg.state = "psi3";
  cfg.zeta = 0.6;
  cfg.t_end = 2.0;
  SimulationSpec spec = make_spec(cfg);
  const auto reduced = simulate(spec);
  spec.layout = SectorLayout::full;
  const auto full = simulate(spec);
  ASSERT_EQ(reduced.size(), full.size());
  for (std::size_t k = 0; k < full.size(); ++k) {
    EXPECT_NEAR(reduced[k].fidelity, full[k].fidelity, 1e-12);
    EXPECT_NEAR(reduced[k].pop_b, full[k].pop_b, 1e-12);
  }
}

}  // namespace
}  // namespace qdf
