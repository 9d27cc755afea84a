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

#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdf/model.hpp"

namespace qdf {
namespace {

TEST(QubitConfig, IndexMatchesSpinBits) {
  const std::vector<int> spins = {1, -1, -1, 1};
  const QubitConfig z = QubitConfig::from_spins(spins);
  EXPECT_EQ(z.index(), 0b1001u);
  EXPECT_EQ(z.spins(), spins);
  EXPECT_EQ(z.spin(0), 1);
  EXPECT_EQ(z.spin(1), -1);
}

TEST(QubitConfig, IndexRoundTripsForEveryConfiguration) {
  for (std::uint32_t i = 0; i < 16; ++i) {
    const QubitConfig z(4, i);
    EXPECT_EQ(QubitConfig::from_spins(z.spins()), z);
  }
}

TEST(QubitConfig, RejectsBadInput) {
  EXPECT_THROW(QubitConfig(2, 4), std::out_of_range);
  EXPECT_THROW(QubitConfig(0, 0), std::invalid_argument);
  const std::vector<int> bad = {1, 0};
  EXPECT_THROW(QubitConfig::from_spins(bad), std::invalid_argument);
}

TEST(QubitConfig, PairLabels) {
  EXPECT_EQ(QubitConfig(2, 0b00).label(), "A");
  EXPECT_EQ(QubitConfig(2, 0b10).label(), "B");  // qubit 2 up
  EXPECT_EQ(QubitConfig(2, 0b01).label(), "C");  // qubit 1 up
  EXPECT_EQ(QubitConfig(2, 0b11).label(), "D");
  EXPECT_EQ(QubitConfig(4, 0).label(), "AA");
  EXPECT_EQ(QubitConfig(4, 0b1111).label(), "DD");
}

TEST(Flip, TwoQubitExamples) {
  const QubitConfig a(2, 0);
  EXPECT_EQ(flip(a, 0).label(), "C");
  EXPECT_EQ(flip(a, 1).label(), "B");
}

TEST(Flip, ThirdQubitChangesSecondPair) {
  EXPECT_EQ(flip(QubitConfig(4, 0), 2).label(), "AC");
}

TEST(Flip, InvolutionAndRange) {
  for (std::uint32_t i = 0; i < 16; ++i) {
    const QubitConfig z(4, i);
    for (int q = 0; q < 4; ++q) EXPECT_EQ(flip(flip(z, q), q), z);
  }
  EXPECT_THROW(flip(QubitConfig(2, 0), 2), std::out_of_range);
  EXPECT_THROW(flip(QubitConfig(2, 0), -1), std::out_of_range);
}

TEST(Flip, ReachesWholeHypercube) {
  std::set<std::uint32_t> seen{0};
  std::vector<QubitConfig> frontier{QubitConfig(4, 0)};
  while (!frontier.empty()) {
    const QubitConfig z = frontier.back();
    frontier.pop_back();
    for (int q = 0; q < 4; ++q) {
      const QubitConfig next = flip(z, q);
      if (seen.insert(next.index()).second) frontier.push_back(next);
    }
  }
  EXPECT_EQ(seen.size(), 16u);
}

TEST(ConfigEnergy, ZeroBiasAndCoupling) {
  const ModelParams p = make_uniform({});
  for (std::uint32_t i = 0; i < 16; ++i) EXPECT_EQ(config_energy(QubitConfig(4, i), p), 0.0);
}

TEST(ConfigEnergy, TwoQubitDirectEvaluation) {
  UniformSettings s;
  s.n_qubits = 2;
  ModelParams p = make_uniform(s);
  p.epsilon = {1.0, 2.0};
  p.j_coupling = {0.5};
  const std::vector<int> spins = {1, -1};
  EXPECT_DOUBLE_EQ(config_energy(QubitConfig::from_spins(spins), p), -1.5);
}

TEST(ConfigEnergy, MatchesHamiltonianDiagonal) {
  UniformSettings s;
  s.j_coupling = 0.7;
  ModelParams p = make_uniform(s);
  p.epsilon = {0.3, -0.2, 0.5, 1.1};
  p.j_coupling = {0.7, -0.4, 0.25};
  const oracle::Mat h = oracle::hamiltonian(p);
  for (std::uint32_t i = 0; i < 16; ++i) {
    EXPECT_NEAR(config_energy(QubitConfig(4, i), p), h(i, i).real(), 1e-14) << i;
  }
}

TEST(ConfigEnergy, UniformChainAllDown) {
  UniformSettings s;
  s.j_coupling = 0.9;
  const ModelParams p = make_uniform(s);
  EXPECT_NEAR(config_energy(QubitConfig(4, 0), p), 3 * 0.9, 1e-15);
  EXPECT_NEAR(oracle::hamiltonian(p)(0, 0).real(), 3 * 0.9, 1e-15);
}

TEST(ConfigEnergy, GlobalFlipSymmetryWithoutBias) {
  UniformSettings s;
  s.j_coupling = 0.4;
  const ModelParams p = make_uniform(s);
  for (std::uint32_t i = 0; i < 16; ++i) {
    EXPECT_EQ(config_energy(QubitConfig(4, i), p), config_energy(QubitConfig(4, i ^ 0xFu), p));
  }
}

TEST(ModelParams, UniformDefaults) {
  const ModelParams p = make_uniform({});
  EXPECT_EQ(p.n_qubits, 4);
  EXPECT_EQ(p.omega, std::vector<double>(4, 2.0));
  EXPECT_EQ(p.delta_gamma, std::vector<double>(4, 0.2));
  EXPECT_EQ(p.left_barrier, (std::vector<int>{0, 1}));
  EXPECT_EQ(p.right_barrier, (std::vector<int>{2, 3}));
}

TEST(ModelParams, ValidationCatchesBrokenInvariants) {
  ModelParams p = make_uniform({});
  p.delta_gamma[1] = -1.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);

  p = make_uniform({});
  p.j_coupling.push_back(0.0);
  EXPECT_THROW(p.validate(), std::invalid_argument);

  p = make_uniform({});
  p.right_barrier = {1, 2, 3};  // overlaps the left barrier
  EXPECT_THROW(p.validate(), std::invalid_argument);

  p = make_uniform({});
  p.right_barrier = {2};  // qubit 4 on neither barrier
  EXPECT_THROW(p.validate(), std::invalid_argument);

  p = make_uniform({});
  p.left_barrier.clear();
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(ModelParams, SharedLayoutIsValid) {
  UniformSettings s;
  s.n_qubits = 2;
  s.barriers = BarrierLayout::shared;
  const ModelParams p = make_uniform(s);
  EXPECT_EQ(p.left_barrier, p.right_barrier);
  EXPECT_NO_THROW(p.validate());
}

TEST(Scenario, NamedCasesTouchExpectedQubits) {
  EXPECT_EQ(Scenario::named(ScenarioKind::case_i, 0.1).affected, (std::vector<int>{2}));
  EXPECT_EQ(Scenario::named(ScenarioKind::case_ii, 0.1).affected, (std::vector<int>{1, 2}));
  EXPECT_EQ(Scenario::named(ScenarioKind::case_iii, 0.1).affected, (std::vector<int>{3}));
  EXPECT_TRUE(Scenario::named(ScenarioKind::uniform, 0.1).affected.empty());
}

TEST(Scenario, NameRoundTrip) {
  for (auto k : {ScenarioKind::uniform, ScenarioKind::case_i, ScenarioKind::case_ii, ScenarioKind::case_iii,
                 ScenarioKind::custom}) {
    EXPECT_EQ(parse_scenario_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_scenario_kind("case_iv"), std::invalid_argument);
}

TEST(Scenario, CaseOneFivePercent) {
  const ModelParams base = make_uniform({});
  const ModelParams p = apply_scenario(base, Scenario::named(ScenarioKind::case_i, 0.05));
  EXPECT_DOUBLE_EQ(p.omega[2], 1.9);
  EXPECT_DOUBLE_EQ(p.epsilon[2], 0.05);
  EXPECT_DOUBLE_EQ(p.gamma0[2] + p.delta_gamma[2], 0.95 * 1.2);
  EXPECT_DOUBLE_EQ(p.gamma0[2] - p.delta_gamma[2], 0.95 * 0.8);
  for (int q : {0, 1, 3}) {
    EXPECT_EQ(p.omega[q], base.omega[q]);
    EXPECT_EQ(p.epsilon[q], base.epsilon[q]);
    EXPECT_EQ(p.gamma0[q], base.gamma0[q]);
    EXPECT_EQ(p.delta_gamma[q], base.delta_gamma[q]);
  }
}

TEST(Scenario, CaseTwoLeavesOuterQubitsBitwiseEqual) {
  const ModelParams base = make_uniform({});
  const ModelParams p = apply_scenario(base, Scenario::named(ScenarioKind::case_ii, 0.05));
  EXPECT_DOUBLE_EQ(p.omega[1], 1.9);
  EXPECT_DOUBLE_EQ(p.omega[2], 1.9);
  for (int q : {0, 3}) {
    EXPECT_EQ(p.omega[q], base.omega[q]);
    EXPECT_EQ(p.gamma0[q], base.gamma0[q]);
  }
}

TEST(Scenario, ZeroEtaIsIdentity) {
  UniformSettings s;
  s.epsilon = 0.3;
  const ModelParams base = make_uniform(s);
  for (auto k : {ScenarioKind::case_i, ScenarioKind::case_ii, ScenarioKind::case_iii}) {
    const ModelParams p = apply_scenario(base, Scenario::named(k, 0.0));
    EXPECT_EQ(p.omega, base.omega);
    EXPECT_EQ(p.epsilon, base.epsilon);
    EXPECT_EQ(p.gamma0, base.gamma0);
    EXPECT_EQ(p.delta_gamma, base.delta_gamma);
  }
}

TEST(Scenario, UniformIgnoresEta) {
  const ModelParams base = make_uniform({});
  const ModelParams p = apply_scenario(base, Scenario::named(ScenarioKind::uniform, 0.3));
  EXPECT_EQ(p.omega, base.omega);
  EXPECT_EQ(p.epsilon, base.epsilon);
}

TEST(Scenario, Errors) {
  const ModelParams base = make_uniform({});
  EXPECT_THROW(apply_scenario(base, Scenario::named(ScenarioKind::case_i, 1.0)), std::invalid_argument);
  EXPECT_THROW(apply_scenario(base, Scenario::named(ScenarioKind::case_i, -0.1)), std::invalid_argument);
  EXPECT_THROW(apply_scenario(base, Scenario::custom({4}, 0.1)), std::out_of_range);
  UniformSettings two;
  two.n_qubits = 2;
  EXPECT_THROW(apply_scenario(make_uniform(two), Scenario::named(ScenarioKind::case_iii, 0.1)),
               std::out_of_range);
}

}  // namespace
}  // namespace qdf
