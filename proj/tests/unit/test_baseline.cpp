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

#include <cmath>

#include <gtest/gtest.h>

#include "qdf/analysis.hpp"
#include "qdf/baseline.hpp"
#include "qdf/state.hpp"

namespace qdf {
namespace {

CMatrix projector(const QubitState& s) { return s.amplitudes * s.amplitudes.adjoint(); }

TEST(TotalSpin, Values) {
  EXPECT_EQ(total_spin(0, 4), -4);
  EXPECT_EQ(total_spin(0b1111, 4), 4);
  EXPECT_EQ(total_spin(0b0101, 4), 0);
  EXPECT_EQ(total_spin(0b01, 2), 0);
}

TEST(CollectiveDephasing, DecoherenceFreeStatesAreUntouched) {
  const QubitState states[] = {make_df4(DfState::psi1), make_df4(DfState::psi2), make_df4(DfState::psi3),
                               make_bell(BellState::c), make_bell(BellState::d)};
  for (const auto& psi : states) {
    const CMatrix rho0 = projector(psi);
    for (double gamma : {0.1, 1.0, 10.0}) {
      for (double t : {0.0, 0.5, 5.0, 50.0}) {
        const CMatrix rho = collective_dephasing(rho0, gamma, t);
        EXPECT_EQ(rho, rho0);
        EXPECT_NEAR(fidelity(rho0, rho), 1.0, 1e-15);
      }
    }
  }
}

TEST(CollectiveDephasing, BellBMatchesFourByFourArithmetic) {
  // rho_b has entries +-1/2 on {AA, AD, DA, DD}; only AD and DA decay, with
  // (S_A - S_D)^2 / 2 = 8, so F = 1/4 + 1/4 + 2 * (1/4) e^{-8 g t}.
  const CMatrix rho0 = projector(make_bell(BellState::b));
  for (double gamma : {0.1, 1.0}) {
    for (double t : {0.0, 0.05, 0.3, 2.0}) {
      const double expected = 0.5 * (1.0 + std::exp(-8.0 * gamma * t));
      EXPECT_NEAR(fidelity(rho0, collective_dephasing(rho0, gamma, t)), expected, 1e-15);
    }
  }
}

TEST(CollectiveDephasing, DampingFactorsInUnitInterval) {
  const CMatrix ones = CMatrix::Ones(16, 16);
  const CMatrix out = collective_dephasing(ones, 0.7, 1.3);
  for (Eigen::Index i = 0; i < 16; ++i) {
    EXPECT_EQ(out(i, i), Complex(1.0));
    for (Eigen::Index j = 0; j < 16; ++j) {
      EXPECT_GT(out(i, j).real(), 0.0);
      EXPECT_LE(out(i, j).real(), 1.0);
    }
  }
}

TEST(CollectiveDephasing, Errors) {
  const CMatrix rho = CMatrix::Identity(4, 4) / 4.0;
  EXPECT_THROW(collective_dephasing(rho, -1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(collective_dephasing(rho, 1.0, -1.0), std::invalid_argument);
  EXPECT_THROW(collective_dephasing(CMatrix::Identity(3, 3), 1.0, 1.0), std::invalid_argument);
}

}  // namespace
}  // namespace qdf
