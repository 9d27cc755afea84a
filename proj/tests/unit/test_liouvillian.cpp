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

#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdf/liouvillian.hpp"
#include "qdf/state.hpp"

namespace qdf {
namespace {

ModelParams rough_model() {
  UniformSettings s;
  s.epsilon = 0.4;
  s.j_coupling = 0.3;
  s.primed_scale = 1.5;
  ModelParams p = make_uniform(s);
  p.omega = {2.0, 1.3, 0.0, 2.4};
  p.epsilon = {0.4, -0.6, 0.1, 0.9};
  p.j_coupling = {0.3, -0.2, 0.5};
  p.gamma0 = {1.0, 0.9, 1.2, 0.8};
  p.delta_gamma = {0.2, -0.3, 0.5, 0.1};
  return p;
}

std::vector<ModelParams> models() {
  std::vector<ModelParams> out;
  UniformSettings two;
  two.n_qubits = 2;
  out.push_back(make_uniform(two));
  two.barriers = BarrierLayout::shared;
  two.zeta = 0.6;
  out.push_back(make_uniform(two));
  out.push_back(make_uniform({}));
  out.push_back(rough_model());
  return out;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Assemble, MatchesDenseSectorEquationOracle) {
  for (const auto& p : models()) {
    const Generator g = assemble(p);
    EXPECT_EQ(g.layout(), SectorLayout::full);
    EXPECT_LT(max_abs(g.to_dense() - oracle::dense_generator(p, false)), 1e-14) << p.n_qubits;
  }
}

TEST(Reduce, MatchesReducedEquationOracle) {
  for (const auto& p : models()) {
    const Generator r = reduce_spin_symmetric(assemble(p));
    EXPECT_EQ(r.layout(), SectorLayout::spin_reduced);
    EXPECT_LT(max_abs(r.to_dense() - oracle::dense_generator(p, true)), 1e-14) << p.n_qubits;
  }
}

TEST(Reduce, EquationCounts) {
  EXPECT_EQ(assemble(make_uniform({})).dimension(), 1024u);
  EXPECT_EQ(reduce_spin_symmetric(assemble(make_uniform({}))).dimension(), 768u);
  UniformSettings two;
  two.n_qubits = 2;
  EXPECT_EQ(assemble(make_uniform(two)).dimension(), 64u);
  EXPECT_EQ(reduce_spin_symmetric(assemble(make_uniform(two))).dimension(), 48u);
}

TEST(Reduce, CommutesWithSpinSum) {
  // P L v = L_r P v for spin-symmetric v, with P summing the two b sectors.
  const ModelParams p = rough_model();
  const Generator full = assemble(p);
  const Generator red = reduce_spin_symmetric(full);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n01;
  SectorDM dm(4);
  for (auto& m : dm.rho) m = CMatrix::NullaryExpr(16, 16, [&] { return Complex(n01(rng), n01(rng)); });
  dm[Sector::b_dn] = dm[Sector::b_up];
  const StateVector lv = full.apply(flatten(dm, SectorLayout::full));
  SectorDM out = unflatten(lv, 4, SectorLayout::full);
  const StateVector projected = flatten(
      [&] {
        SectorDM s(4);
        s[Sector::a] = out[Sector::a];
        s[Sector::b_up] = s[Sector::b_dn] = 0.5 * (out[Sector::b_up] + out[Sector::b_dn]);
        s[Sector::c] = out[Sector::c];
        return s;
      }(),
      SectorLayout::spin_reduced);
  const StateVector direct = red.apply(flatten(dm, SectorLayout::spin_reduced));
  EXPECT_LT((projected - direct).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Reduce, RejectsAsymmetricGenerator) {
  const Generator g = assemble(make_uniform({}));
  std::vector<GeneratorEntry> entries(g.entries().begin(), g.entries().end());
  for (auto& e : entries) {
    if (e.row / 256 == 1 && e.row == e.col) {
      e.value += 0.1;
      break;
    }
  }
  EXPECT_THROW(reduce_spin_symmetric(Generator(4, SectorLayout::full, entries)), std::invalid_argument);
  EXPECT_THROW(reduce_spin_symmetric(reduce_spin_symmetric(g)), std::invalid_argument);
}

TEST(Invariants, TracePreservation) {
  for (const auto& p : models()) {
    const Generator g = assemble(p);
    EXPECT_LT(trace_preservation_defect(g), 1e-13);
    EXPECT_LT(trace_preservation_defect(reduce_spin_symmetric(g)), 1e-13);
  }
}

TEST(Invariants, ConjugationSymmetry) {
  for (const auto& p : models()) EXPECT_LT(conjugation_symmetry_defect(assemble(p)), 1e-14);
}

TEST(Invariants, HermiticityPreservation) {
  for (const auto& p : models()) {
    const Generator g = assemble(p);
    EXPECT_LT(hermiticity_preservation_defect(g), 1e-13);
    EXPECT_LT(hermiticity_preservation_defect(reduce_spin_symmetric(g)), 1e-13);
  }
}

TEST(Invariants, TraceDefectDetectsPerturbation) {
  const Generator g = assemble(make_uniform({}));
  std::vector<GeneratorEntry> entries(g.entries().begin(), g.entries().end());
  entries.front().value += 1e-3;  // row 0 is the a-sector population of AA
  EXPECT_GE(trace_preservation_defect(Generator(4, SectorLayout::full, entries)), 1e-3 - 1e-15);
}

TEST(Generator, ZeroZetaDecouplesDetectorFromQubits) {
  // With configuration-independent rates the populations of every sector
  // evolve identically for every configuration pair.
  const Generator g = assemble(make_uniform({.zeta = 0.0}));
  const auto dense = g.to_dense();
  const double gl = dense(0, 0).real();
  for (std::size_t z = 0; z < 16; ++z) EXPECT_DOUBLE_EQ(dense(z * 16 + z, z * 16 + z).real(), gl);
}

TEST(Generator, ApplyMatchesDense) {
  const Generator g = reduce_spin_symmetric(assemble(rough_model()));
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n01;
  StateVector x(static_cast<Eigen::Index>(g.dimension()));
  for (auto& v : x) v = Complex(n01(rng), n01(rng));
  EXPECT_LT((g.apply(x) - g.to_dense() * x).cwiseAbs().maxCoeff(), 1e-12);
  StateVector wrong(5);
  EXPECT_THROW(g.apply(wrong), std::invalid_argument);
}

TEST(Generator, DuplicateEntriesAreSummedAndZerosDropped) {
  const Generator g(1, SectorLayout::full,
                    {{0, 0, {1.0, 0.0}}, {0, 0, {2.0, 0.0}}, {1, 2, {0.0, 0.0}}, {3, 1, {0.0, 1.0}}});
  ASSERT_EQ(g.nonzeros(), 2u);
  EXPECT_EQ(g.entries()[0].value, Complex(3.0, 0.0));
  EXPECT_THROW(Generator(1, SectorLayout::full, {{16, 0, {1.0, 0.0}}}), std::out_of_range);
}

TEST(Generator, OmegaFlipsCarryPlusMinusI) {
  UniformSettings two;
  two.n_qubits = 2;
  const Generator g = assemble(make_uniform(two));
  const auto dense = g.to_dense();
  // d rho_a(A,A)/dt picks up -i W rho_a(C,A) from the flip of qubit 1 in z1.
  const auto aa = flat_index(4, 0, 0, 0);
  const auto ca = flat_index(4, 0, 1, 0);
  const auto ac = flat_index(4, 0, 0, 1);
  EXPECT_EQ(dense(aa, ca), Complex(0.0, -2.0));
  EXPECT_EQ(dense(aa, ac), Complex(0.0, 2.0));
}

TEST(Dump, MatchesGoldenTwoQubitGenerator) {
  UniformSettings two;
  two.n_qubits = 2;
  std::ostringstream os;
  write_dump(os, assemble(make_uniform(two)));
  std::ifstream in(std::string(QDF_GOLDEN_DIR) + "/generator_n2.txt");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(os.str(), golden.str());
}

TEST(Dump, LineFormat) {
  UniformSettings two;
  two.n_qubits = 2;
  std::ostringstream os;
  write_dump(os, assemble(make_uniform(two)));
  std::istringstream lines(os.str());
  std::string first;
  std::getline(lines, first);
  EXPECT_EQ(first.substr(0, 11), "a,A,A <- a,");
}

}  // namespace
}  // namespace qdf
