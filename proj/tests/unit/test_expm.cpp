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

#include <random>

#include <gtest/gtest.h>

#include "qdf/expm.hpp"
#include "qdf/types.hpp"

namespace qdf {
namespace {

Eigen::MatrixXcd random_matrix(Eigen::Index n, double scale, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n01;
  return Eigen::MatrixXcd::NullaryExpr(n, n, [&] { return scale * Complex(n01(rng), n01(rng)); });
}

// exp(A) through an eigendecomposition of a diagonalisable A.
Eigen::MatrixXcd eigen_oracle(const Eigen::MatrixXcd& a) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a);
  const Eigen::MatrixXcd& v = es.eigenvectors();
  const Eigen::VectorXcd e = es.eigenvalues().array().exp();
  return v * e.asDiagonal() * v.inverse();
}

double rel_error(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& ref) {
  return (x - ref).norm() / ref.norm();
}

TEST(Expm, ZeroMatrixGivesIdentity) {
  EXPECT_EQ(expm(Eigen::MatrixXcd::Zero(5, 5)), Eigen::MatrixXcd::Identity(5, 5));
}

TEST(Expm, ScalarCases) {
  Eigen::MatrixXcd a(1, 1);
  a(0, 0) = Complex(-3.0, 2.0);
  EXPECT_NEAR(std::abs(expm(a)(0, 0) - std::exp(Complex(-3.0, 2.0))), 0.0, 1e-14);
}

TEST(Expm, PauliRotationClosedForm) {
  Eigen::MatrixXcd x(2, 2);
  x << 0, 1, 1, 0;
  const double t = 0.7;
  const Eigen::MatrixXcd u = expm(Complex(0.0, -t) * x);
  EXPECT_NEAR(std::abs(u(0, 0) - std::cos(t)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 1) - Complex(0.0, -std::sin(t))), 0.0, 1e-15);
}

TEST(Expm, MatchesEigendecompositionAcrossNormRanges) {
  // Norms chosen to exercise every Pade degree and the squaring branch.
  const double scales[] = {1e-4, 5e-3, 0.05, 0.2, 0.5, 2.0, 20.0};
  unsigned seed = 1;
  for (double s : scales) {
    const Eigen::MatrixXcd a = random_matrix(12, s, seed++);
    EXPECT_LT(rel_error(expm(a), eigen_oracle(a)), 1e-12) << s;
  }
}

TEST(Expm, SemigroupProperty) {
  const Eigen::MatrixXcd a = random_matrix(10, 0.4, 42);
  const Eigen::MatrixXcd lhs = expm(a * 3.5);
  const Eigen::MatrixXcd rhs = expm(a * 2.0) * expm(a * 1.5);
  EXPECT_LT(rel_error(lhs, rhs), 1e-11);
}

TEST(Expm, NonSquareRejected) { EXPECT_THROW(expm(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument); }

}  // namespace
}  // namespace qdf
