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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace qdf {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major so that data() enumerates (z1, z2) with z2
/// fastest. The flat Liouville-space layout relies on this.
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Flat Liouville-space state vector (see SectorLayout for the index map).
using StateVector = Eigen::VectorXcd;

/// Energies, rates and times are all expressed in units of the bare
/// tunneling rate; this is the value of that unit.
inline constexpr double kGammaUnit = 1.0;

inline constexpr int kMaxQubits = 6;

}  // namespace qdf
