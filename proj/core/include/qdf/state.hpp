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

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdf/sector_dm.hpp"
#include "qdf/types.hpp"

namespace qdf {

/// Pure qubit state over the configuration basis (index as in QubitConfig).
struct QubitState {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

enum class DfState { psi1, psi2, psi3 };
enum class BellState { a, b, c, d };

/// How logical kets |0>, |1> map onto charge states.
struct LogicalEncoding {
  bool zero_is_down = true;
};

/// Basis index of a logical ket written as a bit string, leftmost character
/// = qubit 1. Ordering is little-endian in the qubit index (qubit 1 is bit 0).
std::size_t ket_index(std::string_view bits, LogicalEncoding enc = {});

/// Four-qubit decoherence-free states.
///
/// psi1 = (|01> - |10>)_(12) (x) (|01> - |10>)_(34) / 2
/// psi2 = (2|0011> - |0101> - |0110> - |1001> - |1010> + 2|1100>) / (2 sqrt 3)
/// psi3 = psi1 with qubit labels (1,2,3,4) -> (1,4,3,2), i.e. singlets on the
///        pairs (1,4) and (3,2).
QubitState make_df4(DfState which, LogicalEncoding enc = {});

/// Two-qubit Bell states over (down-down, down-up, up-down, up-up):
/// a = (dd + uu)/sqrt2, b = (dd - uu)/sqrt2, c = (du + ud)/sqrt2,
/// d = (du - ud)/sqrt2.
QubitState make_bell(BellState which);

/// Tensor product of single-qubit states, each given as (down, up)
/// amplitudes. The result is normalized; throws on a zero factor.
QubitState make_product(std::span<const std::array<Complex, 2>> qubits);

/// Wraps raw amplitudes. Throws std::invalid_argument unless the length is a
/// power of two and the norm is 1 within 1e-12.
QubitState make_state(std::vector<Complex> amplitudes);

/// Named states: "psi1".."psi3", "bell-a".."bell-d", or
/// "custom:<re,im;re,im;...>" with 2^N amplitude pairs (normalized on parse).
QubitState parse_named_state(std::string_view name, LogicalEncoding enc = {});

/// The names accepted by parse_named_state, excluding custom.
std::span<const std::string_view> named_states();

/// Island initially empty: rho_a = |psi><psi|, all other sectors zero.
SectorDM to_density(const QubitState& state);

}  // namespace qdf
