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

#include "qdf/state.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qdf {

namespace {

constexpr double kNormTolerance = 1e-12;

enum class QubitOrder { little_endian, big_endian };
constexpr QubitOrder kQubitOrder = QubitOrder::little_endian;

struct Term {
  const char* bits;
  double coeff;
};

QubitState from_terms(int n_qubits, std::span<const Term> terms, double scale, LogicalEncoding enc) {
  QubitState s;
  s.n_qubits = n_qubits;
  s.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  for (const auto& t : terms) {
    s.amplitudes[static_cast<Eigen::Index>(ket_index(t.bits, enc))] += t.coeff * scale;
  }
  return s;
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  while (first != last && *first == ' ') ++first;
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  while (ptr != last && *ptr == ' ') ++ptr;
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::size_t ket_index(std::string_view bits, LogicalEncoding enc) {
  const std::size_t n = bits.size();
  if (n == 0 || n > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("ket must have 1.." + std::to_string(kMaxQubits) + " qubits");
  }
  std::size_t index = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (bits[q] != '0' && bits[q] != '1') {
      throw std::invalid_argument("ket '" + std::string(bits) + "' is not a bit string");
    }
    const bool logical_one = bits[q] == '1';
    const bool up = enc.zero_is_down ? logical_one : !logical_one;
    if (!up) continue;
    const std::size_t bit = kQubitOrder == QubitOrder::little_endian ? q : n - 1 - q;
    index |= std::size_t{1} << bit;
  }
  return index;
}

QubitState make_df4(DfState which, LogicalEncoding enc) {
  switch (which) {
    case DfState::psi1: {
      static constexpr Term kTerms[] = {
          {"0101", 1.0}, {"0110", -1.0}, {"1001", -1.0}, {"1010", 1.0}};
      return from_terms(4, kTerms, 0.5, enc);
    }
    case DfState::psi2: {
      static constexpr Term kTerms[] = {{"0011", 2.0},  {"0101", -1.0}, {"0110", -1.0},
                                        {"1001", -1.0}, {"1010", -1.0}, {"1100", 2.0}};
      return from_terms(4, kTerms, 1.0 / (2.0 * std::sqrt(3.0)), enc);
    }
    case DfState::psi3: {
      // Relabel psi1: its positions (1,2,3,4) are carried by qubits (1,4,3,2).
      static constexpr int kCarrier[4] = {0, 3, 2, 1};
      const QubitState psi1 = make_df4(DfState::psi1, enc);
      QubitState out{4, Eigen::VectorXcd::Zero(16)};
      for (Eigen::Index src = 0; src < 16; ++src) {
        std::size_t dst = 0;
        for (int pos = 0; pos < 4; ++pos) {
          if ((src >> pos) & 1) dst |= std::size_t{1} << kCarrier[pos];
        }
        out.amplitudes[static_cast<Eigen::Index>(dst)] = psi1.amplitudes[src];
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown DF state");
}

QubitState make_bell(BellState which) {
  // Index: bit 0 = qubit 1, so down-up (qubit 2 up) is index 2.
  constexpr Eigen::Index kDD = 0, kDU = 2, kUD = 1, kUU = 3;
  const double r = 1.0 / std::sqrt(2.0);
  QubitState s{2, Eigen::VectorXcd::Zero(4)};
  switch (which) {
    case BellState::a: s.amplitudes[kDD] = r; s.amplitudes[kUU] = r; break;
    case BellState::b: s.amplitudes[kDD] = r; s.amplitudes[kUU] = -r; break;
    case BellState::c: s.amplitudes[kDU] = r; s.amplitudes[kUD] = r; break;
    case BellState::d: s.amplitudes[kDU] = r; s.amplitudes[kUD] = -r; break;
    default: throw std::invalid_argument("unknown Bell state");
  }
  return s;
}

QubitState make_product(std::span<const std::array<Complex, 2>> qubits) {
  const auto n = static_cast<int>(qubits.size());
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("product state: bad qubit count");
  QubitState s{n, Eigen::VectorXcd::Ones(Eigen::Index{1} << n)};
  for (int q = 0; q < n; ++q) {
    const auto& f = qubits[static_cast<std::size_t>(q)];
    const double norm = std::sqrt(std::norm(f[0]) + std::norm(f[1]));
    if (norm == 0.0) throw std::invalid_argument("product state: zero single-qubit factor");
    for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
      s.amplitudes[i] *= f[(i >> q) & 1] / norm;
    }
  }
  return s;
}

QubitState make_state(std::vector<Complex> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n < 2 || !std::has_single_bit(n) || n > (std::size_t{1} << kMaxQubits)) {
    throw std::invalid_argument("amplitude count must be 2^N with 1 <= N <= " +
                                std::to_string(kMaxQubits));
  }
  QubitState s;
  s.n_qubits = std::countr_zero(n);
  s.amplitudes = Eigen::Map<const Eigen::VectorXcd>(amplitudes.data(), static_cast<Eigen::Index>(n));
  if (std::abs(s.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized (norm " + std::to_string(s.norm()) + ")");
  }
  return s;
}

std::span<const std::string_view> named_states() {
  static constexpr std::string_view kNames[] = {"psi1",   "psi2",   "psi3",  "bell-a",
                                                "bell-b", "bell-c", "bell-d"};
  return kNames;
}

QubitState parse_named_state(std::string_view name, LogicalEncoding enc) {
  if (name == "psi1") return make_df4(DfState::psi1, enc);
  if (name == "psi2") return make_df4(DfState::psi2, enc);
  if (name == "psi3") return make_df4(DfState::psi3, enc);
  if (name == "bell-a") return make_bell(BellState::a);
  if (name == "bell-b") return make_bell(BellState::b);
  if (name == "bell-c") return make_bell(BellState::c);
  if (name == "bell-d") return make_bell(BellState::d);

  constexpr std::string_view kCustom = "custom:";
  if (name.starts_with(kCustom)) {
    std::string_view rest = name.substr(kCustom.size());
    std::vector<Complex> amps;
    while (!rest.empty()) {
      const auto semi = rest.find(';');
      const std::string_view item = rest.substr(0, semi);
      const auto comma = item.find(',');
      if (comma == std::string_view::npos) {
        throw std::invalid_argument("custom amplitude '" + std::string(item) +
                                    "' must be written re,im");
      }
      amps.emplace_back(parse_double(item.substr(0, comma)), parse_double(item.substr(comma + 1)));
      if (semi == std::string_view::npos) break;
      rest = rest.substr(semi + 1);
    }
    double norm2 = 0.0;
    for (const auto& a : amps) norm2 += std::norm(a);
    if (norm2 == 0.0) throw std::invalid_argument("custom state has zero norm");
    for (auto& a : amps) a /= std::sqrt(norm2);
    return make_state(std::move(amps));
  }
  throw std::invalid_argument("unknown state '" + std::string(name) + "'");
}

SectorDM to_density(const QubitState& state) {
  if (std::abs(state.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("to_density: state is not normalized");
  }
  SectorDM dm(state.n_qubits);
  dm[Sector::a] = state.amplitudes * state.amplitudes.adjoint();
  return dm;
}

}  // namespace qdf
