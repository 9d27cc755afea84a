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

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdf/liouvillian.hpp"
#include "qdf/types.hpp"

namespace qdf {

/// Which matrix-vector kernel drives the integration.
enum class Kernel {
  automatic,  // hermitian when the generator and initial state allow, else banded
  csr,
  banded,
  hermitian,  // throws if unavailable
};

struct Rk4Options {
  double t_end = 50.0;
  double dt = 1e-3;
  /// Spacing of recorded samples; must be a whole number of steps. Zero means
  /// record only t = 0 and t = t_end.
  double sample_interval = 0.1;
  Kernel kernel = Kernel::automatic;
};

/// Raised when the state stops being finite.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(std::int64_t step, double max_entry, const std::string& what)
      : std::runtime_error(what), step_(step), max_entry_(max_entry) {}

  std::int64_t step() const noexcept { return step_; }
  double max_entry() const noexcept { return max_entry_; }

 private:
  std::int64_t step_;
  double max_entry_;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
};

/// Called at every sample with (t, state). Sample times are k * interval
/// exactly, computed by multiplication.
using SampleObserver = std::function<void(double, const StateVector&)>;

/// Classical fixed-step fourth-order Runge-Kutta for dv/dt = L v. Throws
/// std::invalid_argument for dt <= 0, negative t_end, or a sample interval
/// that is not a whole number of steps; throws IntegrationError on NaN/Inf.
void integrate_rk4(const Generator& g, const StateVector& v0, const Rk4Options& options,
                   const SampleObserver& observer);

Trajectory evolve_rk4(const Generator& g, const StateVector& v0, const Rk4Options& options);

/// Largest dimension evolve_expm accepts.
inline constexpr std::size_t kMaxDenseDimension = 4096;

/// exp(L t) v0 on the dense matrix; the independent reference for RK4.
StateVector evolve_expm(const Generator& g, const StateVector& v0, double t);

}  // namespace qdf
