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

#include "qdf/integrator.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "qdf/expm.hpp"
#include "qdf/kernels.hpp"

namespace qdf {

namespace {

constexpr double kHermitianEntryTolerance = 1e-12;
constexpr std::int64_t kFiniteCheckEvery = 1000;

std::int64_t whole_steps(double span, double dt, const char* what) {
  const double ratio = span / dt;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
    std::ostringstream msg;
    msg << what << " (" << span << ") is not a whole number of steps of dt=" << dt;
    throw std::invalid_argument(msg.str());
  }
  return static_cast<std::int64_t>(rounded);
}

void check_finite(const SplitVector& x, std::int64_t step) {
  double worst = 0.0;
  bool finite = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double m = std::max(std::abs(x.re[i]), std::abs(x.im[i]));
    if (!std::isfinite(x.re[i]) || !std::isfinite(x.im[i])) finite = false;
    if (!(m <= worst)) worst = m;
  }
  if (!finite) {
    std::ostringstream msg;
    msg << "integration produced a non-finite state at step " << step << " (max |entry| " << worst
        << ")";
    throw IntegrationError(step, worst, msg.str());
  }
}

// y = L x through the selected kernel. The Hermitian kernel integrates the
// packed upper triangles, so the working vector is shorter than the generator.
class Operator {
 public:
  Operator(const Generator& g, Kernel kernel, SplitVector& x0) : g_(g) {
    if (kernel == Kernel::automatic || kernel == Kernel::hermitian) {
      const bool hermitian_input =
          sector_hermiticity_defect(x0, g.qubit_dim()) <= kHermitianEntryTolerance;
      if (hermitian_input) hermitian_ = HermitianGenerator::compile(g);
      if (hermitian_) {
        make_hermitian(x0, g.qubit_dim());
        x0 = hermitian_->pack(x0);
        return;
      }
      if (kernel == Kernel::hermitian) {
        throw std::invalid_argument(
            "hermitian kernel requested but the generator or initial state does not qualify");
      }
      kernel = Kernel::banded;
    }
    if (kernel == Kernel::banded) {
      banded_.emplace(g);
    } else {
      csr_in_.resize(g.dimension());
      csr_out_.resize(g.dimension());
    }
  }

  StateVector to_state(const SplitVector& x) {
    if (!hermitian_) return x.to_state();
    hermitian_->unpack(x, unpacked_);
    return unpacked_.to_state();
  }

  void operator()(const SplitVector& x, SplitVector& y) {
    if (hermitian_) {
      hermitian_->apply_packed(x, y);
    } else if (banded_) {
      banded_->apply(x, y);
    } else {
      for (std::size_t i = 0; i < x.size(); ++i) csr_in_[i] = Complex(x.re[i], x.im[i]);
      g_.apply(csr_in_, csr_out_);
      for (std::size_t i = 0; i < y.size(); ++i) {
        y.re[i] = csr_out_[i].real();
        y.im[i] = csr_out_[i].imag();
      }
    }
  }

 private:
  const Generator& g_;
  std::optional<HermitianGenerator> hermitian_;
  std::optional<BandedGenerator> banded_;
  std::vector<Complex> csr_in_;
  std::vector<Complex> csr_out_;
  SplitVector unpacked_;
};

}  // namespace

void integrate_rk4(const Generator& g, const StateVector& v0, const Rk4Options& options,
                   const SampleObserver& observer) {
  if (!(options.dt > 0.0) || !std::isfinite(options.dt)) {
    throw std::invalid_argument("dt must be positive");
  }
  if (!(options.t_end >= 0.0) || !std::isfinite(options.t_end)) {
    throw std::invalid_argument("t_end must be non-negative");
  }
  if (options.sample_interval < 0.0) {
    throw std::invalid_argument("sample_interval must be non-negative");
  }
  if (static_cast<std::size_t>(v0.size()) != g.dimension()) {
    throw std::invalid_argument("initial state dimension does not match the generator");
  }

  const std::int64_t total = whole_steps(options.t_end, options.dt, "t_end");
  const std::int64_t per_sample =
      options.sample_interval > 0.0
          ? whole_steps(options.sample_interval, options.dt, "sample_interval")
          : 0;
  if (options.sample_interval > 0.0 && per_sample == 0) {
    throw std::invalid_argument("sample_interval is shorter than dt");
  }

  SplitVector x = SplitVector::from(v0);
  Operator op(g, options.kernel, x);
  check_finite(x, 0);

  const std::size_t n = x.size();
  SplitVector k(n), tmp(n), acc(n);
  const double h = options.dt;
  const double h2 = 0.5 * h, h3 = h / 3.0, h6 = h / 6.0;

  auto emit = [&](double t) { observer(t, op.to_state(x)); };
  emit(0.0);

  std::int64_t sample_index = 0;
  for (std::int64_t step = 1; step <= total; ++step) {
    op(x, k);
    for (std::size_t i = 0; i < n; ++i) {
      acc.re[i] = x.re[i] + h6 * k.re[i];
      acc.im[i] = x.im[i] + h6 * k.im[i];
      tmp.re[i] = x.re[i] + h2 * k.re[i];
      tmp.im[i] = x.im[i] + h2 * k.im[i];
    }
    op(tmp, k);
    for (std::size_t i = 0; i < n; ++i) {
      acc.re[i] += h3 * k.re[i];
      acc.im[i] += h3 * k.im[i];
      tmp.re[i] = x.re[i] + h2 * k.re[i];
      tmp.im[i] = x.im[i] + h2 * k.im[i];
    }
    op(tmp, k);
    for (std::size_t i = 0; i < n; ++i) {
      acc.re[i] += h3 * k.re[i];
      acc.im[i] += h3 * k.im[i];
      tmp.re[i] = x.re[i] + h * k.re[i];
      tmp.im[i] = x.im[i] + h * k.im[i];
    }
    op(tmp, k);
    for (std::size_t i = 0; i < n; ++i) {
      x.re[i] = acc.re[i] + h6 * k.re[i];
      x.im[i] = acc.im[i] + h6 * k.im[i];
    }

    const bool on_grid = per_sample > 0 && step % per_sample == 0;
    if (on_grid || step == total || step % kFiniteCheckEvery == 0) check_finite(x, step);
    if (on_grid) {
      ++sample_index;
      emit(static_cast<double>(sample_index) * options.sample_interval);
    } else if (step == total) {
      emit(options.t_end);
    }
  }
}

Trajectory evolve_rk4(const Generator& g, const StateVector& v0, const Rk4Options& options) {
  Trajectory out;
  integrate_rk4(g, v0, options, [&](double t, const StateVector& v) {
    out.times.push_back(t);
    out.states.push_back(v);
  });
  return out;
}

StateVector evolve_expm(const Generator& g, const StateVector& v0, double t) {
  if (g.dimension() > kMaxDenseDimension) {
    throw std::invalid_argument("evolve_expm: dimension " + std::to_string(g.dimension()) +
                                " exceeds the dense limit " + std::to_string(kMaxDenseDimension));
  }
  if (static_cast<std::size_t>(v0.size()) != g.dimension()) {
    throw std::invalid_argument("evolve_expm: initial state dimension mismatch");
  }
  if (t == 0.0) return v0;
  const Eigen::MatrixXcd lt = g.to_dense() * t;
  return expm(lt) * v0;
}

}  // namespace qdf
