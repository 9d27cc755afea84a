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

#include <benchmark/benchmark.h>

#include "qdf/experiment.hpp"
#include "qdf/integrator.hpp"
#include "qdf/kernels.hpp"
#include "qdf/liouvillian.hpp"
#include "qdf/state.hpp"

namespace {

struct Fixture {
  qdf::Generator reduced;
  qdf::StateVector v0;

  explicit Fixture(int n_qubits) : reduced(build(n_qubits)) {
    v0 = qdf::flatten(qdf::to_density(initial(n_qubits)), qdf::SectorLayout::spin_reduced);
  }

  static qdf::Generator build(int n_qubits) {
    qdf::UniformSettings s;
    s.n_qubits = n_qubits;
    return qdf::reduce_spin_symmetric(qdf::assemble(qdf::make_uniform(s)));
  }

  static qdf::QubitState initial(int n_qubits) {
    return n_qubits == 4 ? qdf::make_df4(qdf::DfState::psi2) : qdf::make_bell(qdf::BellState::d);
  }
};

void BM_CsrApply(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  qdf::StateVector y(f.v0.size());
  for (auto _ : state) {
    f.reduced.apply(std::span<const qdf::Complex>(f.v0.data(), f.v0.size()), std::span<qdf::Complex>(y.data(), y.size()));
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.reduced.nonzeros()));
}
BENCHMARK(BM_CsrApply)->Arg(2)->Arg(4);

void BM_BandedApply(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  const qdf::BandedGenerator banded(f.reduced);
  const qdf::SplitVector x = qdf::SplitVector::from(f.v0);
  qdf::SplitVector y(x.size());
  for (auto _ : state) {
    banded.apply(x, y);
    benchmark::DoNotOptimize(y.re.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.reduced.nonzeros()));
}
BENCHMARK(BM_BandedApply)->Arg(2)->Arg(4);

void BM_HermitianPackedApply(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  const auto herm = qdf::HermitianGenerator::compile(f.reduced);
  if (!herm) {
    state.SkipWithError("generator does not admit the Hermitian kernel");
    return;
  }
  const qdf::SplitVector x = herm->pack(qdf::SplitVector::from(f.v0));
  qdf::SplitVector y(x.size());
  for (auto _ : state) {
    herm->apply_packed(x, y);
    benchmark::DoNotOptimize(y.re.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.reduced.nonzeros()));
}
BENCHMARK(BM_HermitianPackedApply)->Arg(2)->Arg(4);

void BM_Rk4UnitTime(benchmark::State& state) {
  const Fixture f(4);
  qdf::Rk4Options opt;
  opt.t_end = 1.0;
  opt.sample_interval = 0.0;
  opt.kernel = static_cast<qdf::Kernel>(state.range(0));
  for (auto _ : state) {
    qdf::integrate_rk4(f.reduced, f.v0, opt, [](double, const qdf::StateVector& v) { benchmark::DoNotOptimize(v.data()); });
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Rk4UnitTime)
    ->ArgName("kernel")
    ->Arg(static_cast<int>(qdf::Kernel::csr))
    ->Arg(static_cast<int>(qdf::Kernel::banded))
    ->Arg(static_cast<int>(qdf::Kernel::hermitian))
    ->Unit(benchmark::kMillisecond);

void BM_Psi2FullRun(benchmark::State& state) {
  qdf::RunConfig cfg;
  cfg.state = "psi2";
  cfg.sample_interval = 1.0;
  const qdf::SimulationSpec spec = qdf::make_spec(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(qdf::simulate(spec).back().fidelity);
}
BENCHMARK(BM_Psi2FullRun)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
