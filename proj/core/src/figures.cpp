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

#include "qdf/figures.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qdf/experiment.hpp"

namespace qdf {
namespace {

constexpr std::array<double, 6> kEtaGrid = {0.0, 0.01, 0.02, 0.03, 0.04, 0.05};

RunConfig config_for(const std::string& state, double zeta) {
  RunConfig cfg;
  cfg.state = state;
  cfg.n_qubits = state.starts_with("bell-") ? 2 : 4;
  cfg.zeta = zeta;
  return cfg;
}

std::string zeta_tag(double zeta) { return "zeta" + format_number(zeta); }

std::vector<Series> time_series_fig2() {
  std::vector<Series> out;
  for (const char* state : {"psi2", "psi3", "bell-b", "bell-c"}) {
    for (double zeta : {0.2, 0.6}) {
      out.push_back({std::string(state) + "_" + zeta_tag(zeta), config_for(state, zeta)});
    }
  }
  return out;
}

std::vector<Series> time_series_fig3(double eta, double zeta) {
  std::vector<Series> out;
  for (const char* state : {"psi1", "psi2", "psi3"}) {
    for (const char* scenario : {"case_i", "case_ii", "case_iii"}) {
      RunConfig cfg = config_for(state, zeta);
      cfg.scenario = scenario;
      cfg.eta = eta;
      out.push_back({std::string(state) + "_" + scenario, cfg});
    }
  }
  return out;
}

std::vector<Series> eta_sweep(const char* scenario) {
  std::vector<Series> out;
  for (const char* state : {"psi1", "psi2", "psi3"}) {
    for (double eta : kEtaGrid) {
      RunConfig cfg = config_for(state, 0.2);
      cfg.scenario = scenario;
      cfg.eta = eta;
      cfg.sample_interval = 0.0;
      out.push_back({state, cfg});
    }
  }
  return out;
}

bool is_sweep(FigureId id) { return id == FigureId::fig4a || id == FigureId::fig4b; }

std::string plot_script(const std::string& name, bool sweep) {
  std::ostringstream os;
  os << "# Plots " << name << ".csv; run from the directory holding the CSV.\n"
     << "import csv\n"
     << "import matplotlib.pyplot as plt\n\n"
     << "with open(\"" << name << ".csv\", newline=\"\") as f:\n"
     << "    rows = list(csv.reader(f))\n"
     << "header, data = rows[0], [[float(v) for v in r] for r in rows[1:]]\n"
     << "x = [r[0] for r in data]\n"
     << "for k, label in enumerate(header[1:], start=1):\n"
     << "    plt.plot(x, [r[k] for r in data], " << (sweep ? "marker=\"o\", " : "")
     << "label=label)\n"
     << "plt.xlabel(\"" << (sweep ? "eta" : "t (1/Gamma0)") << "\")\n"
     << "plt.ylabel(\"" << (sweep ? "F(t=50)" : "F(t)") << "\")\n"
     << "plt.legend()\n"
     << "plt.savefig(\"" << name << ".png\", dpi=150)\n";
  return os.str();
}

}  // namespace

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::fig2: return "fig2";
    case FigureId::fig3a: return "fig3a";
    case FigureId::fig3b: return "fig3b";
    case FigureId::fig4a: return "fig4a";
    case FigureId::fig4b: return "fig4b";
  }
  return "?";
}

FigureId parse_figure(std::string_view name) {
  for (FigureId id : {FigureId::fig2, FigureId::fig3a, FigureId::fig3b, FigureId::fig4a, FigureId::fig4b}) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown figure '" + std::string(name) + "'");
}

std::span<const double> eta_grid() { return kEtaGrid; }

std::vector<Series> figure_series(FigureId id) {
  switch (id) {
    case FigureId::fig2: return time_series_fig2();
    case FigureId::fig3a: return time_series_fig3(0.01, 0.6);
    case FigureId::fig3b: return time_series_fig3(0.05, 0.2);
    case FigureId::fig4a: return eta_sweep("case_ii");
    case FigureId::fig4b: return eta_sweep("case_iii");
  }
  throw std::invalid_argument("unknown figure");
}

int worker_threads() {
  if (const char* env = std::getenv("QDF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& task) {
  const auto workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

FigureOutput run_figure(FigureId id, int threads) {
  const std::vector<Series> series = figure_series(id);
  std::vector<std::vector<SampleRow>> results(series.size());
  parallel_for(series.size(), threads > 0 ? threads : worker_threads(),
               [&](std::size_t i) { results[i] = simulate(make_spec(series[i].config)); });

  FigureOutput out;
  out.name = std::string(to_string(id));
  out.plot_script = plot_script(out.name, is_sweep(id));
  Table& table = out.table;

  if (is_sweep(id)) {
    table.header = {"eta"};
    const std::size_t per_state = kEtaGrid.size();
    for (std::size_t s = 0; s < series.size(); s += per_state) table.header.push_back(series[s].name);
    for (std::size_t e = 0; e < per_state; ++e) {
      std::vector<double> row{kEtaGrid[e]};
      for (std::size_t s = 0; s < series.size(); s += per_state) {
        row.push_back(results[s + e].back().fidelity);
      }
      table.rows.push_back(std::move(row));
    }
    return out;
  }

  table.header = {"t"};
  for (const auto& s : series) table.header.push_back(s.name);
  const std::size_t samples = results.front().size();
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<double> row{results.front()[k].t};
    for (const auto& r : results) {
      if (r.size() != samples || r[k].t != row.front()) {
        throw std::logic_error("run_figure: series disagree on the sample times");
      }
      row.push_back(r[k].fidelity);
    }
    table.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace qdf
