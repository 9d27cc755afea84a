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

// qdf: command-line front end for the charge-qubit fidelity simulator.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdf/analysis.hpp"
#include "qdf/baseline.hpp"
#include "qdf/csv.hpp"
#include "qdf/experiment.hpp"
#include "qdf/figures.hpp"
#include "qdf/liouvillian.hpp"
#include "qdf/run_config.hpp"
#include "qdf/state.hpp"
#include "qdf/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

qdf::RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qdf::ConfigError("<file>", "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return qdf::parse_run_config(text.str());
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << contents;
  if (!out.flush()) throw std::runtime_error("write to '" + path.string() + "' failed");
}

int cmd_simulate(const std::string& config_path, const std::string& out_override) {
  qdf::RunConfig cfg = load_config(config_path);
  if (!out_override.empty()) cfg.output = out_override;
  const qdf::Table table = qdf::run_single(cfg);
  if (cfg.output.empty()) {
    qdf::write_csv(std::cout, table);
  } else {
    write_file(cfg.output, table.to_csv());
  }
  return kExitOk;
}

int cmd_figure(const std::string& name, const std::string& out_dir, int threads) {
  qdf::FigureId id;
  try {
    id = qdf::parse_figure(name);
  } catch (const std::invalid_argument& e) {
    throw qdf::ConfigError("figure", e.what());
  }
  const qdf::FigureOutput fig = qdf::run_figure(id, threads);
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  write_file(dir / (fig.name + ".csv"), fig.table.to_csv());
  write_file(dir / (fig.name + ".py"), fig.plot_script);
  std::cerr << "wrote " << (dir / (fig.name + ".csv")).string() << " and " << fig.name << ".py\n";
  return kExitOk;
}

int cmd_baseline(const std::string& state, double gamma_d, double t_end, double interval) {
  if (!(gamma_d >= 0.0)) throw qdf::ConfigError("gamma-d", "must be non-negative");
  if (!(t_end >= 0.0)) throw qdf::ConfigError("t-end", "must be non-negative");
  if (!(interval > 0.0)) throw qdf::ConfigError("sample-interval", "must be positive");
  qdf::QubitState psi;
  try {
    psi = qdf::parse_named_state(state);
  } catch (const std::exception& e) {
    throw qdf::ConfigError("state", e.what());
  }
  const qdf::CMatrix rho0 = qdf::reduce_qubits(qdf::to_density(psi));
  qdf::Table table;
  table.header = {"t", "F"};
  const auto samples = static_cast<long>(std::floor(t_end / interval + 1e-9));
  for (long k = 0; k <= samples; ++k) {
    const double t = static_cast<double>(k) * interval;
    table.rows.push_back({t, qdf::fidelity(rho0, qdf::collective_dephasing(rho0, gamma_d, t))});
  }
  qdf::write_csv(std::cout, table);
  return kExitOk;
}

int cmd_verify(bool inject_fault) {
  qdf::VerifyOptions options;
  options.inject_fault = inject_fault;
  const qdf::VerifyReport report = qdf::run_verify(options);
  qdf::print_report(std::cout, report);
  return report.all_passed() ? kExitOk : kExitCheckFailure;
}

int cmd_dump(const std::string& config_path, const std::string& layout) {
  const qdf::RunConfig cfg = load_config(config_path);
  qdf::Generator g = qdf::assemble(qdf::scenario_params(cfg));
  if (layout == "reduced") g = qdf::reduce_spin_symmetric(g);
  qdf::write_dump(std::cout, g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fidelity of decoherence-free charge-qubit states under a two-barrier detector"};
  app.require_subcommand(1);

  std::string config_path, out_path, out_dir, figure_name, state, layout = "full";
  double gamma_d = 0.0, t_end = 5.0, interval = 0.1;
  int threads = 0;
  bool inject_fault = false;

  auto* simulate = app.add_subcommand("simulate", "Run one configuration and write its CSV time series");
  simulate->add_option("--config", config_path, "JSON run configuration")->required();
  simulate->add_option("--out", out_path, "CSV path (overrides the config's output field)");

  auto* figure = app.add_subcommand("figure", "Reproduce a figure as CSV plus a plotting script");
  figure->add_option("name", figure_name, "fig2, fig3a, fig3b, fig4a or fig4b")->required();
  figure->add_option("--out", out_dir, "Output directory")->required();
  figure->add_option("--threads", threads, "Worker threads (default: QDF_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  auto* baseline = app.add_subcommand("baseline", "Fidelity under pure collective dephasing");
  baseline->add_option("--state", state, "Named state")->required();
  baseline->add_option("--gamma-d", gamma_d, "Collective dephasing rate")->required();
  baseline->add_option("--t-end", t_end, "Final time")->capture_default_str();
  baseline->add_option("--sample-interval", interval, "Sample spacing")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the invariant and oracle checks");
  verify->add_flag("--inject-fault", inject_fault, "Perturb one generator entry (self-test)");

  auto* dump = app.add_subcommand("dump-generator", "Print the generator entries for a configuration");
  dump->add_option("--config", config_path, "JSON run configuration")->required();
  dump->add_option("--layout", layout, "full or reduced")
      ->check(CLI::IsMember({"full", "reduced"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*simulate) return cmd_simulate(config_path, out_path);
    if (*figure) return cmd_figure(figure_name, out_dir, threads);
    if (*baseline) return cmd_baseline(state, gamma_d, t_end, interval);
    if (*verify) return cmd_verify(inject_fault);
    if (*dump) return cmd_dump(config_path, layout);
  } catch (const qdf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  return kExitOk;
}
