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

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdf/csv.hpp"
#include "qdf/run_config.hpp"

namespace qdf {

enum class FigureId { fig2, fig3a, fig3b, fig4a, fig4b };

std::string_view to_string(FigureId id);
FigureId parse_figure(std::string_view name);  // throws std::invalid_argument

/// Series name and the run that produces it.
struct Series {
  std::string name;
  RunConfig config;
};

/// The runs behind a figure, in column order.
std::vector<Series> figure_series(FigureId id);

/// Non-uniformity values swept by the F(eta) figures.
std::span<const double> eta_grid();

struct FigureOutput {
  std::string name;
  Table table;
  std::string plot_script;  // Python/matplotlib, reads <name>.csv next to it
};

/// Runs every series (concurrently, up to `threads`; 0 means
/// worker_threads()) and merges the columns in series order.
FigureOutput run_figure(FigureId id, int threads = 0);

/// QDF_THREADS when set to a positive integer, else the hardware concurrency.
int worker_threads();

/// Calls `task(i)` for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& task);

}  // namespace qdf
