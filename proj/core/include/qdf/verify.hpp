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

#include <iosfwd>
#include <string>
#include <vector>

#include "qdf/liouvillian.hpp"

namespace qdf {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  /// Adds 1e-3 to one generator entry before the trace-preservation check,
  /// which must then fail.
  bool inject_fault = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

VerifyReport run_verify(const VerifyOptions& options = {});

/// One line per check: "PASS name measured=... tolerance=... detail".
void print_report(std::ostream& os, const VerifyReport& report);

/// Copy of `g` with `delta` added to the first entry on a diagonal (z1 == z2)
/// row, so the trace identity no longer holds.
Generator perturb_diagonal_row(const Generator& g, Complex delta);

}  // namespace qdf
