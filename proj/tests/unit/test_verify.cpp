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

#include <sstream>

#include <gtest/gtest.h>

#include "qdf/liouvillian.hpp"
#include "qdf/verify.hpp"

namespace qdf {
namespace {

const CheckResult* find(const VerifyReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(Verify, AllChecksPass) {
  const VerifyReport r = run_verify();
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.measured << " " << c.detail;
  EXPECT_TRUE(r.all_passed());
  ASSERT_NE(find(r, "trace_preservation"), nullptr);
  ASSERT_NE(find(r, "reduction_equivalence"), nullptr);
  std::ostringstream os;
  print_report(os, r);
  EXPECT_NE(os.str().find("PASS trace_preservation"), std::string::npos);
  EXPECT_EQ(os.str().find("FAIL"), std::string::npos);
}

TEST(Verify, InjectedFaultIsCaught) {
  const VerifyReport r = run_verify({.inject_fault = true});
  EXPECT_FALSE(r.all_passed());
  const CheckResult* trace = find(r, "trace_preservation");
  ASSERT_NE(trace, nullptr);
  EXPECT_FALSE(trace->passed);
  EXPECT_GE(trace->measured, 1e-4);
}

TEST(Verify, PerturbDiagonalRowBreaksTrace) {
  const Generator g = assemble(make_uniform({}));
  EXPECT_LT(trace_preservation_defect(g), 1e-13);
  EXPECT_GT(trace_preservation_defect(perturb_diagonal_row(g, {1e-3, 0.0})), 5e-4);
}

}  // namespace
}  // namespace qdf
