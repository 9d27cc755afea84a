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

#include <gtest/gtest.h>

#include "qdf/analysis.hpp"
#include "qdf/run_config.hpp"

namespace qdf {
namespace {

std::string field_of(const std::string& json) {
  try {
    parse_run_config(json);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<no error>";
}

TEST(RunConfig, DefaultsAreFigureSettings) {
  const RunConfig cfg = parse_run_config("{}");
  EXPECT_EQ(cfg.n_qubits, 4);
  EXPECT_EQ(cfg.omega, 2.0);
  EXPECT_EQ(cfg.t_end, 50.0);
  EXPECT_EQ(cfg.dt, 1e-3);
  EXPECT_EQ(cfg.primed_scale, 1.0);
  const ModelParams p = scenario_params(cfg);
  EXPECT_EQ(p.epsilon, std::vector<double>(4, 0.0));
  EXPECT_EQ(p.j_coupling, std::vector<double>(3, 0.0));
}

TEST(RunConfig, RoundTripIsIdempotent) {
  const std::string text = R"({"state":"bell-c","n_qubits":2,"zeta":0.6,"epsilon":[0.1,0.25],
                               "j":[0.5],"left_barrier":[2],"right_barrier":[1],"output":"x.csv",
                               "frame":"baseline","eta":0.03,"scenario":"custom","affected_qubits":[2]})";
  const std::string once = serialize_run_config(parse_run_config(text));
  const std::string twice = serialize_run_config(parse_run_config(once));
  EXPECT_EQ(once, twice);
  const RunConfig back = parse_run_config(once);
  EXPECT_EQ(back.epsilon, (std::vector<double>{0.1, 0.25}));
  EXPECT_EQ(back.left_barrier, (std::vector<int>{2}));
  EXPECT_EQ(back.frame, "baseline");
}

TEST(RunConfig, DoublesSurviveRoundTripExactly) {
  RunConfig cfg;
  cfg.zeta = 0.1 + 0.2;
  cfg.omega = 1.0 / 3.0;
  const RunConfig back = parse_run_config(serialize_run_config(cfg));
  EXPECT_EQ(back.zeta, cfg.zeta);
  EXPECT_EQ(back.omega, cfg.omega);
}

TEST(RunConfig, ErrorsNameTheField) {
  EXPECT_EQ(field_of(R"({"zetta":0.2})"), "zetta");
  EXPECT_EQ(field_of(R"({"zeta":"0.2"})"), "zeta");
  EXPECT_EQ(field_of(R"({"zeta":1.0})"), "zeta");
  EXPECT_EQ(field_of(R"({"eta":-0.1})"), "eta");
  EXPECT_EQ(field_of(R"({"dt":0})"), "dt");
  EXPECT_EQ(field_of(R"({"sample_interval":0.00015})"), "sample_interval");
  EXPECT_EQ(field_of(R"({"epsilon":[0,0,"x",0]})"), "epsilon[2]");
  EXPECT_EQ(field_of(R"({"epsilon":[0,0]})"), "epsilon");
  EXPECT_EQ(field_of(R"({"j":[0,0,0,0]})"), "j");
  EXPECT_EQ(field_of(R"({"state":"psi9"})"), "state");
  EXPECT_EQ(field_of(R"({"state":"bell-a"})"), "state");
  EXPECT_EQ(field_of(R"({"n_qubits":2.5})"), "n_qubits");
  EXPECT_EQ(field_of(R"({"scenario":"case_v"})"), "scenario");
  EXPECT_EQ(field_of(R"({"n_qubits":2,"state":"bell-a","scenario":"case_iii","eta":0.1})"), "scenario");
  EXPECT_EQ(field_of(R"({"affected_qubits":[1]})"), "affected_qubits");
  EXPECT_EQ(field_of(R"({"scenario":"custom","affected_qubits":[5]})"), "affected_qubits[0]");
  EXPECT_EQ(field_of(R"({"left_barrier":[1,2]})"), "right_barrier");
  EXPECT_EQ(field_of(R"({"left_barrier":[1,1],"right_barrier":[3,4]})"), "left_barrier[1]");
  EXPECT_EQ(field_of(R"({"left_barrier":[1,2,3],"right_barrier":[3,4]})"), "left_barrier");
  EXPECT_EQ(field_of(R"({"frame":"lab"})"), "frame");
  EXPECT_EQ(field_of(R"({"logical_zero":"left"})"), "logical_zero");
  EXPECT_EQ(field_of(R"([1,2])"), "<document>");
  EXPECT_EQ(field_of(R"({"zeta":)"), "<document>");
}

TEST(RunConfig, ScenarioAndFrame) {
  const RunConfig cfg = parse_run_config(R"({"scenario":"case_ii","eta":0.05,"frame":"baseline"})");
  const ModelParams p = scenario_params(cfg);
  EXPECT_DOUBLE_EQ(p.omega[1], 1.9);
  EXPECT_EQ(base_params(cfg).omega[1], 2.0);
  EXPECT_EQ(frame_choice(cfg), FrameChoice::baseline);
}

TEST(RunConfig, SharedBarriersAndCustomScenario) {
  const RunConfig cfg = parse_run_config(
      R"({"n_qubits":2,"state":"bell-b","left_barrier":[1,2],"right_barrier":[2,1],
          "scenario":"custom","affected_qubits":[1],"eta":0.1})");
  const ModelParams p = scenario_params(cfg);
  EXPECT_EQ(p.left_barrier, (std::vector<int>{0, 1}));
  EXPECT_EQ(p.right_barrier, (std::vector<int>{0, 1}));
  EXPECT_DOUBLE_EQ(p.omega[0], 1.8);
  EXPECT_EQ(p.omega[1], 2.0);
}

TEST(RunConfig, LogicalZeroUp) {
  const RunConfig cfg = parse_run_config(R"({"logical_zero":"up"})");
  EXPECT_FALSE(logical_encoding(cfg).zero_is_down);
}

}  // namespace
}  // namespace qdf
