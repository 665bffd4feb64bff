/*
 * Copyright 2026 The tibias-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tibias/scenario.hpp"

using namespace tibias;

TEST_CASE("empty text yields the reference defaults") {
  const auto cfg = parse_scenario_text("");
  CHECK(cfg.protocol == Protocol::kTibias);
  CHECK(cfg.n_connections == 5);
  CHECK(cfg.duration_s == 2000.0);
  CHECK(cfg.seg_size == 1500);
  CHECK(cfg.access_bandwidth == 750000.0);
  CHECK(cfg.bottleneck_bandwidth == 750000.0);
  CHECK(cfg.prop_delay_s == 0.05);
  CHECK(cfg.loss_prob == 0.0);
  CHECK(cfg.queue_capacity == 50000);
  CHECK(cfg.threshld == 0.6);
  CHECK(cfg.epsilon == 0.3);
  CHECK(cfg.gamma_dec == 0.5);
  CHECK(cfg.gamma_inc == 0.8);
  CHECK(cfg.k == 0.5);
  CHECK(cfg.seed == 1);
  CHECK(cfg.profiles.empty());
}

TEST_CASE("valid assignments are accepted") {
  const auto cfg = parse_scenario_text(
      "protocol = tibias\n"
      "n_connections = 20\n"
      "loss_prob = 0.03\n"
      "seed = 42\n"
      "# comment line\n"
      "duration = 300  # trailing comment\n");
  CHECK(cfg.protocol == Protocol::kTibias);
  CHECK(cfg.n_connections == 20);
  CHECK(cfg.loss_prob == 0.03);
  CHECK(cfg.seed == 42);
  CHECK(cfg.duration_s == 300.0);
}

TEST_CASE("range violations report the line") {
  CHECK_THROWS_AS(parse_scenario_text("loss_prob = 1.5\n"), ScenarioError);
  CHECK_THROWS_WITH_AS(parse_scenario_text("protocol = cubic\n"),
                       doctest::Contains("line 1"), ScenarioError);
  CHECK_THROWS_WITH_AS(parse_scenario_text("duration = 10\nn_connections = 0\n"),
                       doctest::Contains("n_connections"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text("n_connections = 21\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text("epsilon = 1.0\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text("threshld = 0\n"), ScenarioError);
}

TEST_CASE("unknown and repeated keys are rejected") {
  CHECK_THROWS_WITH_AS(parse_scenario_text("bandwidth = 1\n"),
                       doctest::Contains("unknown key"), ScenarioError);
  CHECK_THROWS_WITH_AS(parse_scenario_text("seed = 1\nseed = 2\n"),
                       doctest::Contains("line 2"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text("loss_prob = zero\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text("just some words\n"), ScenarioError);
}

TEST_CASE("config hash is stable and sensitive") {
  const auto a = parse_scenario_text("seed = 7\n");
  const auto b = parse_scenario_text("seed = 7\n");
  const auto c = parse_scenario_text("seed = 8\n");
  CHECK(a.config_hash() == b.config_hash());
  CHECK(a.config_hash() != c.config_hash());
  CHECK(a.config_hash().size() == 16);
  CHECK(a.canonical_text().find("seed = 7") != std::string::npos);
}
