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

#ifndef TIBIAS_SIMULATION_HPP
#define TIBIAS_SIMULATION_HPP

#include <functional>
#include <string>
#include <vector>

#include "tibias/metrics.hpp"
#include "tibias/profile.hpp"
#include "tibias/scenario.hpp"

namespace tibias {

struct RunResult {
  RunTrace trace;
  MetricsRecord metrics;
};

/// Optional line sink for the per-flow event trace
/// (`time flow event field=value...`).
using TraceSink = std::function<void(const std::string&)>;

/// Runs one scenario to completion on a star topology: every sender has
/// a dedicated lossy access link to the intermediate node, which feeds a
/// shared drop-tail queue and lossy bottleneck link toward the
/// receivers. Deterministic for a fixed (scenario, seed); throws if the
/// per-flow segment conservation identity fails at the end.
RunResult run_scenario(const ScenarioConfig& cfg, TraceSink sink = nullptr);

/// Profile set used when the scenario names no profile file: every
/// sender carries the intermediate node's full interest list (similarity
/// 1). The intermediate profile is last in the returned vector.
std::vector<Profile> default_profiles(std::int64_t n_connections);

/// Resolves the sender and intermediate profiles for a scenario, from
/// its profile file when given ("sender<i>" and "intermediate" ids are
/// required) or the defaults otherwise. Senders first, intermediate
/// last.
std::vector<Profile> resolve_profiles(const ScenarioConfig& cfg);

}  // namespace tibias

#endif  // TIBIAS_SIMULATION_HPP
