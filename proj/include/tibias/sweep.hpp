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

#ifndef TIBIAS_SWEEP_HPP
#define TIBIAS_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "tibias/metrics.hpp"
#include "tibias/scenario.hpp"

namespace tibias {

enum class SweepAxis : std::uint8_t {
  kLoss,
  kDelay,
  kBandwidth,
  kQueue,
  kConnections
};

const char* to_string(SweepAxis axis);
std::optional<SweepAxis> axis_from_string(const std::string& name);

/// Copies the base scenario with one axis value replaced. Values are in
/// the scenario's own units (loss probability, seconds, bytes/s, bytes,
/// connection count).
ScenarioConfig apply_axis(ScenarioConfig base, SweepAxis axis, double value);

struct SweepRow {
  std::string scenario_id;
  Protocol protocol = Protocol::kTibias;
  std::uint64_t seed = 0;
  SweepAxis axis = SweepAxis::kLoss;
  double value = 0.0;
  bool ok = false;
  std::string error;
  MetricsRecord metrics;
};

/// Runs every (point, protocol, seed) combination of the sweep; both
/// protocols always run so the rows are directly comparable. Per-point
/// failures become error rows and the sweep continues. Rows come back
/// ordered by (axis_value, protocol, seed); runs may execute on several
/// threads but share nothing.
std::vector<SweepRow> run_sweep(const ScenarioConfig& base, SweepAxis axis,
                                const std::vector<double>& points,
                                int n_seeds, int jobs = 0);

std::string sweep_csv(const std::vector<SweepRow>& rows);

struct TrendCheck {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(std::string note) {
    pass = false;
    notes.push_back(std::move(note));
  }
};

/// Loss sweep: per protocol, seed-mean utilization must be
/// non-increasing in the loss rate, allowing a single inversion of at
/// most two percentage points; from 1e-3 loss upward the socially-aware
/// protocol must utilize at least as much as Reno.
TrendCheck check_loss_utilization(const std::vector<SweepRow>& rows);

/// Heavy-loss sweep: strictly fewer superfluous window reductions than
/// Reno at every point (seed means).
TrendCheck check_superfluous_ordering(const std::vector<SweepRow>& rows);

/// Delay/bandwidth/queue sweeps: the socially-aware goodput curve is
/// monotone along the axis (non-increasing in delay, non-decreasing
/// otherwise), at least matches Reno at every point, and beats it by 5%
/// at the extreme point.
TrendCheck check_goodput_trend(const std::vector<SweepRow>& rows,
                               SweepAxis axis);

/// The axis-appropriate combination of the checks above.
TrendCheck check_sweep(const std::vector<SweepRow>& rows, SweepAxis axis);

}  // namespace tibias

#endif  // TIBIAS_SWEEP_HPP
