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

#ifndef TIBIAS_METRICS_HPP
#define TIBIAS_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tibias/core_types.hpp"
#include "tibias/metadata.hpp"
#include "tibias/scenario.hpp"
#include "tibias/sender.hpp"

namespace tibias {

struct FlowCounters {
  std::int64_t sent = 0;       // segment emissions, retransmissions included
  std::int64_t retransmits = 0;
  std::int64_t arrivals = 0;   // receiver arrivals, duplicates included
  std::int64_t unique_bytes = 0;
  std::int64_t drops_wireless = 0;
  std::int64_t drops_congestion = 0;
  std::int64_t in_flight_end = 0;
};

struct ReductionRecord {
  double time_s = 0.0;
  FlowId flow = 0;
  ReductionCause cause = ReductionCause::kRto;
  SeqNo trigger_seq = 0;
};

struct ClassificationRecord {
  double time_s = 0.0;
  FlowId flow = 0;
  SeqNo seq = 0;
  DropCause predicted = DropCause::kCongestion;
};

/// Raw measured record of one run; everything the metric definitions
/// need, nothing tied to the simulator internals.
struct RunTrace {
  double duration_s = 0.0;
  double bottleneck_bandwidth = 0.0;
  std::vector<FlowCounters> flows;
  std::vector<DropRecord> drops;
  std::vector<ReductionRecord> reductions;
  std::vector<ClassificationRecord> classifications;
  MetadataLedger ledger;
  std::int64_t max_queue_occupancy = 0;
  std::int64_t queue_capacity = 0;
  bool ended_early = false;  // event queue drained before the horizon
};

struct MetricsRecord {
  std::vector<double> flow_goodput_bps;
  double goodput_bps = 0.0;      // aggregate unique delivered bytes/s
  double utilization = 0.0;      // fraction of bottleneck capacity
  std::int64_t retransmissions = 0;
  std::int64_t reductions = 0;
  std::int64_t superfluous_reductions = 0;
  std::int64_t classification_events = 0;
  std::int64_t classification_correct = 0;
  double classification_accuracy = -1.0;  // -1 when no events
  std::int64_t metadata_bytes = 0;
  std::int64_t handshakes = 0;
  double match_latency_mean_s = 0.0;
  double match_latency_max_s = 0.0;
};

/// Derives every reported metric from a trace. Superfluous reductions
/// and classification accuracy are judged against the drop records: the
/// ground truth for a loss event is the latest drop of the triggering
/// sequence number at or before the event.
MetricsRecord compute_metrics(const RunTrace& trace,
                              const ScenarioConfig& cfg);

/// Fixed CSV schema shared by single runs and sweeps.
extern const char* const kCsvHeader;

std::string csv_row(const std::string& scenario_id, Protocol protocol,
                    std::uint64_t seed, const std::string& axis,
                    double axis_value, const MetricsRecord& m);

std::string csv_error_row(const std::string& scenario_id, Protocol protocol,
                          std::uint64_t seed, const std::string& axis,
                          double axis_value);

/// Deterministic number rendering used in CSV cells.
std::string csv_num(double v);

}  // namespace tibias

#endif  // TIBIAS_METRICS_HPP
