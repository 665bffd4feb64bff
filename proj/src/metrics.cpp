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

#include "tibias/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

namespace tibias {

namespace {

/// Latest drop of (flow, seq) at or before `time_s`, if any.
class DropIndex {
 public:
  explicit DropIndex(const std::vector<DropRecord>& drops) {
    for (const DropRecord& d : drops) {
      by_seq_[{d.flow_id, d.seq}].push_back({d.time.seconds(), d.cause});
    }
    for (auto& [key, v] : by_seq_) {
      std::sort(v.begin(), v.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  }

  std::optional<DropCause> cause_before(FlowId flow, SeqNo seq,
                                        double time_s) const {
    auto it = by_seq_.find({flow, seq});
    if (it == by_seq_.end()) return std::nullopt;
    std::optional<DropCause> latest;
    for (const auto& [t, cause] : it->second) {
      if (t > time_s) break;
      latest = cause;
    }
    return latest;
  }

 private:
  std::map<std::pair<FlowId, SeqNo>, std::vector<std::pair<double, DropCause>>>
      by_seq_;
};

}  // namespace

MetricsRecord compute_metrics(const RunTrace& trace,
                              const ScenarioConfig& cfg) {
  MetricsRecord m;
  const double dur = trace.duration_s;

  std::int64_t total_unique = 0;
  for (const FlowCounters& f : trace.flows) {
    total_unique += f.unique_bytes;
    m.retransmissions += f.retransmits;
    m.flow_goodput_bps.push_back(
        dur > 0.0 ? static_cast<double>(f.unique_bytes) / dur : 0.0);
  }
  m.goodput_bps = dur > 0.0 ? static_cast<double>(total_unique) / dur : 0.0;
  m.utilization =
      dur > 0.0 ? static_cast<double>(total_unique) /
                      (trace.bottleneck_bandwidth * dur)
                : 0.0;

  const DropIndex drops(trace.drops);

  m.reductions = static_cast<std::int64_t>(trace.reductions.size());
  for (const ReductionRecord& r : trace.reductions) {
    const auto truth = drops.cause_before(r.flow, r.trigger_seq, r.time_s);
    if (truth && *truth == DropCause::kWireless) ++m.superfluous_reductions;
  }

  for (const ClassificationRecord& c : trace.classifications) {
    const auto truth = drops.cause_before(c.flow, c.seq, c.time_s);
    if (!truth) continue;  // no matching drop; spurious event, skip
    ++m.classification_events;
    if (*truth == c.predicted) ++m.classification_correct;
  }
  if (m.classification_events > 0) {
    m.classification_accuracy =
        static_cast<double>(m.classification_correct) /
        static_cast<double>(m.classification_events);
  }

  m.metadata_bytes = trace.ledger.bytes_exchanged;
  m.handshakes = trace.ledger.handshakes;
  if (!trace.ledger.match_latency_s.empty()) {
    double sum = 0.0, mx = 0.0;
    for (double v : trace.ledger.match_latency_s) {
      sum += v;
      mx = std::max(mx, v);
    }
    m.match_latency_mean_s =
        sum / static_cast<double>(trace.ledger.match_latency_s.size());
    m.match_latency_max_s = mx;
  }

  (void)cfg;
  return m;
}

const char* const kCsvHeader =
    "scenario_id,protocol,seed,axis,axis_value,goodput_bps,utilization,"
    "retx,superfluous,class_acc,metadata_bytes";

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string csv_row(const std::string& scenario_id, Protocol protocol,
                    std::uint64_t seed, const std::string& axis,
                    double axis_value, const MetricsRecord& m) {
  std::ostringstream os;
  os << scenario_id << ',' << to_string(protocol) << ',' << seed << ','
     << axis << ',' << csv_num(axis_value) << ',' << csv_num(m.goodput_bps)
     << ',' << csv_num(m.utilization) << ',' << m.retransmissions << ','
     << m.superfluous_reductions << ',' << csv_num(m.classification_accuracy)
     << ',' << m.metadata_bytes;
  return os.str();
}

std::string csv_error_row(const std::string& scenario_id, Protocol protocol,
                          std::uint64_t seed, const std::string& axis,
                          double axis_value) {
  std::ostringstream os;
  os << scenario_id << ',' << to_string(protocol) << ',' << seed << ','
     << axis << ',' << csv_num(axis_value) << ",,,,,,";
  return os.str();
}

}  // namespace tibias
