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

#include "tibias/metrics.hpp"

using namespace tibias;

namespace {

DropRecord drop(FlowId flow, SeqNo seq, DropCause cause, double t) {
  return DropRecord{flow, seq, cause, SimTime::from_seconds(t)};
}

}  // namespace

TEST_CASE("hand-built trace reproduces hand-computed metrics") {
  // Two flows over a 100 s run on a 750000 B/s bottleneck.
  //  flow 0: 1000 sent, 990 arrivals, 980*1500 unique bytes, 6 wireless
  //          and 4 congestion drops, 0 in flight, 12 retransmissions.
  //  flow 1: 500 sent, 490 arrivals, 490*1500 unique, 10 wireless drops.
  RunTrace tr;
  tr.duration_s = 100.0;
  tr.bottleneck_bandwidth = 750000.0;
  tr.flows.resize(2);
  tr.flows[0] = {1000, 12, 990, 980 * 1500, 6, 4, 0};
  tr.flows[1] = {500, 3, 490, 490 * 1500, 10, 0, 0};

  tr.drops.push_back(drop(0, 100, DropCause::kWireless, 10.0));
  tr.drops.push_back(drop(0, 200, DropCause::kCongestion, 20.0));
  tr.drops.push_back(drop(1, 50, DropCause::kWireless, 30.0));

  // Three reductions: one triggered by the wireless drop (superfluous),
  // one by the congestion drop, one with no matching drop record.
  tr.reductions.push_back({10.5, 0, ReductionCause::kFastRetransmit, 100});
  tr.reductions.push_back({20.5, 0, ReductionCause::kClassifiedCongestion, 200});
  tr.reductions.push_back({40.0, 1, ReductionCause::kRto, 999});

  // Classifications: wireless/wireless correct, congestion/wireless
  // wrong, one without ground truth (ignored).
  tr.classifications.push_back({10.5, 0, 100, DropCause::kWireless});
  tr.classifications.push_back({20.5, 0, 200, DropCause::kWireless});
  tr.classifications.push_back({50.0, 1, 777, DropCause::kWireless});

  tr.ledger.bytes_exchanged = 1234;
  tr.ledger.handshakes = 2;
  tr.ledger.match_latency_s = {1e-6, 3e-6};

  ScenarioConfig cfg;
  const MetricsRecord m = compute_metrics(tr, cfg);

  CHECK(m.flow_goodput_bps[0] == doctest::Approx(980 * 15.0));
  CHECK(m.flow_goodput_bps[1] == doctest::Approx(490 * 15.0));
  CHECK(m.goodput_bps == doctest::Approx((980 + 490) * 15.0));
  CHECK(m.utilization == doctest::Approx((980 + 490) * 1500.0 /
                                         (750000.0 * 100.0)));
  CHECK(m.retransmissions == 15);
  CHECK(m.reductions == 3);
  CHECK(m.superfluous_reductions == 1);
  CHECK(m.classification_events == 2);
  CHECK(m.classification_correct == 1);
  CHECK(m.classification_accuracy == doctest::Approx(0.5));
  CHECK(m.metadata_bytes == 1234);
  CHECK(m.match_latency_mean_s == doctest::Approx(2e-6));
  CHECK(m.match_latency_max_s == doctest::Approx(3e-6));
}

TEST_CASE("zero-loss trace has no superfluous reductions") {
  RunTrace tr;
  tr.duration_s = 10.0;
  tr.bottleneck_bandwidth = 750000.0;
  tr.flows.resize(1);
  tr.flows[0] = {100, 0, 100, 100 * 1500, 0, 0, 0};
  ScenarioConfig cfg;
  const auto m = compute_metrics(tr, cfg);
  CHECK(m.superfluous_reductions == 0);
  CHECK(m.classification_accuracy == -1.0);  // no events
}

TEST_CASE("all-wireless reductions are all superfluous") {
  RunTrace tr;
  tr.duration_s = 10.0;
  tr.bottleneck_bandwidth = 750000.0;
  tr.flows.resize(1);
  tr.flows[0] = {100, 5, 95, 95 * 1500, 5, 0, 0};
  for (int i = 0; i < 5; ++i) {
    tr.drops.push_back(drop(0, i * 10, DropCause::kWireless, i + 1.0));
    tr.reductions.push_back(
        {i + 1.5, 0, ReductionCause::kFastRetransmit, i * 10});
  }
  ScenarioConfig cfg;
  const auto m = compute_metrics(tr, cfg);
  CHECK(m.superfluous_reductions == 5);
  CHECK(m.reductions == 5);
}

TEST_CASE("ground truth uses the latest drop before the event") {
  RunTrace tr;
  tr.duration_s = 10.0;
  tr.bottleneck_bandwidth = 750000.0;
  tr.flows.resize(1);
  tr.flows[0] = {10, 2, 8, 8 * 1500, 1, 1, 0};
  // Same sequence dropped twice: wireless first, then congestion.
  tr.drops.push_back(drop(0, 4, DropCause::kWireless, 1.0));
  tr.drops.push_back(drop(0, 4, DropCause::kCongestion, 3.0));
  // A reduction between the two drops sees the wireless record.
  tr.reductions.push_back({2.0, 0, ReductionCause::kFastRetransmit, 4});
  // A reduction after both sees the congestion record.
  tr.reductions.push_back({4.0, 0, ReductionCause::kFastRetransmit, 4});
  ScenarioConfig cfg;
  const auto m = compute_metrics(tr, cfg);
  CHECK(m.superfluous_reductions == 1);
}

TEST_CASE("csv rows are stable and carry the fixed schema") {
  MetricsRecord m;
  m.goodput_bps = 123456.789;
  m.utilization = 0.875;
  m.retransmissions = 42;
  m.superfluous_reductions = 7;
  m.classification_accuracy = 0.9;
  m.metadata_bytes = 512;
  const auto row = csv_row("abc123", Protocol::kTibias, 5, "loss", 0.01, m);
  CHECK(row == "abc123,tibias,5,loss,0.01,123456.789,0.875,42,7,0.9,512");
  const auto err = csv_error_row("abc123", Protocol::kReno, 5, "loss", 0.01);
  CHECK(err == "abc123,reno,5,loss,0.01,,,,,,");
  CHECK(std::string(kCsvHeader) ==
        "scenario_id,protocol,seed,axis,axis_value,goodput_bps,utilization,"
        "retx,superfluous,class_acc,metadata_bytes");
}
