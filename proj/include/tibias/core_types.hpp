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

#ifndef TIBIAS_CORE_TYPES_HPP
#define TIBIAS_CORE_TYPES_HPP

#include <cstdint>

#include "tibias/sim_time.hpp"

namespace tibias {

using FlowId = std::uint32_t;
using SeqNo = std::int64_t;

/// Simulated data segment. All data segments of a scenario share the
/// same fixed size.
struct Segment {
  FlowId flow_id = 0;
  SeqNo seq = 0;
  std::int64_t size_bytes = 0;
  SimTime sent_at;  // timestamp echo source
  bool is_retransmit = false;
};

/// Cumulative acknowledgment.
struct Ack {
  FlowId flow_id = 0;
  SeqNo cum_ack = 0;            // highest in-order seq + 1
  SimTime echo_ts;              // echoed segment timestamp
  std::int64_t acked_bytes = 0; // bytes newly acknowledged by this ack
  bool timer_delayed = false;   // fired by the delayed-ack timer; the
                                // echo carries the waiting time, so it
                                // is useless as an RTT sample
};

enum class DropCause : std::uint8_t { kCongestion, kWireless };

/// Ground truth for every dropped segment; one record per dropped
/// transmission attempt.
struct DropRecord {
  FlowId flow_id = 0;
  SeqNo seq = 0;
  DropCause cause = DropCause::kCongestion;
  SimTime time;
};

}  // namespace tibias

#endif  // TIBIAS_CORE_TYPES_HPP
