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

#ifndef TIBIAS_RECEIVER_HPP
#define TIBIAS_RECEIVER_HPP

#include <cstdint>
#include <functional>
#include <set>

#include "tibias/core_types.hpp"

namespace tibias {

constexpr double kMaxDelayedAckS = 0.2;

/// Receiving endpoint of one flow: cumulative acking with a delayed-ack
/// timer (ack every second segment, at most 0.2 s late), immediate
/// duplicate acks on out-of-order arrivals, and unique-bytes accounting
/// for goodput.
class Receiver {
 public:
  struct Env {
    std::function<double()> now_s;
    std::function<void(const Ack&)> send_ack;
    std::function<void(FlowId, double delay_s)> arm_delack;
    std::function<void(FlowId)> cancel_delack;
  };

  Receiver(FlowId id, std::int64_t seg_size, Env env)
      : id_(id), seg_size_(seg_size), env_(std::move(env)) {}

  void on_segment(const Segment& seg);
  void on_delack_timer();

  SeqNo cum() const { return expect_; }
  std::int64_t unique_bytes() const { return unique_bytes_; }
  std::int64_t arrivals() const { return arrivals_; }

 private:
  void emit_ack(SimTime echo, bool timer_delayed = false);

  FlowId id_;
  std::int64_t seg_size_;
  Env env_;

  SeqNo expect_ = 0;  // next in-order seq
  std::set<SeqNo> out_of_order_;
  SeqNo last_acked_cum_ = 0;
  bool delack_pending_ = false;
  SimTime pending_echo_;

  std::int64_t unique_bytes_ = 0;
  std::int64_t arrivals_ = 0;
};

}  // namespace tibias

#endif  // TIBIAS_RECEIVER_HPP
