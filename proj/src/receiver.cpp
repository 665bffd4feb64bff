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

#include "tibias/receiver.hpp"

namespace tibias {

void Receiver::emit_ack(SimTime echo, bool timer_delayed) {
  Ack ack;
  ack.flow_id = id_;
  ack.cum_ack = expect_;
  ack.echo_ts = echo;
  ack.acked_bytes = (expect_ - last_acked_cum_) * seg_size_;
  ack.timer_delayed = timer_delayed;
  last_acked_cum_ = expect_;
  if (delack_pending_) {
    delack_pending_ = false;
    env_.cancel_delack(id_);
  }
  env_.send_ack(ack);
}

void Receiver::on_segment(const Segment& seg) {
  ++arrivals_;

  if (seg.seq < expect_ || out_of_order_.count(seg.seq)) {
    // Duplicate delivery (a retransmission raced the original ack):
    // acknowledge immediately, advancing nothing.
    emit_ack(seg.sent_at);
    return;
  }

  unique_bytes_ += seg.size_bytes;

  if (seg.seq != expect_) {
    // Gap: buffer and send an immediate duplicate ack.
    out_of_order_.insert(seg.seq);
    emit_ack(seg.sent_at);
    return;
  }

  ++expect_;
  bool filled_hole = false;
  while (!out_of_order_.empty() && *out_of_order_.begin() == expect_) {
    out_of_order_.erase(out_of_order_.begin());
    ++expect_;
    filled_hole = true;
  }

  if (filled_hole || !out_of_order_.empty()) {
    // Progress past (or within) a loss episode: ack without delay.
    emit_ack(seg.sent_at);
  } else if (delack_pending_) {
    // Second in-order segment: ack now, echo the earliest arrival.
    emit_ack(pending_echo_);
  } else {
    delack_pending_ = true;
    pending_echo_ = seg.sent_at;
    env_.arm_delack(id_, kMaxDelayedAckS);
  }
}

void Receiver::on_delack_timer() {
  if (!delack_pending_) return;
  delack_pending_ = false;
  emit_ack(pending_echo_, true);
}

}  // namespace tibias
