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

#include "tibias/sender.hpp"

#include <algorithm>
#include <cmath>

namespace tibias {

Sender::Sender(FlowId id, SenderEnv& env, std::int64_t seg_size,
               std::int64_t max_window)
    : id_(id),
      env_(env),
      seg_size_(seg_size),
      max_window_(max_window),
      ssthresh_(static_cast<double>(max_window)) {}

std::int64_t Sender::send_allowance() const {
  std::int64_t allowance = static_cast<std::int64_t>(std::floor(cwnd_));
  if (phase_ == Phase::kRecovery) {
    allowance += dup_credit_;
  } else {
    // Limited transmit (RFC 3042): the first two duplicate acks may
    // each release one new segment, keeping small windows able to
    // produce enough duplicates for fast retransmit.
    allowance += std::min(dupacks_, 2);
  }
  return allowance;
}

void Sender::start() { pump(); }

void Sender::pump() {
  const std::int64_t allowance = send_allowance();
  while (snd_nxt_ - snd_una_ < allowance) {
    env_.emit_segment(id_, snd_nxt_, false);
    ++snd_nxt_;
    ++segments_emitted_;
    if (!rto_armed_) {
      env_.arm_rto(id_, rtt_.rto());
      rto_armed_ = true;
    }
  }
}

void Sender::retransmit_front(bool force) {
  auto it = last_retx_at_.find(snd_una_);
  if (!force && it != last_retx_at_.end() &&
      env_.now_s() - it->second < rtt_.rto()) {
    return;  // already retransmitted within one timeout
  }
  last_retx_at_[snd_una_] = env_.now_s();
  env_.emit_segment(id_, snd_una_, true);
  ++segments_emitted_;
  ++retransmit_count_;
}

void Sender::manage_rto_after_ack() {
  rto_backoff_ = 0;
  if (snd_una_ == snd_nxt_) {
    if (rto_armed_) {
      env_.cancel_rto(id_);
      rto_armed_ = false;
    }
  } else {
    env_.arm_rto(id_, rtt_.rto());
    rto_armed_ = true;
  }
}

void Sender::on_ack(const Ack& ack) {
  if (ack.cum_ack > snd_una_) {
    const std::int64_t newly = ack.cum_ack - snd_una_;
    snd_una_ = ack.cum_ack;

    // Estimates first: RTT from the timestamp echo, then the policy's
    // bandwidth bookkeeping. Timer-delayed acks echo a stamp that has
    // been sitting at the receiver and carry no usable RTT.
    if (!ack.timer_delayed) {
      rtt_.add_sample(env_.now_s() - ack.echo_ts.seconds());
    }
    on_estimates(ack, newly);

    dupacks_ = 0;
    for (auto it = last_retx_at_.begin(); it != last_retx_at_.end();) {
      it = it->first < snd_una_ ? last_retx_at_.erase(it) : std::next(it);
    }

    if (phase_ == Phase::kRecovery) {
      if (ack.cum_ack > recover_) {
        dup_credit_ = 0;
        on_full_ack();
      } else {
        dup_credit_ = std::max<std::int64_t>(0, dup_credit_ - newly);
        dups_since_retx_ = 0;
        on_partial_ack(newly);
        retransmit_front(false);
      }
    } else {
      grow_on_new_ack(newly);
    }
    manage_rto_after_ack();
    pump();
  } else if (ack.cum_ack == snd_una_ && snd_nxt_ > snd_una_) {
    // Duplicate acks echo the out-of-order arrival that triggered them,
    // so they still carry a current RTT reading of the path.
    if (!ack.timer_delayed) {
      rtt_.add_sample(env_.now_s() - ack.echo_ts.seconds());
    }
    if (phase_ == Phase::kRecovery) {
      ++dup_credit_;
      // A stream of further duplicates with no forward progress means
      // the retransmission itself is likely gone; resend it rather
      // than sitting out a full timeout.
      if (++dups_since_retx_ >= 2 * kDupAckThreshold) {
        dups_since_retx_ = 0;
        retransmit_front(true);
      }
      on_dup_in_recovery();
    } else if (++dupacks_ == kDupAckThreshold) {
      recover_ = snd_nxt_ - 1;
      dup_credit_ = kDupAckThreshold;
      dups_since_retx_ = 0;
      enter_loss_recovery();
      retransmit_front(false);
    }
    pump();
  }
  // Stale cumulative acks are ignored.
}

void Sender::on_rto_timer() {
  rto_armed_ = false;
  apply_rto_backoff();
  dupacks_ = 0;
  dup_credit_ = 0;
  recover_ = snd_nxt_ - 1;

  rto_backoff_ = std::min(rto_backoff_ + 1, 8);
  const double rto = std::min(rtt_.rto() * std::exp2(rto_backoff_), kMaxRto);
  retransmit_front(true);
  env_.arm_rto(id_, rto);
  rto_armed_ = true;
}

void Sender::log_reduction(ReductionCause cause) {
  reductions_.push_back(ReductionEvent{env_.now_s(), cause, snd_una_});
}

void Sender::log_classification(DropCause predicted) {
  classifications_.push_back(
      ClassificationEvent{env_.now_s(), snd_una_, predicted});
}

}  // namespace tibias
