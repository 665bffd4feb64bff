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

#include "tibias/reno.hpp"

#include <algorithm>
#include <cmath>

namespace tibias {

void RenoSender::grow_on_new_ack(std::int64_t newly_acked) {
  if (phase_ == Phase::kSlowStart) {
    cwnd_ = std::min(cwnd_ + static_cast<double>(newly_acked),
                     static_cast<double>(max_window_));
    if (cwnd_ >= ssthresh_) phase_ = Phase::kAvoidance;
    return;
  }
  // Congestion avoidance: one segment per window per RTT (RFC 5681).
  cwnd_ = std::min(cwnd_ + static_cast<double>(newly_acked) / cwnd_,
                   static_cast<double>(max_window_));
}

void RenoSender::enter_loss_recovery() {
  ssthresh_ = std::max(std::floor(cwnd_ / 2.0), 2.0);
  cwnd_ = ssthresh_ + 3.0;
  phase_ = Phase::kRecovery;
  // Reno treats every loss as congestion.
  log_classification(DropCause::kCongestion);
  log_reduction(ReductionCause::kFastRetransmit);
}

void RenoSender::on_dup_in_recovery() { cwnd_ += 1.0; }

void RenoSender::on_partial_ack(std::int64_t newly_acked) {
  // RFC 6582: deflate by the amount acked, add back one segment.
  cwnd_ = std::max(1.0, cwnd_ - static_cast<double>(newly_acked) + 1.0);
}

void RenoSender::on_full_ack() {
  cwnd_ = ssthresh_;
  phase_ = Phase::kAvoidance;
}

void RenoSender::apply_rto_backoff() {
  ssthresh_ = std::max(std::floor(cwnd_ / 2.0), 2.0);
  cwnd_ = 1.0;
  phase_ = Phase::kSlowStart;
  log_reduction(ReductionCause::kRto);
}

std::int64_t RenoSender::send_allowance() const {
  // Recovery inflation lives in cwnd itself; outside recovery the
  // limited-transmit allowance still applies.
  std::int64_t allowance = static_cast<std::int64_t>(std::floor(cwnd_));
  if (phase_ != Phase::kRecovery) allowance += std::min(dupacks_, 2);
  return allowance;
}

}  // namespace tibias
