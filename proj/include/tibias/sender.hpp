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

#ifndef TIBIAS_SENDER_HPP
#define TIBIAS_SENDER_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tibias/core_types.hpp"
#include "tibias/rtt_estimator.hpp"

namespace tibias {

constexpr int kDupAckThreshold = 3;
constexpr double kInitialWindow = 1.0;  // slow-start initial count, 1 MSS

enum class Phase : std::uint8_t { kSlowStart, kAvoidance, kRecovery };

enum class ReductionCause : std::uint8_t {
  kClassifiedCongestion,  // loss-differentiation decided congestion
  kFastRetransmit,        // unconditional halving on 3rd dupack
  kRto,
};

struct ReductionEvent {
  double time_s = 0.0;
  ReductionCause cause = ReductionCause::kRto;
  SeqNo trigger_seq = 0;
};

struct ClassificationEvent {
  double time_s = 0.0;
  SeqNo seq = 0;
  DropCause predicted = DropCause::kCongestion;
};

/// Transport environment a sender drives: the simulation implements
/// segment emission, timer management and the wall clock.
class SenderEnv {
 public:
  virtual ~SenderEnv() = default;
  virtual double now_s() const = 0;
  virtual void emit_segment(FlowId flow, SeqNo seq, bool is_retransmit) = 0;
  virtual void arm_rto(FlowId flow, double delay_s) = 0;  // replaces any armed timer
  virtual void cancel_rto(FlowId flow) = 0;
  // Event-trace hooks; senders only build lines when tracing is on.
  virtual bool tracing() const { return false; }
  virtual void trace_line(FlowId /*flow*/, const std::string& /*line*/) {}
};

/// Common sender-side transport machinery: sequence tracking, duplicate
/// ack counting, NewReno-style recovery bookkeeping and RTO backoff.
/// Window policy lives in the subclasses.
class Sender {
 public:
  Sender(FlowId id, SenderEnv& env, std::int64_t seg_size,
         std::int64_t max_window);
  virtual ~Sender() = default;

  void start();
  void on_ack(const Ack& ack);
  void on_rto_timer();

  /// Control-plane advertisement from the intermediate node: connection
  /// count, matched similarity and the node's available bandwidth.
  virtual void on_advertisement(std::int64_t /*t*/, double /*sim*/,
                                double /*net_bw*/) {}

  FlowId id() const { return id_; }
  double cwnd() const { return cwnd_; }
  Phase phase() const { return phase_; }
  double ssthresh() const { return ssthresh_; }
  const RttEstimator& rtt() const { return rtt_; }
  std::int64_t segments_emitted() const { return segments_emitted_; }
  std::int64_t retransmit_count() const { return retransmit_count_; }
  const std::vector<ReductionEvent>& reductions() const { return reductions_; }
  const std::vector<ClassificationEvent>& classifications() const {
    return classifications_;
  }

 protected:
  // Policy hooks.
  virtual void grow_on_new_ack(std::int64_t newly_acked) = 0;
  virtual void enter_loss_recovery() = 0;
  virtual void on_dup_in_recovery() = 0;
  virtual void on_partial_ack(std::int64_t newly_acked) = 0;
  virtual void on_full_ack() = 0;
  virtual void apply_rto_backoff() = 0;
  virtual void on_estimates(const Ack& /*ack*/, std::int64_t /*newly*/) {}
  virtual std::int64_t send_allowance() const;

  void log_reduction(ReductionCause cause);
  void log_classification(DropCause predicted);
  void pump();

  FlowId id_;
  SenderEnv& env_;
  std::int64_t seg_size_;
  std::int64_t max_window_;

  double cwnd_ = kInitialWindow;
  double ssthresh_;
  Phase phase_ = Phase::kSlowStart;
  RttEstimator rtt_;

  SeqNo snd_una_ = 0;
  SeqNo snd_nxt_ = 0;
  int dupacks_ = 0;
  int dups_since_retx_ = 0;
  SeqNo recover_ = -1;
  std::int64_t dup_credit_ = 0;  // segments known to have left the network

 private:
  void retransmit_front(bool force);
  void manage_rto_after_ack();

  int rto_backoff_ = 0;
  bool rto_armed_ = false;
  std::unordered_map<SeqNo, double> last_retx_at_;

  std::int64_t segments_emitted_ = 0;
  std::int64_t retransmit_count_ = 0;
  std::vector<ReductionEvent> reductions_;
  std::vector<ClassificationEvent> classifications_;
};

}  // namespace tibias

#endif  // TIBIAS_SENDER_HPP
