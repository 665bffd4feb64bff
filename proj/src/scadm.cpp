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

#include "tibias/scadm.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace tibias {

std::int64_t window_from_rate(double rate, double rtt,
                              std::int64_t seg_size) {
  assert(rtt > 0.0 && seg_size > 0);
  const double w = std::floor(rate * rtt / static_cast<double>(seg_size));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(w));
}

double scas_adjust(double cwnd, double sir, double be, double rtt,
                   const ScasParams& p) {
  const double s =
      static_cast<double>(window_from_rate(sir, rtt, p.seg_size));
  const double lo = (1.0 - p.epsilon) * s;
  const double hi = (1.0 + p.epsilon) * s;
  if (cwnd > lo && cwnd < hi) return cwnd;

  const double dd = std::abs(sir - be);
  const double dd_window = dd * rtt / static_cast<double>(p.seg_size);
  double next;
  if (cwnd >= hi) {
    next = cwnd - (dd_window + p.gamma_dec);
  } else {
    // At most doubling per step: a flight that jumps straight to a
    // far-away target carries more simultaneous losses than cumulative
    // acks can recover from.
    next = cwnd + std::min(std::max(dd_window * p.gamma_inc, 1.0), cwnd);
  }
  next = std::floor(next);
  next = std::min(next, static_cast<double>(p.max_window));
  return std::max(1.0, next);
}

SdsDecision sds_classify(double cwnd, double sir, double rtt,
                         const ScasParams& p) {
  const double s =
      static_cast<double>(window_from_rate(sir, rtt, p.seg_size));
  if (cwnd >= (1.0 + p.epsilon) * s) return SdsDecision::kCongestionDecrease;
  if (cwnd <= (1.0 - p.epsilon) * s) return SdsDecision::kWirelessIncrease;
  return SdsDecision::kWirelessHold;
}

TibiasSender::TibiasSender(FlowId id, SenderEnv& env,
                           const ScasParams& params, double k)
    : Sender(id, env, params.seg_size, params.max_window),
      params_(params),
      k_(k),
      bem_(params.seg_size) {}

void TibiasSender::on_advertisement(std::int64_t t, double sim,
                                    double net_bw) {
  t_conn_ = t;
  sim_ = sim;
  net_bw_ = net_bw;
  maybe_refresh_sir();
}

std::optional<double> TibiasSender::available_rate() const {
  // The flow-scale available rate entering the adjustment terms. The
  // smoothed estimate lags for dozens of acks after a window reduction;
  // whatever it claims, the window cannot currently carry more than its
  // own rate, and a stale high reading would collapse the rate gap that
  // sizes the rebuild steps.
  const auto be = bem_.be();
  if (!be || !rtt_.has_sample()) return be;
  const double window_rate =
      cwnd_ * static_cast<double>(seg_size_) / rtt_.srtt();
  return std::min(*be, window_rate);
}

std::optional<double> TibiasSender::network_estimate(bool discounted) const {
  // Overall available bandwidth of the network: the intermediate node's
  // advertised link rate. When judging a loss, the rate is discounted
  // by the unloaded-to-latest RTT ratio, so queue buildup shows up as
  // shrunken availability at exactly the moment it matters; the steady
  // allocation targets the nominal share. Until the advertisement
  // arrives, the flow's own estimate scaled by the connection count
  // stands in. The per-flow estimator alone cannot serve here: it
  // tracks the flow's own share, and a share-of-own-share allocation
  // starves low-similarity flows.
  if (!t_conn_) return std::nullopt;
  if (net_bw_ > 0.0) {
    double queue_discount = 1.0;
    if (discounted && rtt_.has_sample() &&
        rtt_.last_sample() > rtt_.rtt_min()) {
      queue_discount = rtt_.rtt_min() / rtt_.last_sample();
    }
    return net_bw_ * queue_discount;
  }
  const auto be = bem_.be();
  if (!be) return std::nullopt;
  return static_cast<double>(*t_conn_) * *be;
}

void TibiasSender::maybe_refresh_sir() { refresh_sir(false, false); }

void TibiasSender::refresh_sir(bool force, bool discounted) {
  if (!t_conn_ || *t_conn_ < 1 || !rtt_.has_sample()) return;
  const auto be = network_estimate(discounted);
  if (!be) return;
  const double now = env_.now_s();
  if (!force && sir_ && last_sir_refresh_s_ >= 0.0 &&
      now - last_sir_refresh_s_ < rtt_.srtt()) {
    return;  // at most one refresh per RTT
  }
  // Rate conversions use the minimum RTT: the unloaded window keeps the
  // target steady while queueing inflates the average, so a congested
  // flow sees its allocation fall rather than chase the delay.
  const double raw = raw_sir(sim_, *be, *t_conn_, cwnd_, seg_size_,
                             rtt_.rtt_min(), k_);
  sir_ = clamp_sir(raw, sim_cap(sim_, *be));
  last_sir_refresh_s_ = now;

  // Initial slow start hands over straight to the avoidance band once
  // the allocation is known, rather than blasting to the receiver
  // window and detonating the shared queue in lockstep with the other
  // starters. Timeouts re-arm the standard halved threshold.
  if (before_first_loss_ && phase_ == Phase::kSlowStart) {
    const double s = static_cast<double>(
        window_from_rate(*sir_, rtt_.rtt_min(), params_.seg_size));
    const double handoff = std::floor((1.0 + 2.0 * params_.epsilon / 3.0) * s);
    ssthresh_ = std::max(2.0, std::min(ssthresh_, handoff));
  }
}

void TibiasSender::on_estimates(const Ack& ack, std::int64_t /*newly*/) {
  bem_.on_ack(env_.now_s(), ack.acked_bytes, std::floor(cwnd_),
              rtt_.has_sample() ? rtt_.rtt_min() : 0.0,
              rtt_.has_sample() ? rtt_.srtt() : 0.0);
  maybe_refresh_sir();
}

void TibiasSender::grow_on_new_ack(std::int64_t newly_acked) {
  if (phase_ == Phase::kSlowStart) {
    cwnd_ = std::min(cwnd_ + static_cast<double>(newly_acked),
                     static_cast<double>(max_window_));
    if (cwnd_ >= ssthresh_) phase_ = Phase::kAvoidance;
    return;
  }
  // Avoidance: one adjustment per RTT worth of acks.
  const double now = env_.now_s();
  if (last_scas_s_ >= 0.0 && now - last_scas_s_ < rtt_.srtt()) return;
  last_scas_s_ = now;
  const auto be = available_rate();
  if (sir_ && be) {
    const double before = cwnd_;
    cwnd_ = scas_adjust(cwnd_, *sir_, *be, rtt_.rtt_min(), params_);
    if (env_.tracing()) {
      env_.trace_line(
          id_, "event=scas cwnd=" + std::to_string(before) + "->" +
                   std::to_string(cwnd_) + " sir=" + std::to_string(*sir_) +
                   " be=" + std::to_string(*be) + " s=" +
                   std::to_string(window_from_rate(*sir_, rtt_.rtt_min(),
                                                   params_.seg_size)));
    }
  } else {
    // No interest rate yet: behave like plain congestion avoidance.
    cwnd_ = std::min(cwnd_ + 1.0, static_cast<double>(max_window_));
  }
}

void TibiasSender::enter_loss_recovery() {
  before_first_loss_ = false;
  // Judge the loss against the availability the duplicate acks just
  // reported (queue buildup discounts it).
  refresh_sir(true, true);
  const auto be = available_rate();
  if (!sir_ || !be || !rtt_.has_sample()) {
    // Fall back to conventional fast retransmit: halve and log.
    ssthresh_ = std::max(std::floor(cwnd_ / 2.0), 2.0);
    cwnd_ = ssthresh_;
    log_reduction(ReductionCause::kFastRetransmit);
    phase_ = Phase::kRecovery;
    return;
  }

  const double rtt = rtt_.rtt_min();
  const SdsDecision decision = sds_classify(cwnd_, *sir_, rtt, params_);
  const double dd_window =
      std::abs(*sir_ - *be) * rtt / static_cast<double>(params_.seg_size);
  switch (decision) {
    case SdsDecision::kWirelessHold:
      log_classification(DropCause::kWireless);
      break;
    case SdsDecision::kWirelessIncrease:
      log_classification(DropCause::kWireless);
      cwnd_ = std::min(std::floor(cwnd_ + std::max(dd_window * params_.gamma_inc,
                                                   1.0)),
                       static_cast<double>(max_window_));
      break;
    case SdsDecision::kCongestionDecrease:
      log_classification(DropCause::kCongestion);
      cwnd_ = std::max(1.0, std::floor(cwnd_ - (dd_window + params_.gamma_dec)));
      log_reduction(ReductionCause::kClassifiedCongestion);
      break;
  }
  phase_ = Phase::kRecovery;
}

void TibiasSender::on_full_ack() {
  phase_ = Phase::kAvoidance;
  // Leave the loss-time discounted rate behind on the way out.
  refresh_sir(true, false);
}

void TibiasSender::apply_rto_backoff() {
  before_first_loss_ = false;
  ssthresh_ = std::max(std::floor(cwnd_ / 2.0), 2.0);
  cwnd_ = 1.0;
  phase_ = Phase::kSlowStart;
  log_reduction(ReductionCause::kRto);
}

}  // namespace tibias
