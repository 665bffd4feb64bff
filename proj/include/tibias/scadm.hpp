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

#ifndef TIBIAS_SCADM_HPP
#define TIBIAS_SCADM_HPP

#include <cstdint>
#include <optional>

#include "tibias/allocator.hpp"
#include "tibias/bandwidth_estimator.hpp"
#include "tibias/sender.hpp"

namespace tibias {

/// Segments that a rate sustains over one RTT, floored, at least 1.
std::int64_t window_from_rate(double rate, double rtt, std::int64_t seg_size);

struct ScasParams {
  double epsilon = 0.3;    // half-width fraction of the target band
  double gamma_dec = 0.5;  // additive term of the decrease step
  double gamma_inc = 0.8;  // multiplier of the increase step
  std::int64_t seg_size = 1500;
  std::int64_t max_window = 4096;
};

/// One socially-aware congestion-avoidance step. The window moves toward
/// the band around S = window_from_rate(sir): inside the band it is left
/// alone; above it shrinks by |sir - be| * rtt / seg + gamma_dec; below
/// it grows by at least one segment. Integer result, never below 1.
double scas_adjust(double cwnd, double sir, double be, double rtt,
                   const ScasParams& p);

enum class SdsDecision : std::uint8_t {
  kWirelessHold,      // window within the band: retransmit only
  kWirelessIncrease,  // window under the band: random loss, grow
  kCongestionDecrease // window over the band: congestion, shrink
};

/// Loss differentiation on the third duplicate ack.
SdsDecision sds_classify(double cwnd, double sir, double rtt,
                         const ScasParams& p);

/// Socially-aware sender: slow start, SCAS avoidance, SDS loss
/// differentiation with explicit retransmission (no unconditional
/// halving), and RTO fallback to slow start.
class TibiasSender : public Sender {
 public:
  TibiasSender(FlowId id, SenderEnv& env, const ScasParams& params, double k);

  void on_advertisement(std::int64_t t, double sim, double net_bw) override;

  std::optional<double> sir() const { return sir_; }
  const BandwidthEstimator& bem() const { return bem_; }

 protected:
  void grow_on_new_ack(std::int64_t newly_acked) override;
  void enter_loss_recovery() override;
  void on_dup_in_recovery() override {}
  void on_partial_ack(std::int64_t /*newly_acked*/) override {}
  void on_full_ack() override;
  void apply_rto_backoff() override;
  void on_estimates(const Ack& ack, std::int64_t newly) override;

 private:
  void maybe_refresh_sir();
  void refresh_sir(bool force, bool discounted);
  std::optional<double> available_rate() const;
  std::optional<double> network_estimate(bool discounted) const;

  ScasParams params_;
  double k_;
  BandwidthEstimator bem_;
  std::optional<std::int64_t> t_conn_;
  double sim_ = 0.0;
  double net_bw_ = 0.0;  // advertised by the intermediate node
  std::optional<double> sir_;
  double last_scas_s_ = -1.0;
  double last_sir_refresh_s_ = -1.0;
  bool before_first_loss_ = true;
};

}  // namespace tibias

#endif  // TIBIAS_SCADM_HPP
