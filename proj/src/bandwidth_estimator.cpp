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

#include "tibias/bandwidth_estimator.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace tibias {

std::optional<double> send_rate(double cwnd_segments, std::int64_t seg_size,
                                double rtt_min) {
  if (rtt_min <= 0.0) return std::nullopt;
  assert(cwnd_segments >= 1.0);
  return cwnd_segments * static_cast<double>(seg_size) / rtt_min;
}

double sample_interval(double send_rate, double be_prev, double rtt) {
  assert(send_rate > 0.0);
  return (send_rate - be_prev) * rtt / send_rate;
}

double sample_bw(double ack_data_bytes, double t_m) {
  assert(t_m > 0.0);
  return ack_data_bytes / t_m;
}

double coefficient(double cwnd_bytes, double ack_data_bytes) {
  assert(4.0 * cwnd_bytes + ack_data_bytes > 0.0);
  return (4.0 * cwnd_bytes - ack_data_bytes) /
         (4.0 * cwnd_bytes + ack_data_bytes);
}

double blend_estimate(double sigma, double be_prev, double be_s) {
  return sigma * be_prev + (1.0 - sigma) * be_s;
}

void BandwidthEstimator::on_ack(double now_s, std::int64_t acked_bytes,
                                double cwnd_segments, double rtt_min,
                                double rtt_avg) {
  ack_history_.emplace_back(now_s, acked_bytes);
  if (rtt_avg <= 0.0) return;  // no RTT sample yet; inactive

  active_ = true;
  bootstrap_ = static_cast<double>(seg_size_) / rtt_avg;
  const double be_prev = has_sample_ ? be_ : bootstrap_;

  const auto sr = send_rate(cwnd_segments, seg_size_, rtt_min);
  const double t_m = sample_interval(*sr, be_prev, rtt_avg);

  // The interval never exceeds rtt_avg, so older history is dead weight.
  const double horizon = now_s - 2.0 * rtt_avg;
  while (!ack_history_.empty() && ack_history_.front().first < horizon) {
    ack_history_.pop_front();
  }

  // The interval formula goes non-positive once the estimate has caught
  // up with the send rate; holding the value there leaves the estimator
  // frozen on stale optimism whenever the window later shrinks. The
  // magnitude of the gap is taken instead, floored at one smoothed RTT:
  // windows shorter than a few ack gaps quantize the sample badly (one
  // ack more or less swings the rate by tens of percent).
  if (t_m == 0.0) return;
  const double interval = std::max(std::abs(t_m), rtt_avg);

  double ack_data = 0.0;
  for (auto it = ack_history_.rbegin(); it != ack_history_.rend(); ++it) {
    if (it->first < now_s - interval) break;
    ack_data += static_cast<double>(it->second);
  }

  const double be_s = sample_bw(ack_data, interval);
  sigma_ = coefficient(cwnd_segments * static_cast<double>(seg_size_),
                       ack_data);
  be_ = has_sample_ ? blend_estimate(sigma_, be_prev, be_s) : be_s;
  last_sample_ = be_s;
  has_sample_ = true;
}

std::optional<double> BandwidthEstimator::be() const {
  if (has_sample_) return be_;
  if (active_) return bootstrap_;
  return std::nullopt;
}

}  // namespace tibias
