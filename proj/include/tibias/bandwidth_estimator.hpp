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

#ifndef TIBIAS_BANDWIDTH_ESTIMATOR_HPP
#define TIBIAS_BANDWIDTH_ESTIMATOR_HPP

#include <cstdint>
#include <deque>
#include <optional>

namespace tibias {

// Per-flow available-bandwidth estimation, updated on each new
// cumulative ack.
//
// The estimate blends the previous value with a fresh rate sample:
//   SR   = cwnd * seg_size / rtt_min          (momentary send rate)
//   t    = (SR - BE_prev) * rtt / SR          (sampling interval)
//   BE_s = acked bytes within the last t seconds / t
//   sigma = (4W - A) / (4W + A)               (W = cwnd bytes, A = acked)
//   BE   = sigma * BE_prev + (1 - sigma) * BE_s
// The interval enters by magnitude (floored at a quarter RTT), so the
// estimator keeps sampling when the estimate overtakes the send rate
// instead of freezing on a stale value.

/// Momentary send rate in bytes/s; unavailable until an RTT minimum has
/// been measured.
std::optional<double> send_rate(double cwnd_segments, std::int64_t seg_size,
                                double rtt_min);

/// Sampling interval in seconds; non-positive values mean "skip".
double sample_interval(double send_rate, double be_prev, double rtt);

/// Rate sample in bytes/s over a positive interval.
double sample_bw(double ack_data_bytes, double t_m);

/// Smoothing coefficient in (-1, 1] from the window size and the bytes
/// acknowledged over the sampling interval.
double coefficient(double cwnd_bytes, double ack_data_bytes);

/// One smoothing step of the estimate.
double blend_estimate(double sigma, double be_prev, double be_s);

class BandwidthEstimator {
 public:
  explicit BandwidthEstimator(std::int64_t seg_size) : seg_size_(seg_size) {}

  /// Feeds one new cumulative ack. `rtt_min`/`rtt_avg` come from the
  /// flow's RTT estimator; passing `rtt_avg <= 0` marks the estimator
  /// inactive (no RTT sample yet).
  void on_ack(double now_s, std::int64_t acked_bytes, double cwnd_segments,
              double rtt_min, double rtt_avg);

  /// Current estimate: the blended value once a sample exists, the
  /// one-segment-per-RTT floor before that, nothing until RTT is known.
  std::optional<double> be() const;

  bool has_sample() const { return has_sample_; }
  double sigma() const { return sigma_; }
  double last_sample() const { return last_sample_; }

 private:
  std::int64_t seg_size_;
  bool has_sample_ = false;
  double be_ = 0.0;
  double sigma_ = 1.0;
  double last_sample_ = 0.0;
  double bootstrap_ = 0.0;  // seg_size / rtt_avg, refreshed until sampled
  bool active_ = false;
  std::deque<std::pair<double, std::int64_t>> ack_history_;
};

}  // namespace tibias

#endif  // TIBIAS_BANDWIDTH_ESTIMATOR_HPP
