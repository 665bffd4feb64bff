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

#ifndef TIBIAS_RTT_ESTIMATOR_HPP
#define TIBIAS_RTT_ESTIMATOR_HPP

namespace tibias {

constexpr double kMinRto = 0.5;
constexpr double kMaxRto = 64.0;

/// Smoothed RTT and retransmission timeout per RFC 6298:
/// srtt <- 7/8 srtt + 1/8 R, rttvar <- 3/4 rttvar + 1/4 |srtt - R|,
/// rto = srtt + 4 rttvar clamped to the scenario bounds.
class RttEstimator {
 public:
  void add_sample(double rtt_s);

  bool has_sample() const { return samples_ > 0; }
  double srtt() const { return srtt_; }
  double rtt_min() const { return rtt_min_; }
  double last_sample() const { return last_; }
  double rto() const { return rto_; }

 private:
  long samples_ = 0;
  double srtt_ = 0.0;
  double rttvar_ = 0.0;
  double rtt_min_ = 0.0;
  double last_ = 0.0;
  double rto_ = 3.0;  // pre-sample default, RFC 6298 section 2
};

}  // namespace tibias

#endif  // TIBIAS_RTT_ESTIMATOR_HPP
