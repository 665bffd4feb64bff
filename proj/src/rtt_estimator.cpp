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

#include "tibias/rtt_estimator.hpp"

#include <algorithm>
#include <cmath>

namespace tibias {

void RttEstimator::add_sample(double rtt_s) {
  if (samples_ == 0) {
    srtt_ = rtt_s;
    rttvar_ = rtt_s / 2.0;
    rtt_min_ = rtt_s;
  } else {
    rttvar_ = 0.75 * rttvar_ + 0.25 * std::abs(srtt_ - rtt_s);
    srtt_ = 0.875 * srtt_ + 0.125 * rtt_s;
    rtt_min_ = std::min(rtt_min_, rtt_s);
  }
  last_ = rtt_s;
  ++samples_;
  rto_ = std::clamp(srtt_ + 4.0 * rttvar_, kMinRto, kMaxRto);
}

}  // namespace tibias
