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

#ifndef TIBIAS_LINK_HPP
#define TIBIAS_LINK_HPP

#include <cstdint>

#include "tibias/core_types.hpp"
#include "tibias/rng.hpp"
#include "tibias/sim_time.hpp"

namespace tibias {

/// Lossy point-to-point link parameters.
struct LinkSpec {
  double bandwidth_bps = 0.0;  // bytes per second
  double prop_delay_s = 0.0;
  double loss_prob = 0.0;

  SimTime serialization_delay(std::int64_t size_bytes) const {
    return SimTime::from_seconds(static_cast<double>(size_bytes) /
                                 bandwidth_bps);
  }
};

struct DeliveryOutcome {
  bool delivered = false;
  SimTime arrival;  // valid when delivered
};

/// One traversal of a segment over `link` departing at `depart`.
/// Consumes exactly one RNG draw; a lost traversal is a wireless drop.
DeliveryOutcome transmit(const Segment& seg, const LinkSpec& link,
                         SimTime depart, RngStream& rng);

}  // namespace tibias

#endif  // TIBIAS_LINK_HPP
