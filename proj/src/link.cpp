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

#include "tibias/link.hpp"

#include <cassert>

namespace tibias {

DeliveryOutcome transmit(const Segment& seg, const LinkSpec& link,
                         SimTime depart, RngStream& rng) {
  assert(link.bandwidth_bps > 0.0);
  const bool lost = rng.bernoulli(link.loss_prob);
  DeliveryOutcome out;
  out.delivered = !lost;
  out.arrival = depart + link.serialization_delay(seg.size_bytes) +
                SimTime::from_seconds(link.prop_delay_s);
  return out;
}

}  // namespace tibias
