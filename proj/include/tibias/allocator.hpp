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

#ifndef TIBIAS_ALLOCATOR_HPP
#define TIBIAS_ALLOCATOR_HPP

#include <cstdint>
#include <functional>
#include <map>

#include "tibias/core_types.hpp"
#include "tibias/metadata.hpp"

namespace tibias {

// Similarity-based bandwidth allocation: each flow's interest rate is
// its similarity-weighted share of the estimated bandwidth plus a gain
// term pulling the flow's current rate toward that share.

/// Unclamped interest rate in bytes/s (may be negative):
///   sim * (BE/T) + k * ((BE/T) - cwnd * seg_size / rtt).
double raw_sir(double sim, double be, std::int64_t t_connections,
               double cwnd_segments, std::int64_t seg_size, double rtt,
               double k);

/// Similarity-proportional rate ceiling.
double sim_cap(double sim, double be);

/// Clamps a raw interest rate into [0, cap].
double clamp_sir(double raw, double cap);

/// Connection tracking at the intermediate node. Membership changes
/// re-advertise (T, sim) plus the node's available bandwidth to every
/// active sender; the simulation wires `advertise` to the control-plane
/// delivery path.
class ConnectionRegistry {
 public:
  using AdvertiseFn = std::function<void(FlowId, std::int64_t t, double sim)>;

  void set_advertise(AdvertiseFn fn) { advertise_ = std::move(fn); }

  void join(FlowId flow, double sim, HandshakeService& hs,
            MetadataLedger& ledger);
  void leave(FlowId flow, HandshakeService& hs, MetadataLedger& ledger);

  std::int64_t t_connections() const {
    return static_cast<std::int64_t>(sims_.size());
  }
  double sim_of(FlowId flow) const { return sims_.at(flow); }

 private:
  void broadcast(HandshakeService& hs, MetadataLedger& ledger);

  std::map<FlowId, double> sims_;
  AdvertiseFn advertise_;
};

}  // namespace tibias

#endif  // TIBIAS_ALLOCATOR_HPP
