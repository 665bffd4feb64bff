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

#include "tibias/allocator.hpp"

#include <algorithm>
#include <cassert>

namespace tibias {

double raw_sir(double sim, double be, std::int64_t t_connections,
               double cwnd_segments, std::int64_t seg_size, double rtt,
               double k) {
  assert(t_connections >= 1);
  assert(rtt > 0.0);
  const double share = be / static_cast<double>(t_connections);
  const double flow_rate =
      cwnd_segments * static_cast<double>(seg_size) / rtt;
  return sim * share + k * (share - flow_rate);
}

double sim_cap(double sim, double be) { return sim * be; }

double clamp_sir(double raw, double cap) {
  assert(cap >= 0.0);
  return std::min(std::max(raw, 0.0), cap);
}

void ConnectionRegistry::join(FlowId flow, double sim, HandshakeService& hs,
                              MetadataLedger& ledger) {
  sims_[flow] = sim;
  broadcast(hs, ledger);
}

void ConnectionRegistry::leave(FlowId flow, HandshakeService& hs,
                               MetadataLedger& ledger) {
  sims_.erase(flow);
  broadcast(hs, ledger);
}

void ConnectionRegistry::broadcast(HandshakeService& hs,
                                   MetadataLedger& ledger) {
  const std::int64_t t = t_connections();
  for (const auto& [flow, sim] : sims_) {
    hs.charge_advertisement(ledger);
    if (advertise_) advertise_(flow, t, sim);
  }
}

}  // namespace tibias
