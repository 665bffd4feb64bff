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

#include "tibias/metadata.hpp"

#include <chrono>

namespace tibias {

std::uint64_t HandshakeService::fingerprint(const Profile& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  for (const Concept& c : p.concepts) {
    feed(c.label);
    for (const std::string& t : c.taxonomy_path) feed(t);
  }
  return h;
}

HandshakeResult HandshakeService::handshake(const Profile& sender,
                                            std::int64_t t,
                                            MetadataLedger& ledger) {
  const std::uint64_t fp = fingerprint(sender);
  auto it = seen_.find(sender.node_id);
  const bool full = it == seen_.end() || it->second != fp;
  seen_[sender.node_id] = fp;

  ++ledger.handshakes;
  if (full) {
    ++ledger.full_exchanges;
    ledger.bytes_exchanged +=
        sender.encoded_size_bytes() + intermediate_.encoded_size_bytes();
  } else {
    ledger.bytes_exchanged += kShortHandshakeBytes + kAdvertisementBytes;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const double sim = profile_sim(sender, intermediate_);
  const auto t1 = std::chrono::steady_clock::now();
  ledger.match_latency_s.push_back(
      std::chrono::duration<double>(t1 - t0).count());

  HandshakeResult res;
  res.sim = sim;
  res.cls = classify(sim, threshld_);
  res.t_reported = t;
  return res;
}

void HandshakeService::charge_advertisement(MetadataLedger& ledger) {
  ++ledger.advertisements;
  ledger.bytes_exchanged += kAdvertisementBytes;
}

}  // namespace tibias
