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

#ifndef TIBIAS_METADATA_HPP
#define TIBIAS_METADATA_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tibias/profile.hpp"

namespace tibias {

// Control-plane message sizes. A short handshake is a bare header; the
// reply carries the piggybacked connection count, the matched
// similarity and the intermediate node's available bandwidth, one
// 8-byte field each.
constexpr std::int64_t kShortHandshakeBytes = 16;
constexpr std::int64_t kAdvertisementBytes = 16 + 8 + 8 + 8;

/// Social-metadata cost accounting for one run.
struct MetadataLedger {
  std::int64_t handshakes = 0;
  std::int64_t full_exchanges = 0;
  std::int64_t advertisements = 0;
  std::int64_t bytes_exchanged = 0;
  std::vector<double> match_latency_s;  // wall-clock similarity cost
};

struct HandshakeResult {
  double sim = 0.0;
  SimilarityClass cls = SimilarityClass::kNoMatch;
  std::int64_t t_reported = 0;
};

/// Profile matcher sitting at the intermediate node. Remembers which
/// peers it has seen so that an unchanged profile costs only a short
/// handshake on later contacts; full profiles travel only on first
/// contact or after a change.
class HandshakeService {
 public:
  HandshakeService(Profile intermediate, double threshld)
      : intermediate_(std::move(intermediate)), threshld_(threshld) {}

  /// Runs one handshake from `sender`, charging the ledger and
  /// piggybacking the current connection count `t`.
  HandshakeResult handshake(const Profile& sender, std::int64_t t,
                            MetadataLedger& ledger);

  /// Charges one unsolicited (T, sim) advertisement to the ledger.
  void charge_advertisement(MetadataLedger& ledger);

  const Profile& intermediate_profile() const { return intermediate_; }

 private:
  static std::uint64_t fingerprint(const Profile& p);

  Profile intermediate_;
  double threshld_;
  std::unordered_map<std::string, std::uint64_t> seen_;
};

}  // namespace tibias

#endif  // TIBIAS_METADATA_HPP
