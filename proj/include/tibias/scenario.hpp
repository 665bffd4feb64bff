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

#ifndef TIBIAS_SCENARIO_HPP
#define TIBIAS_SCENARIO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace tibias {

enum class Protocol : std::uint8_t { kTibias, kReno };

const char* to_string(Protocol p);

/// Declarative experiment description. Defaults are the reference
/// configuration: five bulk flows over a 750 kB/s (6 Mbit/s) star with
/// 50 ms links, a 50 kB drop-tail buffer and a 2000 s horizon.
struct ScenarioConfig {
  Protocol protocol = Protocol::kTibias;
  std::int64_t n_connections = 5;         // 1..20
  double duration_s = 2000.0;
  std::int64_t seg_size = 1500;           // bytes
  double access_bandwidth = 750000.0;     // bytes/s per sender link
  double bottleneck_bandwidth = 750000.0; // bytes/s shared link
  double prop_delay_s = 0.05;             // per link
  double loss_prob = 0.0;
  std::int64_t queue_capacity = 50000;    // bytes
  double threshld = 0.6;
  double epsilon = 0.3;
  double gamma_dec = 0.5;
  double gamma_inc = 0.8;
  double k = 0.5;
  std::int64_t max_window = 4096;         // receiver window, segments
  double start_spread_s = 0.5;            // flow start times jitter range
  std::uint64_t seed = 1;
  std::string profiles;                   // path; empty = identical profiles

  /// Canonical key=value rendering of every resolved field.
  std::string canonical_text() const;
  /// FNV-1a hash of the canonical text, as 16 hex digits.
  std::string config_hash() const;
};

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses line-oriented `key = value` text. Unknown or repeated keys and
/// out-of-range values raise ScenarioError with the offending line
/// number; an empty stream yields the defaults.
ScenarioConfig parse_scenario(std::istream& in);
ScenarioConfig parse_scenario_text(const std::string& text);
ScenarioConfig load_scenario(const std::string& path);

/// Range validation shared by the parser and programmatic construction.
void validate(const ScenarioConfig& cfg);

}  // namespace tibias

#endif  // TIBIAS_SCENARIO_HPP
