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

#include "tibias/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace tibias {

const char* to_string(Protocol p) {
  return p == Protocol::kTibias ? "tibias" : "reno";
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ScenarioError("scenario line " + std::to_string(line_no) + ": " +
                      what);
}

double parse_double(const std::string& value, int line_no) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) fail(line_no, "trailing junk in '" + value + "'");
    return v;
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception&) {
    fail(line_no, "not a number: '" + value + "'");
  }
}

std::int64_t parse_int(const std::string& value, int line_no) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) fail(line_no, "trailing junk in '" + value + "'");
    return v;
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception&) {
    fail(line_no, "not an integer: '" + value + "'");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string ScenarioConfig::canonical_text() const {
  std::ostringstream os;
  os << "access_bandwidth = " << fmt(access_bandwidth) << '\n'
     << "bottleneck_bandwidth = " << fmt(bottleneck_bandwidth) << '\n'
     << "duration = " << fmt(duration_s) << '\n'
     << "epsilon = " << fmt(epsilon) << '\n'
     << "gamma_dec = " << fmt(gamma_dec) << '\n'
     << "gamma_inc = " << fmt(gamma_inc) << '\n'
     << "k = " << fmt(k) << '\n'
     << "loss_prob = " << fmt(loss_prob) << '\n'
     << "max_window = " << max_window << '\n'
     << "n_connections = " << n_connections << '\n'
     << "profiles = " << profiles << '\n'
     << "prop_delay = " << fmt(prop_delay_s) << '\n'
     << "protocol = " << to_string(protocol) << '\n'
     << "queue_capacity = " << queue_capacity << '\n'
     << "seed = " << seed << '\n'
     << "start_spread = " << fmt(start_spread_s) << '\n'
     << "seg_size = " << seg_size << '\n'
     << "threshld = " << fmt(threshld) << '\n';
  return os.str();
}

std::string ScenarioConfig::config_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : canonical_text()) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

void validate(const ScenarioConfig& cfg) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw ScenarioError("scenario: " + what);
  };
  require(cfg.n_connections >= 1 && cfg.n_connections <= 20,
          "n_connections must be in [1,20]");
  require(cfg.duration_s >= 0.0, "duration must be >= 0");
  require(cfg.seg_size >= 1, "seg_size must be >= 1");
  require(cfg.access_bandwidth > 0.0, "access_bandwidth must be > 0");
  require(cfg.bottleneck_bandwidth > 0.0, "bottleneck_bandwidth must be > 0");
  require(cfg.prop_delay_s >= 0.0, "prop_delay must be >= 0");
  require(cfg.loss_prob >= 0.0 && cfg.loss_prob <= 1.0,
          "loss_prob must be in [0,1]");
  require(cfg.queue_capacity >= cfg.seg_size,
          "queue_capacity must hold at least one segment");
  require(cfg.threshld > 0.0 && cfg.threshld <= 1.0,
          "threshld must be in (0,1]");
  require(cfg.epsilon > 0.0 && cfg.epsilon < 1.0,
          "epsilon must be in (0,1)");
  require(cfg.gamma_dec >= 0.0, "gamma_dec must be >= 0");
  require(cfg.gamma_inc >= 0.0, "gamma_inc must be >= 0");
  require(cfg.k >= 0.0 && cfg.k <= 1.0, "k must be in [0,1]");
  require(cfg.max_window >= 2, "max_window must be >= 2");
  require(cfg.start_spread_s >= 0.0, "start_spread must be >= 0");
}

ScenarioConfig parse_scenario(std::istream& in) {
  ScenarioConfig cfg;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected `key = value`");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) fail(line_no, "expected `key = value`");
    if (!seen.insert(key).second) fail(line_no, "repeated key '" + key + "'");

    if (key == "protocol") {
      if (value == "tibias") cfg.protocol = Protocol::kTibias;
      else if (value == "reno") cfg.protocol = Protocol::kReno;
      else fail(line_no, "protocol must be tibias or reno");
    } else if (key == "n_connections") {
      cfg.n_connections = parse_int(value, line_no);
    } else if (key == "duration") {
      cfg.duration_s = parse_double(value, line_no);
    } else if (key == "seg_size") {
      cfg.seg_size = parse_int(value, line_no);
    } else if (key == "access_bandwidth") {
      cfg.access_bandwidth = parse_double(value, line_no);
    } else if (key == "bottleneck_bandwidth") {
      cfg.bottleneck_bandwidth = parse_double(value, line_no);
    } else if (key == "prop_delay") {
      cfg.prop_delay_s = parse_double(value, line_no);
    } else if (key == "loss_prob") {
      cfg.loss_prob = parse_double(value, line_no);
    } else if (key == "queue_capacity") {
      cfg.queue_capacity = parse_int(value, line_no);
    } else if (key == "threshld") {
      cfg.threshld = parse_double(value, line_no);
    } else if (key == "epsilon") {
      cfg.epsilon = parse_double(value, line_no);
    } else if (key == "gamma_dec") {
      cfg.gamma_dec = parse_double(value, line_no);
    } else if (key == "gamma_inc") {
      cfg.gamma_inc = parse_double(value, line_no);
    } else if (key == "k") {
      cfg.k = parse_double(value, line_no);
    } else if (key == "max_window") {
      cfg.max_window = parse_int(value, line_no);
    } else if (key == "start_spread") {
      cfg.start_spread_s = parse_double(value, line_no);
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(value, line_no));
    } else if (key == "profiles") {
      cfg.profiles = value;
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  try {
    validate(cfg);
  } catch (const ScenarioError& e) {
    throw ScenarioError(std::string(e.what()));
  }
  return cfg;
}

ScenarioConfig parse_scenario_text(const std::string& text) {
  std::istringstream is(text);
  return parse_scenario(is);
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  return parse_scenario(in);
}

}  // namespace tibias
