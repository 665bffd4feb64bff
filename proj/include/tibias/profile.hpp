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

#ifndef TIBIAS_PROFILE_HPP
#define TIBIAS_PROFILE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tibias {

/// One interest concept. `taxonomy_path` holds the ancestor chain from
/// the taxonomy root down to the concept itself; empty means the concept
/// participates in exact-label matching only.
struct Concept {
  std::string label;  // case-folded
  std::vector<std::string> taxonomy_path;
};

/// A node's ordered interest list. Labels are unique within a profile.
struct Profile {
  std::string node_id;
  std::vector<Concept> concepts;

  /// Wire size of a full profile exchange: 16-byte header plus a 2-byte
  /// length and the label bytes per concept.
  std::int64_t encoded_size_bytes() const;
};

enum class SimilarityClass : std::uint8_t { kMaxMatch, kLessMatch, kNoMatch };

const char* to_string(SimilarityClass c);

/// Concept-level similarity: 1 for equal labels; the Wu-Palmer path
/// kernel 2*depth(lca)/(depth_a+depth_b) when both concepts carry
/// taxonomy paths; 0 when there is no relation.
double concept_sim(const Concept& a, const Concept& b);

/// Directed profile similarity: the mean over lx's concepts of the best
/// concept match in ly. Not symmetric. Empty lx yields 0.
double profile_sim(const Profile& lx, const Profile& ly);

/// Three-way classification of a similarity value against the scenario
/// threshold. Requires sim in [0,1] and 0 < threshld <= 1; a value above
/// the threshold is a maximum match, zero is no match, anything else a
/// lesser match (the boundary sim == threshld folds into the latter).
SimilarityClass classify(double sim, double threshld);

/// Parses the line-oriented profile format: blank-line separated blocks
/// of `node <id>` followed by `concept <label> [root/.../label]` lines.
/// Throws std::runtime_error with a line number on malformed input.
std::vector<Profile> parse_profiles(std::istream& in);
std::vector<Profile> load_profiles(const std::string& path);

}  // namespace tibias

#endif  // TIBIAS_PROFILE_HPP
