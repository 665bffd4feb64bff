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

#include "tibias/profile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tibias {

namespace {

constexpr std::int64_t kProfileHeaderBytes = 16;
constexpr std::int64_t kPerConceptOverheadBytes = 2;

std::string fold_case(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

/// Prefix trie over the taxonomy paths of one profile. Each node keeps
/// the minimum leaf depth found at or below it, which is enough to read
/// off the best Wu-Palmer score against a query path in one descent:
/// for every prefix length l shared with some stored path, the best
/// candidate is 2l/(depth_q + min_depth), and the true maximum over the
/// stored set is the maximum of those candidates.
class PathTrie {
 public:
  void insert(const std::vector<std::string>& path) {
    int node = root();
    int depth = static_cast<int>(path.size());
    min_depth_[node] = std::min(min_depth_[node], depth);
    for (const std::string& token : path) {
      auto [it, fresh] = children_[node].try_emplace(token, -1);
      if (fresh) {
        it->second = static_cast<int>(children_.size());
        children_.emplace_back();
        min_depth_.push_back(std::numeric_limits<int>::max());
      }
      node = it->second;
      min_depth_[node] = std::min(min_depth_[node], depth);
    }
  }

  double best_score(const std::vector<std::string>& query) const {
    if (children_.empty()) return 0.0;
    const double dq = static_cast<double>(query.size());
    double best = 0.0;
    int node = 0;
    int matched = 0;
    for (const std::string& token : query) {
      auto it = children_[node].find(token);
      if (it == children_[node].end()) break;
      node = it->second;
      ++matched;
      best = std::max(best, 2.0 * matched / (dq + min_depth_[node]));
    }
    return best;
  }

  bool empty() const { return children_.empty(); }

 private:
  int root() {
    if (children_.empty()) {
      children_.emplace_back();
      min_depth_.push_back(std::numeric_limits<int>::max());
    }
    return 0;
  }

  std::vector<std::unordered_map<std::string, int>> children_;
  std::vector<int> min_depth_;
};

}  // namespace

std::int64_t Profile::encoded_size_bytes() const {
  std::int64_t total = kProfileHeaderBytes;
  for (const Concept& c : concepts) {
    total += kPerConceptOverheadBytes +
             static_cast<std::int64_t>(c.label.size());
  }
  return total;
}

const char* to_string(SimilarityClass c) {
  switch (c) {
    case SimilarityClass::kMaxMatch: return "max-match";
    case SimilarityClass::kLessMatch: return "less-match";
    case SimilarityClass::kNoMatch: return "no-match";
  }
  return "?";
}

double concept_sim(const Concept& a, const Concept& b) {
  if (a.label == b.label) return 1.0;
  if (a.taxonomy_path.empty() || b.taxonomy_path.empty()) return 0.0;
  const std::size_t n = std::min(a.taxonomy_path.size(),
                                 b.taxonomy_path.size());
  std::size_t lca = 0;
  while (lca < n && a.taxonomy_path[lca] == b.taxonomy_path[lca]) ++lca;
  if (lca == 0) return 0.0;
  return 2.0 * static_cast<double>(lca) /
         static_cast<double>(a.taxonomy_path.size() + b.taxonomy_path.size());
}

double profile_sim(const Profile& lx, const Profile& ly) {
  if (lx.concepts.empty()) return 0.0;

  std::unordered_set<std::string_view> labels;
  labels.reserve(ly.concepts.size());
  PathTrie trie;
  for (const Concept& c : ly.concepts) {
    labels.insert(c.label);
    if (!c.taxonomy_path.empty()) trie.insert(c.taxonomy_path);
  }

  double total = 0.0;
  for (const Concept& c : lx.concepts) {
    if (labels.count(c.label)) {
      total += 1.0;
    } else if (!c.taxonomy_path.empty() && !trie.empty()) {
      total += trie.best_score(c.taxonomy_path);
    }
  }
  return total / static_cast<double>(lx.concepts.size());
}

SimilarityClass classify(double sim, double threshld) {
  if (!(sim >= 0.0 && sim <= 1.0)) {
    throw std::logic_error("similarity outside [0,1]: " +
                           std::to_string(sim));
  }
  if (!(threshld > 0.0 && threshld <= 1.0)) {
    throw std::logic_error("threshold outside (0,1]: " +
                           std::to_string(threshld));
  }
  if (sim > threshld) return SimilarityClass::kMaxMatch;
  if (sim == 0.0) return SimilarityClass::kNoMatch;
  return SimilarityClass::kLessMatch;
}

namespace {

std::vector<std::string> split_path(const std::string& text) {
  std::vector<std::string> tokens;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, '/')) {
    if (!token.empty()) tokens.push_back(fold_case(token));
  }
  return tokens;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw std::runtime_error("profile parse error at line " +
                           std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<Profile> parse_profiles(std::istream& in) {
  std::vector<Profile> out;
  Profile current;
  bool open = false;
  std::unordered_set<std::string> seen_labels;

  auto flush = [&] {
    if (open) {
      out.push_back(std::move(current));
      current = Profile{};
      seen_labels.clear();
      open = false;
    }
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::stringstream ss(line);
    std::string keyword;
    ss >> keyword;
    if (keyword.empty() || keyword[0] == '#') {
      flush();
      continue;
    }
    if (keyword == "node") {
      flush();
      if (!(ss >> current.node_id)) parse_fail(line_no, "missing node id");
      open = true;
    } else if (keyword == "concept") {
      if (!open) parse_fail(line_no, "concept before any node line");
      Concept c;
      std::string label;
      if (!(ss >> label)) parse_fail(line_no, "missing concept label");
      c.label = fold_case(label);
      std::string path;
      if (ss >> path) {
        c.taxonomy_path = split_path(path);
        if (c.taxonomy_path.empty() || c.taxonomy_path.back() != c.label) {
          parse_fail(line_no, "taxonomy path must end at the concept label");
        }
      }
      if (!seen_labels.insert(c.label).second) {
        parse_fail(line_no, "duplicate concept label '" + c.label + "'");
      }
      current.concepts.push_back(std::move(c));
    } else {
      parse_fail(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  flush();
  return out;
}

std::vector<Profile> load_profiles(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file: " + path);
  return parse_profiles(in);
}

}  // namespace tibias
