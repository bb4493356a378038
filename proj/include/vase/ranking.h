// Copyright 2026 The VasE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VASE_RANKING_H_
#define VASE_RANKING_H_

#include <cstdint>
#include <string>
#include <vector>

namespace vase {

inline constexpr double kDefaultPerturbation = 1e-9;

// Seeded tie-breaking shared by every method in one invocation. Each
// alternative index receives one perturbation in [0, magnitude), drawn from
// the seed alone, so every method sees the same values for the same profile.
class TieBreakPolicy {
 public:
  explicit TieBreakPolicy(uint64_t seed = 0,
                          double magnitude = kDefaultPerturbation);

  uint64_t seed() const { return seed_; }
  double magnitude() const { return magnitude_; }

  std::vector<double> Perturbations(int num_alternatives) const;

  // Alternative indices from most to least favoured: larger perturbation
  // first, then registry order.
  std::vector<int> PriorityOrder(int num_alternatives) const;

 private:
  uint64_t seed_;
  double magnitude_;
};

struct RankingEntry {
  int rank = 0;  // 1-based.
  std::string alternative;
  double score = 0.0;

  bool operator==(const RankingEntry& other) const = default;
};

struct RankingResult {
  std::string method;
  std::vector<RankingEntry> entries;
  uint64_t tiebreak_seed = 0;

  std::vector<std::string> Order() const;
  // Score of `alternative`; throws if absent.
  double ScoreOf(const std::string& alternative) const;
  // 0-based position of `alternative`, or -1.
  int PositionOf(const std::string& alternative) const;

  bool operator==(const RankingResult& other) const = default;
};

// Orders alternatives by score + perturbation, descending; exact key ties
// fall back to registry order.
RankingResult RankByScore(const std::string& method,
                          const std::vector<std::string>& labels,
                          const std::vector<double>& scores,
                          const TieBreakPolicy& policy);

// Wraps an order decided by the method itself (Kemeny, Schulze, ...).
RankingResult RankByOrder(const std::string& method,
                          const std::vector<std::string>& labels,
                          const std::vector<int>& order,
                          const std::vector<double>& scores,
                          const TieBreakPolicy& policy);

}  // namespace vase

#endif  // VASE_RANKING_H_
