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

#include "vase/ranking.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "vase/error.h"

namespace vase {

TieBreakPolicy::TieBreakPolicy(uint64_t seed, double magnitude)
    : seed_(seed), magnitude_(magnitude) {
  if (!(magnitude >= 0.0)) {
    Fail(ErrorKind::kUsage, "tie-break magnitude must be non-negative");
  }
}

std::vector<double> TieBreakPolicy::Perturbations(int num_alternatives) const {
  std::mt19937_64 rng(seed_);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out(num_alternatives);
  for (double& p : out) p = magnitude_ * unit(rng);
  return out;
}

std::vector<int> TieBreakPolicy::PriorityOrder(int num_alternatives) const {
  const std::vector<double> perturbation = Perturbations(num_alternatives);
  std::vector<int> order(num_alternatives);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return perturbation[a] > perturbation[b];
  });
  return order;
}

std::vector<std::string> RankingResult::Order() const {
  std::vector<std::string> order;
  order.reserve(entries.size());
  for (const auto& entry : entries) order.push_back(entry.alternative);
  return order;
}

double RankingResult::ScoreOf(const std::string& alternative) const {
  for (const auto& entry : entries) {
    if (entry.alternative == alternative) return entry.score;
  }
  Fail(ErrorKind::kStructural, "'" + alternative + "' is not ranked");
}

int RankingResult::PositionOf(const std::string& alternative) const {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].alternative == alternative) return static_cast<int>(i);
  }
  return -1;
}

RankingResult RankByScore(const std::string& method,
                          const std::vector<std::string>& labels,
                          const std::vector<double>& scores,
                          const TieBreakPolicy& policy) {
  const int m = static_cast<int>(labels.size());
  const std::vector<double> perturbation = policy.Perturbations(m);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return scores[a] + perturbation[a] > scores[b] + perturbation[b];
  });
  return RankByOrder(method, labels, order, scores, policy);
}

RankingResult RankByOrder(const std::string& method,
                          const std::vector<std::string>& labels,
                          const std::vector<int>& order,
                          const std::vector<double>& scores,
                          const TieBreakPolicy& policy) {
  RankingResult result;
  result.method = method;
  result.tiebreak_seed = policy.seed();
  for (size_t i = 0; i < order.size(); ++i) {
    result.entries.push_back(
        {static_cast<int>(i) + 1, labels.at(order[i]), scores.at(order[i])});
  }
  return result;
}

}  // namespace vase
