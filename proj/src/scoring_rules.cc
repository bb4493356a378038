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

#include "vase/scoring_rules.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vase/error.h"

namespace vase {

ScoringVector::ScoringVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) Fail(ErrorKind::kUsage, "empty scoring vector");
  for (size_t i = 1; i < weights_.size(); ++i) {
    if (weights_[i] > weights_[i - 1]) {
      Fail(ErrorKind::kUsage, "scoring vector must be non-increasing");
    }
  }
  if (weights_.size() > 1 && !(weights_.front() > weights_.back())) {
    Fail(ErrorKind::kUsage, "scoring vector needs first weight > last weight");
  }
}

ScoringVector ScoringVector::Plurality(int length) {
  std::vector<double> weights(std::max(length, 1), 0.0);
  weights[0] = 1.0;
  return ScoringVector(std::move(weights));
}

ScoringVector ScoringVector::Borda(int length) {
  std::vector<double> weights(std::max(length, 1));
  for (size_t i = 0; i < weights.size(); ++i) {
    weights[i] = static_cast<double>(weights.size() - 1 - i);
  }
  return ScoringVector(std::move(weights));
}

namespace {

// Adds weight * mean(weights over the group's positions) to each member.
template <typename PositionWeight>
void AccumulateGroups(const Ballot& ballot, PositionWeight position_weight,
                      std::vector<double>& scores) {
  int start = 0;
  for (const auto& group : ballot.groups) {
    const int size = static_cast<int>(group.size());
    double sum = 0.0;
    for (int p = start; p < start + size; ++p) sum += position_weight(p);
    const double share = static_cast<double>(ballot.weight) * sum / size;
    for (int a : group) scores[a] += share;
    start += size;
  }
}

}  // namespace

std::vector<double> PositionalScores(const PreferenceProfile& profile,
                                     const ScoringVector& vector) {
  std::vector<double> scores(profile.num_alternatives(), 0.0);
  for (const auto& ballot : profile.ballots()) {
    if (ballot.Length() > vector.size()) {
      Fail(ErrorKind::kUsage, "scoring vector of length " +
                                  std::to_string(vector.size()) +
                                  " is shorter than a ballot of length " +
                                  std::to_string(ballot.Length()));
    }
    AccumulateGroups(
        ballot, [&](int p) { return vector.weights()[p]; }, scores);
  }
  return scores;
}

RankingResult PositionalRank(const PreferenceProfile& profile,
                             const ScoringVector& vector,
                             const TieBreakPolicy& policy,
                             const std::string& method) {
  return RankByScore(method, profile.alternatives(),
                     PositionalScores(profile, vector), policy);
}

RankingResult PluralityRank(const PreferenceProfile& profile,
                            const TieBreakPolicy& policy) {
  return PositionalRank(profile,
                        ScoringVector::Plurality(profile.num_alternatives()),
                        policy, "plurality");
}

std::vector<double> BordaScores(const PreferenceProfile& profile) {
  std::vector<double> scores(profile.num_alternatives(), 0.0);
  for (const auto& ballot : profile.ballots()) {
    const int length = ballot.Length();
    AccumulateGroups(
        ballot, [&](int p) { return static_cast<double>(length - 1 - p); },
        scores);
  }
  return scores;
}

RankingResult BordaRank(const PreferenceProfile& profile,
                        const TieBreakPolicy& policy) {
  return RankByScore("borda", profile.alternatives(), BordaScores(profile),
                     policy);
}

std::vector<double> ApprovalScores(const PreferenceProfile& profile, int k) {
  if (k < 1) Fail(ErrorKind::kUsage, "approval needs k >= 1");
  std::vector<double> scores(profile.num_alternatives(), 0.0);
  for (const auto& ballot : profile.ballots()) {
    int start = 0;
    for (const auto& group : ballot.groups) {
      if (start >= k) break;
      for (int a : group) scores[a] += static_cast<double>(ballot.weight);
      start += static_cast<int>(group.size());
    }
  }
  return scores;
}

RankingResult ApprovalRank(const PreferenceProfile& profile, int k,
                           const TieBreakPolicy& policy) {
  return RankByScore("approval", profile.alternatives(),
                     ApprovalScores(profile, k), policy);
}

int DefaultStvWinners(int num_alternatives) {
  return std::max(1, num_alternatives / 2);
}

double StvScore(int base, int64_t tally) {
  double scale = 10.0;
  for (int64_t t = tally; t >= 10; t /= 10) scale *= 10.0;
  return static_cast<double>(base) + static_cast<double>(tally) / scale;
}

std::pair<RankingResult, StvTrace> StvRank(const PreferenceProfile& profile,
                                           int num_winners,
                                           const TieBreakPolicy& policy) {
  const int m = profile.num_alternatives();
  if (num_winners < 1 || num_winners > m) {
    Fail(ErrorKind::kUsage,
         "STV needs 1 <= num_winners <= " + std::to_string(m) + ", got " +
             std::to_string(num_winners));
  }
  // Tie groups inside a ballot are read in tie-break priority order, so each
  // slip is a strict sequence.
  const std::vector<int> priority = policy.PriorityOrder(m);
  std::vector<int> rank_of(m);
  for (int i = 0; i < m; ++i) rank_of[priority[i]] = i;

  struct Slip {
    int64_t weight;
    std::vector<int> order;
  };
  std::vector<Slip> slips;
  for (const auto& ballot : profile.ballots()) {
    Slip slip{ballot.weight, {}};
    for (auto group : ballot.groups) {
      std::sort(group.begin(), group.end(),
                [&](int a, int b) { return rank_of[a] < rank_of[b]; });
      slip.order.insert(slip.order.end(), group.begin(), group.end());
    }
    slips.push_back(std::move(slip));
  }

  std::vector<bool> alive(m, true);
  int alive_count = m;
  auto top_of = [&](const Slip& slip) {
    for (int a : slip.order) {
      if (alive[a]) return a;
    }
    return -1;
  };

  StvTrace trace;
  std::vector<int64_t> decisive_tally(m, 0);
  while (alive_count > 0) {
    StvRound round;
    round.tallies.assign(m, -1);
    int64_t remaining_weight = 0;
    for (int a = 0; a < m; ++a) {
      if (alive[a]) round.tallies[a] = 0;
    }
    for (const auto& slip : slips) {
      const int top = top_of(slip);
      if (top < 0 || slip.weight == 0) continue;
      round.tallies[top] += slip.weight;
      remaining_weight += slip.weight;
    }

    // Highest priority first among equal tallies.
    int best = -1;
    int worst = -1;
    for (int a : priority) {
      if (!alive[a]) continue;
      if (best < 0 || round.tallies[a] > round.tallies[best]) best = a;
      if (worst < 0 || round.tallies[a] <= round.tallies[worst]) worst = a;
    }

    const int seats_left = num_winners - static_cast<int>(trace.winners.size());
    bool elect = false;
    if (seats_left > 0) {
      round.quota = remaining_weight / (seats_left + 1) + 1;
      elect = round.tallies[best] >= round.quota || alive_count <= seats_left;
    }

    if (elect) {
      round.event = StvEvent::kElected;
      round.subject = best;
      trace.winners.push_back(best);
      // The first `quota` votes in ballot order are used up; the surplus
      // moves on with its slips.
      int64_t to_consume = std::min(round.quota, round.tallies[best]);
      for (auto& slip : slips) {
        if (to_consume == 0) break;
        if (top_of(slip) != best) continue;
        const int64_t used = std::min(slip.weight, to_consume);
        slip.weight -= used;
        to_consume -= used;
      }
    } else {
      round.event = StvEvent::kEliminated;
      round.subject = worst;
      trace.losers.insert(trace.losers.begin(), worst);
    }
    decisive_tally[round.subject] = round.tallies[round.subject];
    alive[round.subject] = false;
    --alive_count;
    trace.rounds.push_back(std::move(round));
  }

  std::vector<double> scores(m, 0.0);
  std::vector<int> order;
  for (size_t i = 0; i < trace.winners.size(); ++i) {
    const int a = trace.winners[i];
    scores[a] = StvScore(2 * m - static_cast<int>(i), decisive_tally[a]);
    order.push_back(a);
  }
  for (size_t i = 0; i < trace.losers.size(); ++i) {
    const int a = trace.losers[i];
    scores[a] = StvScore(m - static_cast<int>(i), decisive_tally[a]);
    order.push_back(a);
  }
  return {RankByOrder("stv", profile.alternatives(), order, scores, policy),
          std::move(trace)};
}

}  // namespace vase
