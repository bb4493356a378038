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

#ifndef VASE_SCORING_RULES_H_
#define VASE_SCORING_RULES_H_

// Positional scoring rules (plurality, Borda, k-approval) and single
// transferable vote.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vase/profile.h"
#include "vase/ranking.h"

namespace vase {

// Non-increasing weights with first > last.
class ScoringVector {
 public:
  explicit ScoringVector(std::vector<double> weights);

  static ScoringVector Plurality(int length);
  static ScoringVector Borda(int length);

  const std::vector<double>& weights() const { return weights_; }
  int size() const { return static_cast<int>(weights_.size()); }

 private:
  std::vector<double> weights_;
};

// Tied groups get the mean of the weights their positions span; alternatives
// missing from a ballot get nothing from it.
std::vector<double> PositionalScores(const PreferenceProfile& profile,
                                     const ScoringVector& vector);

RankingResult PositionalRank(const PreferenceProfile& profile,
                             const ScoringVector& vector,
                             const TieBreakPolicy& policy = TieBreakPolicy(),
                             const std::string& method = "positional");

RankingResult PluralityRank(const PreferenceProfile& profile,
                            const TieBreakPolicy& policy = TieBreakPolicy());

// Each ballot of length L scores (L-1, ..., 0).
std::vector<double> BordaScores(const PreferenceProfile& profile);
RankingResult BordaRank(const PreferenceProfile& profile,
                        const TieBreakPolicy& policy = TieBreakPolicy());

// One point for every alternative in a group that starts within the top k
// positions of the ballot.
std::vector<double> ApprovalScores(const PreferenceProfile& profile, int k);
RankingResult ApprovalRank(const PreferenceProfile& profile, int k,
                           const TieBreakPolicy& policy = TieBreakPolicy());

enum class StvEvent { kElected, kEliminated };

struct StvRound {
  int64_t quota = 0;
  std::vector<int64_t> tallies;  // Indexed by alternative; -1 once removed.
  StvEvent event = StvEvent::kEliminated;
  int subject = -1;
};

struct StvTrace {
  std::vector<StvRound> rounds;
  std::vector<int> winners;  // Election order.
  std::vector<int> losers;   // Last eliminated first.
};

// max(1, floor(m / 2)).
int DefaultStvWinners(int num_alternatives);

// Encodes base.X with X the decisive tally: base + X / 10^digits(X).
double StvScore(int base, int64_t tally);

std::pair<RankingResult, StvTrace> StvRank(
    const PreferenceProfile& profile, int num_winners,
    const TieBreakPolicy& policy = TieBreakPolicy());

}  // namespace vase

#endif  // VASE_SCORING_RULES_H_
