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

#ifndef VASE_METHODS_H_
#define VASE_METHODS_H_

// Name-based dispatch over every ranking method, shared by the CLI and the
// experiment harness.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vase/baselines.h"
#include "vase/condorcet_rules.h"
#include "vase/lotteries.h"
#include "vase/profile.h"
#include "vase/ranking.h"
#include "vase/scoring_rules.h"

namespace vase {

// Methods that operate on ballots, in canonical order.
const std::vector<std::string>& VotingMethodNames();
// VotingMethodNames() plus "elo" and "nash_average".
const std::vector<std::string>& AllMethodNames();
bool IsKnownMethod(const std::string& name);

struct MethodOptions {
  std::optional<int> approval_k;
  std::optional<int> num_winners;
  TieBreakPolicy tie_break;
  int kemeny_cap = kDefaultKemenyCap;
  EloFitOptions elo;
};

// Everything a method produced beyond the ranking itself.
struct MethodOutput {
  RankingResult ranking;
  std::optional<StvTrace> stv;
  std::optional<RankedPairsGraph> ranked_pairs;
  std::optional<StrongestPathMatrix> schulze;
  std::optional<IterativeLotteryResult> iml;
  std::optional<Lottery> lottery;
  std::optional<EloRatings> elo;
  std::optional<int64_t> kemeny_value;
};

// Runs a ballot-based method ("elo" included, via head-to-head records).
// Throws kUsage for unknown names or missing options (approval needs k).
MethodOutput RunMethod(const std::string& name,
                       const PreferenceProfile& profile,
                       const MethodOptions& options);

}  // namespace vase

#endif  // VASE_METHODS_H_
