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

#include "vase/methods.h"

#include <algorithm>

#include "vase/error.h"

namespace vase {

const std::vector<std::string>& VotingMethodNames() {
  static const std::vector<std::string> names = {
      "plurality",       "approval", "borda",   "stv",
      "copeland",        "kemeny",   "schulze", "ranked_pairs",
      "maximal_lottery", "iml"};
  return names;
}

const std::vector<std::string>& AllMethodNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> all = VotingMethodNames();
    all.push_back("elo");
    all.push_back("nash_average");
    return all;
  }();
  return names;
}

bool IsKnownMethod(const std::string& name) {
  const auto& all = AllMethodNames();
  return std::find(all.begin(), all.end(), name) != all.end();
}

MethodOutput RunMethod(const std::string& name,
                       const PreferenceProfile& profile,
                       const MethodOptions& options) {
  const TieBreakPolicy& policy = options.tie_break;
  MethodOutput out;
  if (name == "plurality") {
    out.ranking = PluralityRank(profile, policy);
  } else if (name == "approval") {
    if (!options.approval_k) {
      Fail(ErrorKind::kUsage, "approval needs k (--k)");
    }
    out.ranking = ApprovalRank(profile, *options.approval_k, policy);
  } else if (name == "borda") {
    out.ranking = BordaRank(profile, policy);
  } else if (name == "stv") {
    const int winners = options.num_winners.value_or(
        DefaultStvWinners(profile.num_alternatives()));
    auto [ranking, trace] = StvRank(profile, winners, policy);
    out.ranking = std::move(ranking);
    out.stv = std::move(trace);
  } else if (name == "copeland") {
    out.ranking = CopelandRank(profile, policy);
  } else if (name == "kemeny") {
    KemenyResult kemeny = KemenyRank(profile, policy, options.kemeny_cap);
    out.ranking = std::move(kemeny.ranking);
    out.kemeny_value = kemeny.value;
  } else if (name == "schulze") {
    auto [ranking, paths] = SchulzeRank(profile, policy);
    out.ranking = std::move(ranking);
    out.schulze = std::move(paths);
  } else if (name == "ranked_pairs") {
    auto [ranking, graph] = RankedPairsRank(profile, policy);
    out.ranking = std::move(ranking);
    out.ranked_pairs = std::move(graph);
  } else if (name == "maximal_lottery") {
    Lottery lottery = MaximalLottery(profile);
    out.ranking = RankByScore("maximal_lottery", profile.alternatives(),
                              lottery.probabilities, policy);
    out.lottery = std::move(lottery);
  } else if (name == "iml") {
    IterativeLotteryResult iml = IterativeMaximalLotteries(profile, policy);
    out.ranking = iml.ranking;
    out.iml = std::move(iml);
  } else if (name == "elo") {
    EloRatings ratings = FitElo(WinRecordFromProfile(profile), options.elo);
    out.ranking = EloRank(ratings, policy);
    out.elo = std::move(ratings);
  } else if (name == "nash_average") {
    Fail(ErrorKind::kUsage, "nash_average needs a score table input");
  } else {
    Fail(ErrorKind::kUsage, "unknown method '" + name + "'");
  }
  return out;
}

}  // namespace vase
