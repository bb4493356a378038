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

#ifndef VASE_HARNESS_H_
#define VASE_HARNESS_H_

// Generalisation and robustness experiments: Kendall-tau ranking error,
// train/test splits, vote diversity, random profiles, clone injection and
// the voting-axiom property checks.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vase/methods.h"
#include "vase/profile.h"
#include "vase/ranking.h"

namespace vase {

// A weak order over labels, best group first.
using WeakOrder = std::vector<std::vector<std::string>>;

// Pairs {a, b} of `subset` that `ranking` orders the other way round. Pairs
// tied in `subset` never count. Every label of `subset` must be ranked.
int64_t KendallTau(const RankingResult& ranking, const WeakOrder& subset);

struct GameRecord {
  std::string id;
  std::vector<std::pair<std::string, double>> participants;
};

// Participants by descending score; equal scores share a group.
WeakOrder GameOrder(const GameRecord& game);

// Games as unit-weight ballots over the union of their participants, in
// first-appearance order.
PreferenceProfile ProfileFromGames(const std::vector<GameRecord>& games);

// Mean Kendall-tau distance between `ranking` and each test game. Test
// participants the ranking has never seen are dropped from that game;
// `dropped` (optional) receives how many were.
double ErrorPerGame(const std::vector<GameRecord>& test,
                    const RankingResult& ranking, int64_t* dropped = nullptr);

struct VoteHistogram {
  int64_t distinct = 0;
  // Distinct ballots (weight ignored) with their summed weights, in order of
  // first appearance.
  std::vector<std::pair<Ballot, int64_t>> counts;
};

VoteHistogram CountUniqueVotes(const PreferenceProfile& profile);

// True if `members` sit contiguously relative to every outsider in every
// ballot, i.e. they form a clone set.
bool IsCloneSet(const PreferenceProfile& profile,
                const std::vector<int>& members);

// Adds `copies` new alternatives ("<target>~1", ...) next to `target` in every
// ballot; the order inside the clone set is shuffled per ballot.
PreferenceProfile InjectClones(const PreferenceProfile& profile,
                               const std::string& target, int copies,
                               uint64_t seed);

struct ImpartialCulture {};

// Every ballot is a round robin: each pair plays once with the first winning
// with EloPredict probability, and alternatives are ordered by wins.
struct EloWorld {
  std::vector<double> ratings;
};

using ProfileModel = std::variant<ImpartialCulture, EloWorld>;

PreferenceProfile RandomProfile(int num_alternatives, int num_ballots,
                                uint64_t seed,
                                const ProfileModel& model = ImpartialCulture{});

// Synthetic multi-player games: each game samples `players_per_game` distinct
// players from the pool and scores them by round-robin wins under the Elo
// model.
std::vector<GameRecord> EloWorldGames(const std::vector<double>& pool_ratings,
                                      int num_games, int players_per_game,
                                      uint64_t seed);

struct SplitSpec {
  uint64_t seed = 0;
  int train_size = 0;
  int test_size = 0;
  int replicates = 50;
};

struct MethodErrorSummary {
  std::string method;
  std::vector<double> errors;  // One per split.
  double mean = 0.0;
  double ci95 = 0.0;  // Half-width, normal approximation.
};

struct SplitEvaluation {
  std::vector<MethodErrorSummary> methods;
  int64_t dropped_participants = 0;
};

// "approval2" style names select approval with that k.
SplitEvaluation EvaluateSplits(const std::vector<GameRecord>& games,
                               const SplitSpec& spec,
                               const std::vector<std::string>& methods,
                               const MethodOptions& options = MethodOptions());

enum class Property { kCondorcet, kClone, kPopulation };

struct ConsistencyReport {
  std::string method;
  Property property = Property::kCondorcet;
  int64_t trials = 0;  // Instances satisfying the property's premise.
  int64_t violations = 0;
  // Serialised ballot files of the first few violating instances.
  std::vector<std::string> counterexamples;
};

// Generates random instances meeting the premise of `property` and counts
// how often `method` breaks its conclusion. Stops early once
// `stop_after_violations` (> 0) violations are found.
ConsistencyReport CheckConsistency(const std::string& method, Property property,
                                   int64_t trials, uint64_t seed,
                                   int64_t stop_after_violations = 0);

ConsistencyReport CheckCondorcetConsistency(const std::string& method,
                                            int64_t trials, uint64_t seed);
ConsistencyReport CheckCloneConsistency(const std::string& method,
                                        int64_t trials, uint64_t seed);
ConsistencyReport CheckPopulationConsistency(const std::string& method,
                                             int64_t trials, uint64_t seed);

std::string PropertyName(Property property);

}  // namespace vase

#endif  // VASE_HARNESS_H_
