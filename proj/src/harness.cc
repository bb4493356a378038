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

#include "vase/harness.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "vase/error.h"
#include "vase/io.h"
#include "vase/linear_program.h"

namespace vase {

int64_t KendallTau(const RankingResult& ranking, const WeakOrder& subset) {
  std::map<std::string, int> position;
  for (size_t i = 0; i < ranking.entries.size(); ++i) {
    position[ranking.entries[i].alternative] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> groups;
  for (const auto& group : subset) {
    std::vector<int> positions;
    for (const auto& label : group) {
      auto it = position.find(label);
      if (it == position.end()) {
        Fail(ErrorKind::kStructural,
             "'" + label + "' is not in the reference ranking");
      }
      positions.push_back(it->second);
    }
    groups.push_back(std::move(positions));
  }
  int64_t disagreements = 0;
  for (size_t g = 0; g < groups.size(); ++g) {
    for (size_t h = g + 1; h < groups.size(); ++h) {
      for (int better : groups[g]) {
        for (int worse : groups[h]) {
          if (better > worse) ++disagreements;
        }
      }
    }
  }
  return disagreements;
}

WeakOrder GameOrder(const GameRecord& game) {
  auto sorted = game.participants;
  std::stable_sort(
      sorted.begin(), sorted.end(),
      [](const auto& l, const auto& r) { return l.second > r.second; });
  WeakOrder order;
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i].second != sorted[i - 1].second)
      order.emplace_back();
    order.back().push_back(sorted[i].first);
  }
  return order;
}

PreferenceProfile ProfileFromGames(const std::vector<GameRecord>& games) {
  PreferenceProfile profile;
  for (const auto& game : games) {
    for (const auto& [agent, score] : game.participants) {
      if (!profile.IndexOf(agent)) profile.AddAlternative(agent);
    }
  }
  for (const auto& game : games) {
    if (game.participants.empty()) continue;
    profile.AddBallot(1, GameOrder(game));
  }
  return profile;
}

double ErrorPerGame(const std::vector<GameRecord>& test,
                    const RankingResult& ranking, int64_t* dropped) {
  if (test.empty()) Fail(ErrorKind::kUsage, "empty test set");
  std::set<std::string> known;
  for (const auto& entry : ranking.entries) known.insert(entry.alternative);
  int64_t total = 0;
  int64_t missing = 0;
  for (const auto& game : test) {
    WeakOrder order;
    for (const auto& group : GameOrder(game)) {
      std::vector<std::string> kept;
      for (const auto& label : group) {
        if (known.count(label) > 0) {
          kept.push_back(label);
        } else {
          ++missing;
        }
      }
      if (!kept.empty()) order.push_back(std::move(kept));
    }
    total += KendallTau(ranking, order);
  }
  if (dropped != nullptr) *dropped = missing;
  return static_cast<double>(total) / static_cast<double>(test.size());
}

namespace {

std::vector<std::vector<int>> CanonicalGroups(const Ballot& ballot) {
  auto groups = ballot.groups;
  for (auto& group : groups) std::sort(group.begin(), group.end());
  return groups;
}

}  // namespace

VoteHistogram CountUniqueVotes(const PreferenceProfile& profile) {
  VoteHistogram histogram;
  std::vector<std::vector<std::vector<int>>> keys;
  for (const auto& ballot : profile.ballots()) {
    const auto key = CanonicalGroups(ballot);
    bool found = false;
    for (size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] == key) {
        histogram.counts[i].second += ballot.weight;
        found = true;
        break;
      }
    }
    if (!found) {
      keys.push_back(key);
      Ballot unit = ballot;
      unit.weight = 1;
      histogram.counts.emplace_back(std::move(unit), ballot.weight);
    }
  }
  histogram.distinct = static_cast<int64_t>(keys.size());
  return histogram;
}

bool IsCloneSet(const PreferenceProfile& profile,
                const std::vector<int>& members) {
  const int m = profile.num_alternatives();
  std::vector<bool> is_member(m, false);
  for (int a : members) is_member.at(a) = true;
  for (const auto& ballot : profile.ballots()) {
    std::vector<int> group_of(m, -1);
    for (size_t g = 0; g < ballot.groups.size(); ++g) {
      for (int a : ballot.groups[g]) group_of[a] = static_cast<int>(g);
    }
    // An outsider must weakly beat all present members or none of them.
    for (int a = 0; a < m; ++a) {
      if (is_member[a] || group_of[a] < 0) continue;
      int beats = 0;
      int present = 0;
      for (int b : members) {
        if (group_of[b] < 0) continue;
        ++present;
        if (group_of[a] <= group_of[b]) ++beats;
      }
      if (beats != 0 && beats != present) return false;
      // The reverse direction matters too when groups are tied.
      int beaten = 0;
      for (int b : members) {
        if (group_of[b] >= 0 && group_of[b] <= group_of[a]) ++beaten;
      }
      if (beaten != 0 && beaten != present) return false;
    }
  }
  return true;
}

PreferenceProfile InjectClones(const PreferenceProfile& profile,
                               const std::string& target, int copies,
                               uint64_t seed) {
  if (copies < 1) Fail(ErrorKind::kUsage, "need at least one clone");
  const auto target_index = profile.IndexOf(target);
  if (!target_index) {
    Fail(ErrorKind::kStructural, "unknown alternative '" + target + "'");
  }
  PreferenceProfile cloned(profile.alternatives());
  std::vector<int> clone_set = {*target_index};
  for (int c = 1; c <= copies; ++c) {
    std::string label = target + "~" + std::to_string(c);
    while (cloned.IndexOf(label)) label += "~";
    clone_set.push_back(cloned.AddAlternative(label));
  }

  std::mt19937_64 rng(seed);
  for (const auto& ballot : profile.ballots()) {
    Ballot out;
    out.weight = ballot.weight;
    for (const auto& group : ballot.groups) {
      const bool has_target =
          std::find(group.begin(), group.end(), *target_index) != group.end();
      if (!has_target) {
        out.groups.push_back(group);
      } else if (group.size() == 1) {
        std::vector<int> order = clone_set;
        std::shuffle(order.begin(), order.end(), rng);
        for (int a : order) out.groups.push_back({a});
      } else {
        // Target tied with outsiders: the clones join the same tie.
        std::vector<int> widened = group;
        widened.insert(widened.end(), clone_set.begin() + 1, clone_set.end());
        out.groups.push_back(std::move(widened));
      }
    }
    cloned.AddBallot(std::move(out));
  }
  if (!IsCloneSet(cloned, clone_set)) {
    Fail(ErrorKind::kStructural,
         "clone injection broke the component property");
  }
  return cloned;
}

namespace {

std::string DefaultLabel(int i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "A" + std::to_string(i);
}

// Orders `players` by round-robin wins under the Elo model.
std::vector<std::pair<int, double>> RoundRobin(
    const std::vector<int>& players, const std::vector<double>& ratings,
    std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<int, double>> wins;
  for (int p : players) wins.emplace_back(p, 0.0);
  for (size_t i = 0; i < players.size(); ++i) {
    for (size_t j = i + 1; j < players.size(); ++j) {
      const double p_i = EloPredict(ratings[players[i]], ratings[players[j]]);
      if (unit(rng) < p_i) {
        wins[i].second += 1.0;
      } else {
        wins[j].second += 1.0;
      }
    }
  }
  return wins;
}

}  // namespace

PreferenceProfile RandomProfile(int num_alternatives, int num_ballots,
                                uint64_t seed, const ProfileModel& model) {
  if (num_alternatives < 1 || num_ballots < 1) {
    Fail(ErrorKind::kUsage, "random profile needs m >= 1 and n >= 1");
  }
  PreferenceProfile profile;
  for (int i = 0; i < num_alternatives; ++i)
    profile.AddAlternative(DefaultLabel(i));
  std::mt19937_64 rng(seed);
  std::vector<int> all(num_alternatives);
  std::iota(all.begin(), all.end(), 0);

  for (int b = 0; b < num_ballots; ++b) {
    Ballot ballot;
    if (std::holds_alternative<ImpartialCulture>(model)) {
      std::vector<int> order = all;
      std::shuffle(order.begin(), order.end(), rng);
      for (int a : order) ballot.groups.push_back({a});
    } else {
      const auto& ratings = std::get<EloWorld>(model).ratings;
      if (static_cast<int>(ratings.size()) != num_alternatives) {
        Fail(ErrorKind::kUsage, "elo-world needs one rating per alternative");
      }
      auto wins = RoundRobin(all, ratings, rng);
      std::stable_sort(
          wins.begin(), wins.end(),
          [](const auto& l, const auto& r) { return l.second > r.second; });
      for (size_t i = 0; i < wins.size(); ++i) {
        if (i == 0 || wins[i].second != wins[i - 1].second) {
          ballot.groups.emplace_back();
        }
        ballot.groups.back().push_back(wins[i].first);
      }
    }
    profile.AddBallot(std::move(ballot));
  }
  return profile;
}

std::vector<GameRecord> EloWorldGames(const std::vector<double>& pool_ratings,
                                      int num_games, int players_per_game,
                                      uint64_t seed) {
  const int pool = static_cast<int>(pool_ratings.size());
  if (players_per_game < 2 || players_per_game > pool) {
    Fail(ErrorKind::kUsage, "players per game must be in [2, pool size]");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> everyone(pool);
  std::iota(everyone.begin(), everyone.end(), 0);
  std::vector<GameRecord> games;
  games.reserve(num_games);
  for (int g = 0; g < num_games; ++g) {
    for (int i = 0; i < players_per_game; ++i) {
      std::uniform_int_distribution<int> pick(i, pool - 1);
      std::swap(everyone[i], everyone[pick(rng)]);
    }
    std::vector<int> players(everyone.begin(),
                             everyone.begin() + players_per_game);
    GameRecord game;
    game.id = "g" + std::to_string(g);
    for (const auto& [player, wins] : RoundRobin(players, pool_ratings, rng)) {
      game.participants.emplace_back("p" + std::to_string(player), wins);
    }
    games.push_back(std::move(game));
  }
  return games;
}

namespace {

// Runs `name`, where "approvalK" selects approval with that k and bare
// "approval" defaults to k = 2.
RankingResult RankNamed(const std::string& name,
                        const PreferenceProfile& profile,
                        const MethodOptions& options) {
  MethodOptions local = options;
  std::string method = name;
  if (name.rfind("approval", 0) == 0) {
    method = "approval";
    if (name.size() > 8) {
      local.approval_k = std::stoi(name.substr(8));
    } else if (!local.approval_k) {
      local.approval_k = 2;
    }
  }
  return RunMethod(method, profile, local).ranking;
}

bool IsSplitMethod(const std::string& name) {
  if (name.rfind("approval", 0) == 0) {
    return name.size() == 8 ||
           name.find_first_not_of("0123456789", 8) == std::string::npos;
  }
  return IsKnownMethod(name) && name != "nash_average";
}

}  // namespace

SplitEvaluation EvaluateSplits(const std::vector<GameRecord>& games,
                               const SplitSpec& spec,
                               const std::vector<std::string>& methods,
                               const MethodOptions& options) {
  if (spec.train_size < 1 || spec.test_size < 1 || spec.replicates < 1) {
    Fail(ErrorKind::kUsage, "split sizes and replicates must be positive");
  }
  if (static_cast<size_t>(spec.train_size) + spec.test_size > games.size()) {
    Fail(ErrorKind::kUsage, "train + test exceeds the number of games");
  }
  for (const auto& name : methods) {
    if (!IsSplitMethod(name))
      Fail(ErrorKind::kUsage, "unknown method '" + name + "'");
  }

  struct ReplicateResult {
    std::vector<double> errors;
    int64_t dropped = 0;
  };
  auto run_replicate = [&](int r) {
    std::seed_seq seq{spec.seed, static_cast<uint64_t>(r)};
    std::mt19937_64 rng(seq);
    std::vector<size_t> index(games.size());
    std::iota(index.begin(), index.end(), 0);
    std::shuffle(index.begin(), index.end(), rng);
    std::vector<GameRecord> train;
    std::vector<GameRecord> test;
    for (int i = 0; i < spec.train_size; ++i) train.push_back(games[index[i]]);
    for (int i = 0; i < spec.test_size; ++i) {
      test.push_back(games[index[spec.train_size + i]]);
    }
    const PreferenceProfile profile = ProfileFromGames(train);
    ReplicateResult result;
    for (const auto& name : methods) {
      int64_t dropped = 0;
      result.errors.push_back(
          ErrorPerGame(test, RankNamed(name, profile, options), &dropped));
      result.dropped = dropped;
    }
    return result;
  };

  std::vector<ReplicateResult> replicates(spec.replicates);
  const int workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  for (int start = 0; start < spec.replicates; start += workers) {
    std::vector<std::future<ReplicateResult>> batch;
    for (int r = start; r < std::min(spec.replicates, start + workers); ++r) {
      batch.push_back(std::async(std::launch::async, run_replicate, r));
    }
    for (size_t i = 0; i < batch.size(); ++i)
      replicates[start + i] = batch[i].get();
  }

  SplitEvaluation evaluation;
  for (const auto& r : replicates) evaluation.dropped_participants += r.dropped;
  for (size_t k = 0; k < methods.size(); ++k) {
    MethodErrorSummary summary;
    summary.method = methods[k];
    for (const auto& r : replicates) summary.errors.push_back(r.errors[k]);
    const double n = static_cast<double>(summary.errors.size());
    summary.mean =
        std::accumulate(summary.errors.begin(), summary.errors.end(), 0.0) / n;
    if (summary.errors.size() > 1) {
      double sq = 0.0;
      for (double e : summary.errors)
        sq += (e - summary.mean) * (e - summary.mean);
      summary.ci95 = 1.96 * std::sqrt(sq / (n - 1.0)) / std::sqrt(n);
    }
    evaluation.methods.push_back(std::move(summary));
  }
  return evaluation;
}

std::string PropertyName(Property property) {
  switch (property) {
    case Property::kCondorcet:
      return "condorcet";
    case Property::kClone:
      return "clone";
    case Property::kPopulation:
      return "population";
  }
  return "unknown";
}

namespace {

constexpr double kLotteryTolerance = 1e-7;
constexpr double kMarginalTolerance = 1e-6;

bool IsLotteryMethod(const std::string& method) {
  return method == "maximal_lottery";
}

std::vector<double> ScoresOf(const RankingResult& ranking,
                             const PreferenceProfile& profile) {
  std::vector<double> scores(profile.num_alternatives());
  for (const auto& entry : ranking.entries) {
    scores[*profile.IndexOf(entry.alternative)] = entry.score;
  }
  return scores;
}

std::set<int> ArgMax(const std::vector<double>& scores) {
  const double best = *std::max_element(scores.begin(), scores.end());
  std::set<int> winners;
  for (size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] == best) winners.insert(static_cast<int>(i));
  }
  return winners;
}

// Tops of every Kemeny-optimal order.
std::set<int> KemenyWinners(const PreferenceProfile& profile) {
  const PreferenceMatrix counts = ComputePreferenceMatrix(profile);
  std::vector<int> order(profile.num_alternatives());
  std::iota(order.begin(), order.end(), 0);
  int64_t best = -1;
  std::set<int> winners;
  do {
    const int64_t value = KemenyValue(counts, order);
    if (value > best) {
      best = value;
      winners.clear();
    }
    if (value == best) winners.insert(order[0]);
  } while (std::next_permutation(order.begin(), order.end()));
  return winners;
}

// The method as a social choice function.
std::set<int> WinnerSet(const std::string& method,
                        const PreferenceProfile& profile,
                        const MethodOptions& options) {
  if (method == "plurality" || method == "borda" || method == "copeland" ||
      method.rfind("approval", 0) == 0) {
    return ArgMax(ScoresOf(RankNamed(method, profile, options), profile));
  }
  if (method == "kemeny") return KemenyWinners(profile);
  if (method == "schulze") {
    const auto winners =
        SchulzeWinners(ComputeStrongestPaths(ComputePreferenceMatrix(profile)));
    return std::set<int>(winners.begin(), winners.end());
  }
  if (method == "iml") {
    const auto iml = IterativeMaximalLotteries(profile, options.tie_break);
    return std::set<int>(iml.levels[0].winners.begin(),
                         iml.levels[0].winners.end());
  }
  const RankingResult ranking = RankNamed(method, profile, options);
  return {*profile.IndexOf(ranking.entries.front().alternative)};
}

PreferenceProfile Merge(const PreferenceProfile& a,
                        const PreferenceProfile& b) {
  PreferenceProfile merged = a;
  for (const auto& ballot : b.ballots()) merged.AddBallot(ballot);
  return merged;
}

// Is some lottery maximal for every margin matrix in `games`?
bool SharedMaximalLotteryExists(const std::vector<Eigen::MatrixXd>& games) {
  const int m = static_cast<int>(games.front().rows());
  LinearProgram lp;
  lp.objective = Eigen::VectorXd::Zero(m);
  lp.upper_lhs.resize(m * static_cast<int>(games.size()), m);
  for (size_t g = 0; g < games.size(); ++g) {
    lp.upper_lhs.block(g * m, 0, m, m) = -games[g].transpose();
  }
  lp.upper_rhs = Eigen::VectorXd::Zero(lp.upper_lhs.rows());
  lp.equality_lhs = Eigen::MatrixXd::Ones(1, m);
  lp.equality_rhs = Eigen::VectorXd::Ones(1);
  return SolveLinearProgram(lp).status == LpStatus::kOptimal;
}

bool IsMaximalFor(const Eigen::VectorXd& p, const Eigen::MatrixXd& margins) {
  return (margins.transpose() * p).minCoeff() >= -kLotteryTolerance;
}

struct Instance {
  bool premise = false;
  bool violated = false;
  std::string description;
};

Instance CondorcetTrial(const std::string& method, std::mt19937_64& rng,
                        const MethodOptions& options) {
  Instance instance;
  const int m = std::uniform_int_distribution<int>(2, 6)(rng);
  const int n = std::uniform_int_distribution<int>(1, 12)(rng);
  const PreferenceProfile profile = RandomProfile(m, n, rng());
  const auto winner = FindCondorcetWinner(profile);
  if (!winner || winner->strength != CondorcetStrength::kStrong)
    return instance;
  instance.premise = true;
  if (IsLotteryMethod(method)) {
    const Lottery lottery = MaximalLottery(profile);
    instance.violated =
        lottery.probabilities[winner->alternative] < 1.0 - kLotteryTolerance;
  } else {
    const RankingResult ranking = RankNamed(method, profile, options);
    instance.violated = ranking.entries.front().alternative !=
                        profile.label(winner->alternative);
  }
  if (instance.violated) {
    instance.description = "# strong Condorcet winner " +
                           profile.label(winner->alternative) + "\n" +
                           FormatBallots(profile);
  }
  return instance;
}

// True if every pair has a non-zero margin and no two pairs share one, so no
// method needs its tie-break on the original profile.
bool MarginsDistinct(const PreferenceProfile& profile) {
  const CountMatrix margins = ComputeMarginMatrix(profile).margins;
  std::set<int64_t> seen;
  for (int a = 0; a < profile.num_alternatives(); ++a) {
    for (int b = a + 1; b < profile.num_alternatives(); ++b) {
      const int64_t size = std::abs(margins(a, b));
      if (size == 0 || !seen.insert(size).second) return false;
    }
  }
  return true;
}

Instance CloneTrial(const std::string& method, std::mt19937_64& rng,
                    const MethodOptions& options) {
  Instance instance;
  const int m = std::uniform_int_distribution<int>(2, 4)(rng);
  const int n = 2 * std::uniform_int_distribution<int>(1, 6)(rng) + 1;
  const int copies = std::uniform_int_distribution<int>(1, 2)(rng);
  const PreferenceProfile profile = RandomProfile(m, n, rng());
  const int target = std::uniform_int_distribution<int>(0, m - 1)(rng);
  const PreferenceProfile cloned =
      InjectClones(profile, profile.label(target), copies, rng());
  if (!MarginsDistinct(profile)) return instance;
  instance.premise = true;

  if (IsLotteryMethod(method)) {
    const Lottery before = MaximalLottery(profile);
    const Lottery after = MaximalLottery(cloned);
    double clone_mass = 0.0;
    for (int a = 0; a < cloned.num_alternatives(); ++a) {
      if (a == target || a >= m) clone_mass += after.probabilities[a];
    }
    if (std::abs(clone_mass - before.probabilities[target]) >
        kMarginalTolerance) {
      instance.violated = true;
    }
    for (int a = 0; a < m; ++a) {
      if (a != target &&
          std::abs(after.probabilities[a] - before.probabilities[a]) >
              kMarginalTolerance) {
        instance.violated = true;
      }
    }
  } else {
    // The clone set counts as one block placed at its best-ranked member.
    const std::string block = profile.label(target);
    const std::vector<std::string> before =
        RankNamed(method, profile, options).Order();
    std::vector<std::string> after;
    bool block_seen = false;
    for (const auto& label : RankNamed(method, cloned, options).Order()) {
      const int index = *cloned.IndexOf(label);
      if (index != target && index < m) {
        after.push_back(label);
      } else if (!block_seen) {
        after.push_back(block);
        block_seen = true;
      }
    }
    instance.violated = before != after;
  }
  if (instance.violated) {
    instance.description = "# original\n" + FormatBallots(profile) +
                           "# with clones of " + profile.label(target) + "\n" +
                           FormatBallots(cloned);
  }
  return instance;
}

Instance PopulationTrial(const std::string& method, std::mt19937_64& rng,
                         const MethodOptions& options) {
  Instance instance;
  const int m = std::uniform_int_distribution<int>(2, 5)(rng);
  const PreferenceProfile first =
      RandomProfile(m, std::uniform_int_distribution<int>(1, 6)(rng), rng());
  const PreferenceProfile second =
      RandomProfile(m, std::uniform_int_distribution<int>(1, 6)(rng), rng());
  const PreferenceProfile merged = Merge(first, second);

  if (IsLotteryMethod(method)) {
    const Eigen::MatrixXd m1 = ToPayoffs(ComputeMarginMatrix(first));
    const Eigen::MatrixXd m2 = ToPayoffs(ComputeMarginMatrix(second));
    // An odd electorate of strict ballots has a unique maximal lottery, so
    // the solver's lottery is the one every shared lottery must equal.
    if ((first.TotalWeight() + second.TotalWeight()) % 2 == 0) return instance;
    if (!SharedMaximalLotteryExists({m1, m2})) return instance;
    instance.premise = true;
    const Lottery lottery = MaximalLottery(merged);
    const Eigen::VectorXd q = Eigen::Map<const Eigen::VectorXd>(
        lottery.probabilities.data(), lottery.probabilities.size());
    instance.violated = !IsMaximalFor(q, m1) || !IsMaximalFor(q, m2);
  } else {
    const std::set<int> w1 = WinnerSet(method, first, options);
    const std::set<int> w2 = WinnerSet(method, second, options);
    std::set<int> both;
    std::set_intersection(w1.begin(), w1.end(), w2.begin(), w2.end(),
                          std::inserter(both, both.end()));
    if (both.empty()) return instance;
    instance.premise = true;
    for (int a : WinnerSet(method, merged, options)) {
      if (both.count(a) == 0) instance.violated = true;
    }
  }
  if (instance.violated) {
    instance.description = "# first electorate\n" + FormatBallots(first) +
                           "# second electorate\n" + FormatBallots(second);
  }
  return instance;
}

}  // namespace

ConsistencyReport CheckConsistency(const std::string& method, Property property,
                                   int64_t trials, uint64_t seed,
                                   int64_t stop_after_violations) {
  if (!IsSplitMethod(method) || method == "elo") {
    Fail(ErrorKind::kUsage, "unknown voting method '" + method + "'");
  }
  ConsistencyReport report;
  report.method = method;
  report.property = property;
  std::mt19937_64 rng(seed);
  MethodOptions options;
  options.tie_break = TieBreakPolicy(seed);
  const int64_t max_attempts = 1000 * std::max<int64_t>(trials, 1);
  for (int64_t attempt = 0; attempt < max_attempts && report.trials < trials;
       ++attempt) {
    Instance instance;
    switch (property) {
      case Property::kCondorcet:
        instance = CondorcetTrial(method, rng, options);
        break;
      case Property::kClone:
        instance = CloneTrial(method, rng, options);
        break;
      case Property::kPopulation:
        instance = PopulationTrial(method, rng, options);
        break;
    }
    if (!instance.premise) continue;
    ++report.trials;
    if (instance.violated) {
      ++report.violations;
      if (report.counterexamples.size() < 3) {
        report.counterexamples.push_back(instance.description);
      }
      if (stop_after_violations > 0 &&
          report.violations >= stop_after_violations) {
        break;
      }
    }
  }
  return report;
}

ConsistencyReport CheckCondorcetConsistency(const std::string& method,
                                            int64_t trials, uint64_t seed) {
  return CheckConsistency(method, Property::kCondorcet, trials, seed);
}

ConsistencyReport CheckCloneConsistency(const std::string& method,
                                        int64_t trials, uint64_t seed) {
  return CheckConsistency(method, Property::kClone, trials, seed);
}

ConsistencyReport CheckPopulationConsistency(const std::string& method,
                                             int64_t trials, uint64_t seed) {
  return CheckConsistency(method, Property::kPopulation, trials, seed);
}

}  // namespace vase
