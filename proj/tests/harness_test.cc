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
#include <numeric>
#include <random>

#include "doctest.h"
#include "test_util.h"
#include "vase/error.h"
#include "vase/io.h"
#include "vase/scoring_rules.h"

namespace vase {
namespace {

RankingResult Strict(const std::vector<std::string>& order) {
  RankingResult r;
  for (size_t i = 0; i < order.size(); ++i) {
    r.entries.push_back(
        {static_cast<int>(i) + 1, order[i], double(order.size() - i)});
  }
  return r;
}

WeakOrder AsWeak(const std::vector<std::string>& order) {
  WeakOrder w;
  for (const auto& x : order) w.push_back({x});
  return w;
}

// Counts discordant pairs by checking every pair explicitly.
int64_t BruteTau(const std::vector<std::string>& a,
                 const std::vector<std::string>& b) {
  int64_t d = 0;
  for (size_t i = 0; i < b.size(); ++i) {
    for (size_t j = i + 1; j < b.size(); ++j) {
      const auto pi = std::find(a.begin(), a.end(), b[i]) - a.begin();
      const auto pj = std::find(a.begin(), a.end(), b[j]) - a.begin();
      d += pi > pj;
    }
  }
  return d;
}

TEST_CASE("Kendall tau examples") {
  const std::vector<std::string> seven = {"a", "b", "c", "d", "e", "f", "g"};
  std::vector<std::string> reversed(seven.rbegin(), seven.rend());
  CHECK(KendallTau(Strict(seven), AsWeak(seven)) == 0);
  CHECK(KendallTau(Strict(seven), AsWeak(reversed)) == 21);
  CHECK(KendallTau(Strict({"A", "B", "C", "D"}), AsWeak({"B", "D", "A"})) == 2);
  CHECK(KendallTau(Strict({"A", "B", "C"}), {{"C", "B"}, {"A"}}) == 2);
  CHECK(KendallTau(Strict({"A", "B", "C"}), {{"C", "B", "A"}}) == 0);
  CHECK_THROWS_AS(KendallTau(Strict({"A", "B"}), AsWeak({"A", "Z"})),
                  VaseError);
}

TEST_CASE("Kendall tau is a metric on strict orders") {
  std::mt19937_64 rng(111);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + trial % 7;
    auto base = testing::Labels(m);
    auto x = base, y = base, z = base;
    std::shuffle(x.begin(), x.end(), rng);
    std::shuffle(y.begin(), y.end(), rng);
    std::shuffle(z.begin(), z.end(), rng);
    const int64_t xy = KendallTau(Strict(x), AsWeak(y));
    CHECK(xy == BruteTau(x, y));
    CHECK(xy == KendallTau(Strict(y), AsWeak(x)));
    CHECK((xy == 0) == (x == y));
    CHECK(xy <=
          KendallTau(Strict(x), AsWeak(z)) + KendallTau(Strict(z), AsWeak(y)));
  }
}

GameRecord Game(const std::string& id,
                std::vector<std::pair<std::string, double>> participants) {
  return GameRecord{id, std::move(participants)};
}

TEST_CASE("error per game") {
  const RankingResult r = Strict({"a", "b", "c", "d", "e", "f", "g"});
  std::vector<GameRecord> agree = {Game("1", {{"a", 3}, {"c", 2}, {"g", 1}}),
                                   Game("2", {{"b", 9}, {"e", 0}})};
  CHECK(ErrorPerGame(agree, r) == 0.0);
  std::vector<GameRecord> reversed;
  GameRecord g{"r", {}};
  for (int i = 0; i < 7; ++i)
    g.participants.emplace_back(std::string(1, 'a' + i), i);
  reversed.push_back(g);
  CHECK(ErrorPerGame(reversed, r) == 21.0);
  std::vector<GameRecord> unseen = {Game("u", {{"zz", 5}, {"b", 4}, {"a", 1}})};
  int64_t dropped = 0;
  CHECK(ErrorPerGame(unseen, r, &dropped) == 1.0);
  CHECK(dropped == 1);
  CHECK_THROWS_AS(ErrorPerGame({}, r), VaseError);

  const WeakOrder order = GameOrder(Game("t", {{"x", 1}, {"y", 3}, {"z", 1}}));
  CHECK(order == WeakOrder{{"y"}, {"x", "z"}});
}

TEST_CASE("random fixed ranking scores about half the pairs") {
  const std::vector<double> flat(7, 0.0);
  std::mt19937_64 rng(7);
  std::vector<GameRecord> games;
  for (int g = 0; g < 10000; ++g) {
    auto order = testing::Labels(7);
    std::shuffle(order.begin(), order.end(), rng);
    GameRecord game{std::to_string(g), {}};
    for (int i = 0; i < 7; ++i) game.participants.emplace_back(order[i], 7 - i);
    games.push_back(game);
  }
  auto ranking = testing::Labels(7);
  std::shuffle(ranking.begin(), ranking.end(), rng);
  CHECK(std::abs(ErrorPerGame(games, Strict(ranking)) - 10.5) < 0.2);
}

TEST_CASE("vote histograms") {
  PreferenceProfile one({"a", "b"});
  one.AddBallot(5, {{"a"}, {"b"}});
  VoteHistogram h = CountUniqueVotes(one);
  CHECK(h.distinct == 1);
  REQUIRE(h.counts.size() == 1);
  CHECK(h.counts[0].second == 5);

  PreferenceProfile ties({"a", "b", "c"});
  ties.AddBallot(1, {{"a", "b"}, {"c"}});
  ties.AddBallot(1, {{"a"}, {"b"}, {"c"}});
  ties.AddBallot(2, {{"b", "a"}, {"c"}});
  h = CountUniqueVotes(ties);
  CHECK(h.distinct == 2);
  CHECK(h.counts[0].second == 3);

  std::mt19937_64 rng(3);
  const PreferenceProfile distinct = RandomProfile(8, 20, 5);
  // With 8! orders, 20 draws are all different for this seed.
  CHECK(CountUniqueVotes(distinct).distinct == 20);
}

TEST_CASE("clone injection") {
  const PreferenceProfile p = testing::Pentathlon();
  const PreferenceProfile c = InjectClones(p, "B", 1, 4);
  CHECK(c.num_alternatives() == 4);
  CHECK(c.label(3) == "B~1");
  CHECK(IsCloneSet(c, {1, 3}));
  CHECK_FALSE(IsCloneSet(c, {0, 3}));
  CHECK(InjectClones(p, "B", 1, 4).ballots() == c.ballots());
  CHECK_THROWS_AS(InjectClones(p, "B", 0, 4), VaseError);
  CHECK_THROWS_AS(InjectClones(p, "Q", 1, 4), VaseError);

  std::mt19937_64 rng(121);
  for (int trial = 0; trial < 100; ++trial) {
    const PreferenceProfile base = testing::RandomWeakProfile(4, 6, rng);
    const int copies = 1 + trial % 3;
    const PreferenceProfile cloned = InjectClones(base, "b", copies, trial);
    std::vector<int> set = {1};
    for (int i = 0; i < copies; ++i) set.push_back(4 + i);
    CHECK(IsCloneSet(cloned, set));
    // Dropping the clones gives back the original ballots.
    CHECK(cloned.Restrict({0, 1, 2, 3}).ballots() == base.ballots());
  }
}

TEST_CASE("random profiles") {
  CHECK(RandomProfile(5, 10, 42).ballots() ==
        RandomProfile(5, 10, 42).ballots());
  CHECK_FALSE(RandomProfile(5, 10, 42).ballots() ==
              RandomProfile(5, 10, 43).ballots());
  const PreferenceProfile single = RandomProfile(1, 4, 0);
  for (const auto& b : single.ballots())
    CHECK(b.groups == std::vector<std::vector<int>>{{0}});
  CHECK_THROWS_AS(RandomProfile(0, 1, 0), VaseError);

  // Two alternatives rated 400 apart: A wins 10/11 of the time.
  const PreferenceProfile elo =
      RandomProfile(2, 10000, 9, EloWorld{{400.0, 0.0}});
  const double n = 10000;
  const double wins =
      static_cast<double>(ComputePreferenceMatrix(elo).counts(0, 1));
  const double p = 10.0 / 11.0;
  CHECK(std::abs(wins / n - p) < 3 * std::sqrt(p * (1 - p) / n));
  CHECK_THROWS_AS(RandomProfile(3, 1, 0, EloWorld{{1.0}}), VaseError);
}

TEST_CASE("synthetic games and splits") {
  std::vector<double> pool(20);
  for (int i = 0; i < 20; ++i) pool[i] = 40.0 * i;
  const auto games = EloWorldGames(pool, 300, 7, 5);
  REQUIRE(games.size() == 300);
  for (const auto& g : games) CHECK(g.participants.size() == 7);
  CHECK(ProfileFromGames(games).num_ballots() == 300);

  SplitSpec spec;
  spec.seed = 1;
  spec.train_size = 250;
  spec.test_size = 50;
  spec.replicates = 4;
  MethodOptions options;
  options.elo.max_iters = 2000;
  options.elo.grad_tol = 1e-6;
  const auto eval =
      EvaluateSplits(games, spec, {"elo", "copeland", "approval2"}, options);
  REQUIRE(eval.methods.size() == 3);
  for (const auto& m : eval.methods) {
    CHECK(m.errors.size() == 4);
    CHECK(m.mean ==
          doctest::Approx(
              std::accumulate(m.errors.begin(), m.errors.end(), 0.0) / 4));
    CHECK(m.ci95 >= 0.0);
    // Much better than a random ranking.
    CHECK(m.mean < 10.5);
  }
  const auto again =
      EvaluateSplits(games, spec, {"elo", "copeland", "approval2"}, options);
  CHECK(again.methods[1].errors == eval.methods[1].errors);

  spec.train_size = 290;
  CHECK_THROWS_AS(EvaluateSplits(games, spec, {"borda"}), VaseError);
  spec.train_size = 100;
  CHECK_THROWS_AS(EvaluateSplits(games, spec, {"nope"}), VaseError);
}

TEST_CASE("consistency checks") {
  const auto ok = CheckCondorcetConsistency("copeland", 100, 1);
  CHECK(ok.trials == 100);
  CHECK(ok.violations == 0);
  const auto bad = CheckConsistency("borda", Property::kCondorcet, 10000, 1, 1);
  CHECK(bad.violations == 1);
  REQUIRE(bad.counterexamples.size() == 1);
  // The counterexample parses back and still exhibits the failure.
  const PreferenceProfile p = ParseBallots(bad.counterexamples[0]);
  const auto winner = FindCondorcetWinner(p);
  REQUIRE(winner.has_value());
  CHECK(winner->strength == CondorcetStrength::kStrong);
  const std::vector<double> borda = BordaScores(p);
  int rivals = 0;
  for (int a = 0; a < p.num_alternatives(); ++a) {
    if (a != winner->alternative && borda[a] >= borda[winner->alternative])
      ++rivals;
  }
  CHECK(rivals > 0);
  CHECK_THROWS_AS(CheckCloneConsistency("elo", 1, 1), VaseError);
  CHECK(PropertyName(Property::kPopulation) == "population");
}

}  // namespace
}  // namespace vase
