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

#include "vase/profile.h"

#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "test_util.h"
#include "vase/error.h"
#include "vase/methods.h"

namespace vase {
namespace {

using testing::GroupIndex;
using testing::Pentathlon;

CountMatrix Matrix3(std::initializer_list<int64_t> values) {
  CountMatrix m(3, 3);
  auto it = values.begin();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = *it++;
  }
  return m;
}

TEST_CASE("pentathlon count and margin matrices") {
  const PreferenceProfile p = Pentathlon();
  CHECK(ComputePreferenceMatrix(p).counts ==
        Matrix3({0, 4, 2, 1, 0, 2, 3, 3, 0}));
  CHECK(ComputeMarginMatrix(p).margins ==
        Matrix3({0, 3, -1, -3, 0, -1, 1, 1, 0}));
}

TEST_CASE("degenerate profiles") {
  PreferenceProfile empty({"A", "B", "C"});
  CHECK(ComputePreferenceMatrix(empty).counts == CountMatrix::Zero(3, 3));

  PreferenceProfile tie({"A", "B", "C"});
  tie.AddBallot(1, {{"A", "B"}, {"C"}});
  const CountMatrix n = ComputePreferenceMatrix(tie).counts;
  CHECK(n(0, 1) == 0);
  CHECK(n(1, 0) == 0);
  CHECK(n(0, 2) == 1);
  CHECK(n(1, 2) == 1);

  PreferenceProfile cancel({"A", "B"});
  cancel.AddBallot(1, {{"A"}, {"B"}});
  cancel.AddBallot(1, {{"B"}, {"A"}});
  CHECK(ComputeMarginMatrix(cancel).margins == CountMatrix::Zero(2, 2));
}

TEST_CASE("count matrix matches a direct pair count on random weak orders") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 6;
    const PreferenceProfile p =
        testing::RandomWeakProfile(m, 1 + trial % 9, rng);
    CountMatrix oracle = CountMatrix::Zero(m, m);
    for (const auto& ballot : p.ballots()) {
      const auto g = GroupIndex(ballot, m);
      for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
          if (g[x] >= 0 && g[y] >= 0 && g[x] < g[y])
            oracle(x, y) += ballot.weight;
        }
      }
    }
    const CountMatrix n = ComputePreferenceMatrix(p).counts;
    REQUIRE(n == oracle);
    const CountMatrix margins = ComputeMarginMatrix(p).margins;
    CHECK((margins + margins.transpose()) == CountMatrix::Zero(m, m));
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        if (x != y) CHECK(n(x, y) + n(y, x) <= p.TotalWeight());
      }
    }
    const auto winner = FindCondorcetWinner(p);
    if (winner && winner->strength == CondorcetStrength::kStrong) {
      for (int y = 0; y < m; ++y) {
        if (y != winner->alternative)
          CHECK(margins(winner->alternative, y) > 0);
      }
    }
  }
}

TEST_CASE("condorcet winners") {
  auto winner = FindCondorcetWinner(Pentathlon());
  REQUIRE(winner.has_value());
  CHECK(winner->alternative == 2);
  CHECK(winner->strength == CondorcetStrength::kStrong);

  PreferenceProfile cycle({"a", "b", "c"});
  cycle.AddBallot(1, {{"a"}, {"b"}, {"c"}});
  cycle.AddBallot(1, {{"b"}, {"c"}, {"a"}});
  cycle.AddBallot(1, {{"c"}, {"a"}, {"b"}});
  CHECK_FALSE(FindCondorcetWinner(cycle).has_value());

  PreferenceProfile single({"x"});
  single.AddBallot(1, {{"x"}});
  winner = FindCondorcetWinner(single);
  REQUIRE(winner.has_value());
  CHECK(winner->strength == CondorcetStrength::kStrong);

  PreferenceProfile weak({"a", "b", "c"});
  weak.AddBallot(1, {{"a"}, {"b"}, {"c"}});
  weak.AddBallot(1, {{"b"}, {"a"}, {"c"}});
  winner = FindCondorcetWinner(weak);
  REQUIRE(winner.has_value());
  CHECK(winner->alternative == 0);
  CHECK(winner->strength == CondorcetStrength::kWeak);
}

TEST_CASE("profile validation") {
  PreferenceProfile p({"A", "B"});
  CHECK_THROWS_AS(p.AddAlternative("A"), VaseError);
  CHECK_THROWS_AS(p.AddAlternative(""), VaseError);
  CHECK_THROWS_AS(p.AddBallot(0, {{"A"}}), VaseError);
  CHECK_THROWS_AS(p.AddBallot(1, {{"A"}, {"A"}}), VaseError);
  CHECK_THROWS_AS(p.AddBallot(1, {{"Z"}}), VaseError);
  CHECK_THROWS_AS(p.AddBallot(1, {}), VaseError);
  CHECK_THROWS_AS(p.AddBallot(1, {{}}), VaseError);
  Ballot unknown;
  unknown.groups = {{5}};
  CHECK_THROWS_AS(p.AddBallot(unknown), VaseError);
  p.AddBallot(3, {{"B"}, {"A"}});
  CHECK(p.TotalWeight() == 3);
  CHECK(p.BallotToString(p.ballots()[0]) == "B > A");
}

TEST_CASE("restrict keeps strict preferences between survivors") {
  PreferenceProfile p = Pentathlon();
  PreferenceProfile r = p.Restrict({2, 0});
  CHECK(r.alternatives() == std::vector<std::string>{"C", "A"});
  const CountMatrix n = ComputePreferenceMatrix(r).counts;
  CHECK(n(0, 1) == 3);
  CHECK(n(1, 0) == 2);
  PreferenceProfile only_b = p.Restrict({1});
  CHECK(only_b.TotalWeight() == 5);
}

TEST_CASE("ballots from score rows") {
  ScoreTable t;
  t.agents = {"A", "B", "C"};
  t.tasks = {"t1", "t2", "t3"};
  t.scores = {{3.0, 1.0, 5.0}, {1.0, 1.0, std::nullopt}, {2.0, 0.0, 4.0}};
  const PreferenceProfile p = BallotsFromScoreRows(t);
  REQUIRE(p.num_ballots() == 3);
  CHECK(p.BallotToString(p.ballots()[0]) == "A > C > B");
  CHECK(p.BallotToString(p.ballots()[1]) == "A = B > C");
  CHECK(p.BallotToString(p.ballots()[2]) == "A > C");

  ScoreTable bad = t;
  bad.scores[1][0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(BallotsFromScoreRows(bad), VaseError);
  bad.scores[1][0] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(BallotsFromScoreRows(bad), VaseError);
}

TEST_CASE("score-derived ballots ignore monotone transforms") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    ScoreTable t;
    t.agents = testing::Labels(5);
    t.tasks = {"x", "y", "z", "w"};
    for (int a = 0; a < 5; ++a) {
      t.scores.emplace_back();
      for (int k = 0; k < 4; ++k) t.scores.back().push_back(std::round(u(rng)));
    }
    ScoreTable transformed = t;
    for (auto& row : transformed.scores) {
      row[0] = std::exp(*row[0]);
      row[1] = std::pow(*row[1], 3) - 100.0;
      row[2] = 7.0 * *row[2] + 1.0;
      row[3] = std::atan(*row[3]);
    }
    CHECK(BallotsFromScoreRows(t).ballots() ==
          BallotsFromScoreRows(transformed).ballots());
  }
}

TEST_CASE("replicate ballots") {
  PreferenceProfile p({"A", "B"});
  for (int i = 0; i < 3; ++i) p.AddBallot(1, {{"A"}, {"B"}});
  CHECK(ReplicateBallots(p, {{1, 5}}).TotalWeight() == 7);
  CHECK(ReplicateBallots(p, {{0, 1}, {1, 1}, {2, 1}}).ballots() == p.ballots());
  CHECK_THROWS_AS(ReplicateBallots(p, {{0, 0}}), VaseError);
  CHECK_THROWS_AS(ReplicateBallots(p, {{0, -2}}), VaseError);
  CHECK_THROWS_AS(ReplicateBallots(p, {{3, 2}}), VaseError);
}

TEST_CASE(
    "doubling every ballot leaves every pairwise and positional ranking "
    "unchanged") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const PreferenceProfile p =
        trial == 0 ? Pentathlon() : testing::RandomWeakProfile(4, 7, rng);
    std::map<int, int64_t> doubled;
    for (int b = 0; b < p.num_ballots(); ++b) doubled[b] = 2;
    const PreferenceProfile q = ReplicateBallots(p, doubled);
    MethodOptions options;
    options.approval_k = 2;
    options.tie_break = TieBreakPolicy(trial);
    for (const auto& method : VotingMethodNames()) {
      // The Droop quota floor(n / (k + 1)) + 1 does not scale with n.
      if (method == "stv") continue;
      CAPTURE(method);
      CHECK(RunMethod(method, p, options).ranking.Order() ==
            RunMethod(method, q, options).ranking.Order());
    }
  }
}

}  // namespace
}  // namespace vase
