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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "Eigen/Core"
#include "oracles.h"
#include "test_util.h"
#include "vase/baselines.h"
#include "vase/condorcet_rules.h"
#include "vase/harness.h"
#include "vase/io.h"
#include "vase/lotteries.h"
#include "vase/methods.h"
#include "vase/profile.h"
#include "vase/scoring_rules.h"

namespace vase {
namespace {

using Clock = std::chrono::steady_clock;

// Collects failed checks for one criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void Near(double actual, double expected, double tol,
            const std::string& what) {
    if (!(std::abs(actual - expected) <= tol)) {
      std::ostringstream s;
      s.precision(10);
      s << what << ": got " << actual << ", want " << expected << " +- " << tol;
      failures_.push_back(s.str());
    }
  }
  void Note(const std::string& text) { notes_.push_back(text); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

bool ScoresAre(const RankingResult& r, const std::vector<std::string>& order,
               const std::vector<double>& scores) {
  if (r.Order() != order) return false;
  for (size_t i = 0; i < order.size(); ++i) {
    if (r.ScoreOf(order[i]) != scores[i]) return false;
  }
  return true;
}

void Pentathlon(Checker& c) {
  const PreferenceProfile p = testing::Pentathlon();
  const std::vector<double> borda = BordaScores(p);
  c.Expect(borda == std::vector<double>{6, 3, 6}, "Borda scores (6,3,6)");
  c.Expect(ApprovalScores(p, 2) == std::vector<double>{4, 2, 4},
           "approval k=2 scores (4,2,4)");
  const RankingResult plurality = PluralityRank(p);
  c.Expect(plurality.ScoreOf("A") == 2 && plurality.ScoreOf("C") == 2 &&
               plurality.ScoreOf("B") == 1 &&
               plurality.entries[2].alternative == "B",
           "plurality (A=2, C=2, B=1)");
  bool seed_decides = false;
  const std::string first =
      PluralityRank(p, TieBreakPolicy(0)).entries[0].alternative;
  for (uint64_t seed = 1; seed < 64; ++seed) {
    const RankingResult r = PluralityRank(p, TieBreakPolicy(seed));
    if (r.entries[0].alternative != first) seed_decides = true;
    if (r != PluralityRank(p, TieBreakPolicy(seed))) seed_decides = false;
  }
  c.Expect(seed_decides, "plurality A/C tie is decided by the seed");

  const auto [stv, trace] = StvRank(p, 1);
  c.Expect(ScoresAre(stv, {"C", "A", "B"}, {6.3, 3.2, 2.1}),
           "STV C>A>B (6.3,3.2,2.1)");

  c.Expect(ScoresAre(CopelandRank(p), {"C", "A", "B"}, {2, 1, 0}),
           "Copeland (C=2,A=1,B=0)");

  const KemenyResult kemeny = KemenyRank(p);
  c.Expect(kemeny.value == 10, "Kemeny value 10");
  c.Expect(ScoresAre(kemeny.ranking, {"C", "A", "B"}, {6, 4, 0}),
           "Kemeny C>A>B (6,4,0)");

  const auto [schulze, paths] = SchulzeRank(p);
  CountMatrix expected_p(3, 3);
  expected_p << 0, 4, 0, 0, 0, 0, 3, 3, 0;
  c.Expect(paths.strengths == expected_p, "Schulze P");
  c.Expect(ScoresAre(schulze, {"C", "A", "B"}, {6, 4, 0}),
           "Schulze C>A>B (6,4,0)");

  const auto [rp, graph] = RankedPairsRank(p);
  c.Expect(ScoresAre(rp, {"C", "A", "B"}, {5, 3, 0}),
           "ranked pairs C>A>B (5,3,0)");

  const Lottery ml = MaximalLottery(p);
  c.Near(ml.ProbabilityOf("C"), 1.0, 1e-7, "ML P(C)");
  c.Near(ml.ProbabilityOf("A"), 0.0, 1e-7, "ML P(A)");
  c.Near(ml.ProbabilityOf("B"), 0.0, 1e-7, "ML P(B)");

  const IterativeLotteryResult iml = IterativeMaximalLotteries(p);
  c.Near(iml.scores[2], 3.0, 1e-7, "IML score C");
  c.Near(iml.scores[0], 2.0, 1e-7, "IML score A");
  c.Near(iml.scores[1], 1.0, 1e-7, "IML score B");
}

// A and C plus `copies` clones of B; one game-equivalent per pair.
WinRecord CloneWorld(int copies) {
  std::vector<std::string> agents = {"A", "C"};
  for (int i = 0; i < copies; ++i) agents.push_back("B" + std::to_string(i));
  WinRecord r(agents);
  r.Add("A", "C", 0.9, 1);
  for (int i = 0; i < copies; ++i) {
    const std::string b = "B" + std::to_string(i);
    r.Add("A", b, 0.55, 1);
    r.Add(b, "C", 0.52, 1);
    for (int j = i + 1; j < copies; ++j)
      r.Add(b, "B" + std::to_string(j), 0.5, 1);
  }
  return r;
}

void EloClones(Checker& c) {
  double previous = -1.0;
  bool monotone = true;
  for (int copies = 0; copies <= 10; ++copies) {
    const EloRatings e = FitElo(CloneWorld(copies));
    c.Expect(e.converged,
             "Elo converged with " + std::to_string(copies) + " clones");
    const double gap = e.RatingOf("A") - e.RatingOf("C");
    const double p_hat = EloPredict(e.RatingOf("A"), e.RatingOf("C"));
    const double error = std::abs(p_hat - 0.9);
    if (copies == 0) {
      c.Near(error, 0.0, 1e-6, "0 clones: A-C fit is exact");
    } else {
      if (error <= previous) monotone = false;
      previous = error;
    }
    if (copies == 10) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "10 clones: gap %.2f, p_hat %.4f", gap,
                    p_hat);
      c.Note(buf);
      c.Near(gap, 98.0, 10.0, "10 clones: r_A - r_C");
      c.Near(p_hat, 0.631, 0.02, "10 clones: p_hat_AC");
    }
  }
  c.Expect(monotone, "error strictly increases from 1 to 10 clones");
}

void EloSymmetry(Checker& c) {
  WinRecord r({"A", "B", "C"});
  r.Add("A", "B", 0.8, 1);
  r.Add("A", "C", 0.4, 1);
  r.Add("B", "C", 0.4, 1);
  double worst = 0.0;
  int steps = 0;
  EloFitOptions options;
  options.observer = [&](int, const std::vector<double>& ratings) {
    worst = std::max(worst, std::abs(ratings[0] - ratings[2]));
    ++steps;
  };
  const EloRatings e = FitElo(r, options);
  c.Expect(e.converged, "converged");
  c.Expect(steps > 0, "observer called");
  c.Expect(worst < 1e-9, "|r_A - r_C| < 1e-9 at every iteration");
  c.Expect(std::abs(e.RatingOf("A") - e.RatingOf("C")) < 1e-9,
           "|r_A - r_C| < 1e-9 at convergence");
}

void Subgame(Checker& c) {
  const Eigen::MatrixXd m =
      testing::ReadMatrixCsv(VASE_DATA_DIR "/subgame9.csv");
  if (m.rows() != 9 || m.cols() != 9) {
    c.Expect(false, "subgame9.csv is 9x9");
    return;
  }
  Eigen::VectorXd published = Eigen::VectorXd::Zero(9);
  published(0) = 1.0 / 12;
  published(2) = 1.0 / 12;
  published(5) = 10.0 / 12;
  const Eigen::VectorXd values = m.transpose() * published;
  const std::vector<double> printed = {0, 3.0821, 0,      7.2471, 12.2451,
                                       0, 3.332,  3.8318, 8.4133};
  // Three columns are exactly zero in exact arithmetic.
  c.Expect(values.minCoeff() >= -1e-12, "published strategy: p^T M >= 0");
  for (int j = 0; j < 9; ++j) {
    c.Near(values(j), printed[j], 0.01, "expected value " + std::to_string(j));
  }
  const GameSolution s = SolveZeroSum(m);
  c.Near(s.value, 0.0, 1e-7, "game value");
  c.Expect(EquilibriumGap(m, s) < 1e-7, "solver strategy is an equilibrium");
  c.Expect((m.transpose() * s.row_strategy).minCoeff() >= -1e-7,
           "solver strategy: p^T M >= 0");
}

struct SuiteCase {
  std::string method;
  Property property;
  bool should_hold;
};

void Properties(Checker& c) {
  const std::vector<std::string> condorcet_yes = {
      "copeland", "ranked_pairs",    "kemeny",
      "schulze",  "maximal_lottery", "iml"};
  const std::vector<std::string> condorcet_no = {"approval", "borda",
                                                 "plurality", "stv"};
  const std::vector<std::string> clone_yes = {"ranked_pairs", "schulze",
                                              "maximal_lottery"};
  const std::vector<std::string> clone_no = {
      "approval", "borda", "plurality", "stv", "copeland", "kemeny"};
  const std::vector<std::string> population_yes = {
      "approval", "borda", "plurality", "maximal_lottery"};
  const std::vector<std::string> population_no = {
      "stv", "copeland", "ranked_pairs", "kemeny", "schulze"};
  std::vector<SuiteCase> cases;
  for (const auto& m : condorcet_yes)
    cases.push_back({m, Property::kCondorcet, true});
  for (const auto& m : condorcet_no)
    cases.push_back({m, Property::kCondorcet, false});
  for (const auto& m : clone_yes) cases.push_back({m, Property::kClone, true});
  for (const auto& m : clone_no) cases.push_back({m, Property::kClone, false});
  for (const auto& m : population_yes)
    cases.push_back({m, Property::kPopulation, true});
  for (const auto& m : population_no)
    cases.push_back({m, Property::kPopulation, false});

  std::vector<std::future<ConsistencyReport>> futures;
  for (const auto& sc : cases) {
    futures.push_back(std::async(std::launch::async, [sc] {
      if (!sc.should_hold)
        return CheckConsistency(sc.method, sc.property, 10000, 17, 1);
      const int64_t trials = sc.property == Property::kClone ? 500 : 1000;
      return CheckConsistency(sc.method, sc.property, trials, 17);
    }));
  }
  for (size_t i = 0; i < cases.size(); ++i) {
    const SuiteCase& sc = cases[i];
    const ConsistencyReport r = futures[i].get();
    const std::string tag = PropertyName(sc.property) + "/" + sc.method;
    if (sc.should_hold) {
      const int64_t trials = sc.property == Property::kClone ? 500 : 1000;
      c.Expect(r.trials == trials,
               tag + ": ran " + std::to_string(trials) + " trials");
      c.Expect(r.violations == 0,
               tag + ": " + std::to_string(r.violations) + " violations");
    } else {
      bool parsed = false;
      if (!r.counterexamples.empty()) {
        try {
          parsed = ParseBallots(r.counterexamples[0]).num_ballots() > 0;
        } catch (const std::exception&) {
        }
      }
      c.Expect(r.violations >= 1 && parsed,
               tag + ": serialized counterexample within 10^4 trials");
    }
  }
}

void KemenyEquivalence(Checker& c) {
  std::mt19937_64 rng(2024);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 5;
    const int n = 1 + static_cast<int>(rng() % 9);
    const PreferenceProfile p = testing::RandomWeakProfile(m, n, rng);
    const TieBreakPolicy policy(trial);
    const KemenyResult k = KemenyRank(p, policy);
    const testing::KemenyOracle o = testing::BruteForceKemeny(p, policy);
    bool same = k.value == o.value;
    for (int a = 0; a < m; ++a) {
      same = same &&
             k.ranking.ScoreOf(p.label(a)) == static_cast<double>(o.scores[a]);
    }
    mismatches += !same;
  }
  c.Expect(mismatches == 0,
           std::to_string(mismatches) + " of 200 profiles differ");
}

RankingResult StrictRanking(const std::vector<std::string>& order) {
  RankingResult r;
  for (size_t i = 0; i < order.size(); ++i) {
    r.entries.push_back({static_cast<int>(i) + 1, order[i],
                         static_cast<double>(order.size() - i)});
  }
  return r;
}

void KendallHarness(Checker& c) {
  const std::vector<std::string> seven = testing::Labels(7);
  WeakOrder same;
  WeakOrder reversed;
  for (const auto& x : seven) same.push_back({x});
  for (auto it = seven.rbegin(); it != seven.rend(); ++it)
    reversed.push_back({*it});
  const RankingResult ranking = StrictRanking(seven);
  c.Expect(KendallTau(ranking, same) == 0, "identical order -> 0");
  c.Expect(KendallTau(ranking, reversed) == 21, "reversed 7-order -> 21");

  std::mt19937_64 rng(99);
  std::vector<GameRecord> games;
  for (int g = 0; g < 10000; ++g) {
    auto order = seven;
    std::shuffle(order.begin(), order.end(), rng);
    GameRecord game{std::to_string(g), {}};
    for (int i = 0; i < 7; ++i) game.participants.emplace_back(order[i], 7 - i);
    games.push_back(std::move(game));
  }
  auto random_order = seven;
  std::shuffle(random_order.begin(), random_order.end(), rng);
  c.Near(ErrorPerGame(games, StrictRanking(random_order)), 10.5, 0.2,
         "random ranking on impartial-culture games");

  std::vector<double> pool(60);
  std::normal_distribution<double> rating(0.0, 200.0);
  for (double& r : pool) r = rating(rng);
  const auto corpus = EloWorldGames(pool, 2000, 7, 11);
  SplitSpec spec;
  spec.seed = 5;
  spec.train_size = 1800;
  spec.test_size = 200;
  spec.replicates = 50;
  MethodOptions options;
  options.elo.max_iters = 5000;
  options.elo.grad_tol = 1e-6;
  const std::vector<std::string> methods = {
      "elo", "approval2", "approval3", "plurality", "borda", "copeland", "stv"};
  const auto start = Clock::now();
  const SplitEvaluation eval = EvaluateSplits(corpus, spec, methods, options);
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  c.Expect(seconds < 60.0,
           "synthetic eval under 60 s (" + std::to_string(seconds) + " s)");
  c.Expect(eval.methods.size() == methods.size(), "every method reported");
  for (const auto& m : eval.methods) {
    c.Expect(m.errors.size() == 50, m.method + ": 50 splits");
    c.Expect(std::isfinite(m.mean) && m.ci95 >= 0.0,
             m.method + ": mean and CI");
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s %.3f +- %.3f", m.method.c_str(), m.mean,
                  m.ci95);
    c.Note(buf);
  }
}

ScoreTable RandomTable(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ScoreTable t;
  t.agents = testing::Labels(5);
  for (int k = 0; k < 8; ++k) t.tasks.push_back("t" + std::to_string(k));
  for (int a = 0; a < 5; ++a) {
    t.scores.emplace_back();
    for (int k = 0; k < 8; ++k) t.scores.back().push_back(u(rng));
  }
  return t;
}

// Strictly increasing maps, a different one per task.
double Transform(int task, double x) {
  switch (task % 4) {
    case 0:
      return std::pow(x, 4);
    case 1:
      return std::exp(6.0 * x);
    case 2:
      return std::sqrt(x);
    default:
      return std::log1p(20.0 * x);
  }
}

void OrdinalInvariance(Checker& c) {
  std::mt19937_64 rng(8);
  int nash_changed = 0;
  int vase_changed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const ScoreTable t = RandomTable(rng);
    ScoreTable u = t;
    for (auto& row : u.scores) {
      for (int k = 0; k < 8; ++k) row[k] = Transform(k, *row[k]);
    }
    const auto nash_before = NashAverage(NormalizeScores(t)).ranking.Order();
    const auto nash_after = NashAverage(NormalizeScores(u)).ranking.Order();
    nash_changed += nash_before != nash_after;

    const PreferenceProfile before = BallotsFromScoreRows(t);
    const PreferenceProfile after = BallotsFromScoreRows(u);
    MethodOptions options;
    options.approval_k = 2;
    options.tie_break = TieBreakPolicy(trial);
    for (const auto& name : VotingMethodNames()) {
      const RankingResult a = RunMethod(name, before, options).ranking;
      const RankingResult b = RunMethod(name, after, options).ranking;
      if (a.Order() != b.Order()) {
        ++vase_changed;
        c.Expect(false, name + " changed on table " + std::to_string(trial));
      }
    }
  }
  c.Note("nash_average changed on " + std::to_string(nash_changed) +
         "/100 tables");
  c.Expect(nash_changed >= 1, "nash_average ranking changes at least once");
  c.Expect(vase_changed == 0, "no voting method ranking changes");
}

ScoreTable TableOf(const std::vector<std::vector<double>>& rows) {
  ScoreTable t;
  for (size_t a = 0; a < rows.size(); ++a)
    t.agents.push_back("g" + std::to_string(a));
  for (size_t k = 0; k < rows[0].size(); ++k)
    t.tasks.push_back("t" + std::to_string(k));
  for (const auto& row : rows) t.scores.emplace_back(row.begin(), row.end());
  return t;
}

void NashProperties(Checker& c) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + trial % 5;
    const int n = 2 + (trial / 5) % 6;
    std::vector<std::vector<double>> rows(m, std::vector<double>(n));
    for (auto& row : rows) {
      for (double& x : row) x = u(rng);
    }
    const NashAverageResult r = NashAverage(NormalizeScores(TableOf(rows)));
    for (int i = 0; i < m; ++i) {
      if (r.agent_distribution.probabilities[i] > kSupportEpsilon &&
          std::abs(r.agent_values[i] - r.game_value) > 1e-6) {
        ++bad;
      }
    }
  }
  c.Expect(bad == 0,
           std::to_string(bad) + " support agents off the game value");

  const std::vector<std::vector<double>> dup = {
      {0.9, 0.1, 0.6, 0.3}, {0.9, 0.1, 0.6, 0.3}, {0.2, 0.8, 0.4, 0.5}};
  Eigen::MatrixXd s(3, 4);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) s(i, j) = dup[i][j];
  }
  const NashAverageResult r = NashAverage(TableOf(dup));
  const testing::NashOracle oracle = testing::SupportEnumeration(s);
  c.Near(r.game_value, oracle.value, 1e-4, "duplicate rows: game value");
  for (int i = 0; i < 3; ++i) {
    c.Near(r.agent_distribution.probabilities[i], oracle.rows[i], 1e-4,
           "duplicate rows: agent " + std::to_string(i));
  }
  for (int j = 0; j < 4; ++j) {
    c.Near(r.task_distribution.probabilities[j], oracle.cols[j], 1e-4,
           "duplicate rows: task " + std::to_string(j));
  }
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Checker&)> run;
};

int Main() {
  const std::vector<Criterion> criteria = {
      {1, "pentathlon golden suite", 1.0, Pentathlon},
      {2, "Elo clone pathology", 5.0, EloClones},
      {3, "Elo pentathlon symmetry", 5.0, EloSymmetry},
      {4, "nine-alternative margin subgame", 1.0, Subgame},
      {5, "voting property suites", 300.0, Properties},
      {6, "Kemeny oracle equivalence", 60.0, KemenyEquivalence},
      {7, "Kendall-tau harness", 120.0, KendallHarness},
      {8, "ordinal invariance contrast", 120.0, OrdinalInvariance},
      {9, "Nash averaging properties", 60.0, NashProperties},
  };
  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checker c;
    const auto start = Clock::now();
    try {
      criterion.run(c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    c.Expect(seconds < criterion.budget_seconds,
             "runtime " + std::to_string(seconds) + " s over budget");
    const bool ok = c.failures().empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL",
                criterion.id, criterion.name.c_str(), seconds);
    for (const auto& note : c.notes())
      std::printf("    note: %s\n", note.c_str());
    for (const auto& f : c.failures())
      std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace vase

int main() { return vase::Main(); }
