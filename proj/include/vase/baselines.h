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

#ifndef VASE_BASELINES_H_
#define VASE_BASELINES_H_

// Elo ratings and Nash averaging, the two aggregate evaluations VasE is
// compared against.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vase/lotteries.h"
#include "vase/profile.h"
#include "vase/ranking.h"

namespace vase {

// Probability that a player rated `rating` beats one rated `opponent`:
// 1 / (1 + 10^((opponent - rating) / 400)).
double EloPredict(double rating, double opponent);

// Head-to-head results. wins(i, j) + wins(j, i) == games(i, j); counts may be
// fractional so win rates can be fed in directly.
class WinRecord {
 public:
  explicit WinRecord(std::vector<std::string> agents);

  // Records `wins` victories of i over j out of `total` games.
  void Add(int i, int j, double wins, double total);
  void Add(const std::string& i, const std::string& j, double wins,
           double total);

  const std::vector<std::string>& agents() const { return agents_; }
  int num_agents() const { return static_cast<int>(agents_.size()); }
  double Wins(int i, int j) const;
  double Games(int i, int j) const;
  bool empty() const;

 private:
  int Index(const std::string& agent) const;

  std::vector<std::string> agents_;
  std::vector<std::vector<double>> wins_;
  std::vector<std::vector<double>> games_;
};

// Every strict pair in a ballot is one game won by the higher alternative;
// tied pairs are split half and half.
WinRecord WinRecordFromProfile(const PreferenceProfile& profile);

struct EloFitOptions {
  double k_factor = 32.0;
  int max_iters = 1000000;
  double grad_tol = 1e-10;
  // Called after every full-batch update with the iteration number and the
  // (un-anchored) ratings.
  std::function<void(int, const std::vector<double>&)> observer;
};

struct EloRatings {
  std::vector<std::string> agents;
  std::vector<double> ratings;  // Lowest rating shifted to exactly 0.
  double k_factor = 0.0;
  int anchor = -1;
  int iterations = 0;
  bool converged = false;

  double RatingOf(const std::string& agent) const;
};

// Batch update: r_x += K * sum_y (wins(x, y) - games(x, y) * E(r_x, r_y)),
// starting from all-zero ratings, until max |step| < grad_tol.
EloRatings FitElo(const WinRecord& record,
                  const EloFitOptions& options = EloFitOptions());

RankingResult EloRank(const EloRatings& ratings,
                      const TieBreakPolicy& policy = TieBreakPolicy());

// Per-task min-max scaling into [0, 1]; constant columns become 0.5.
ScoreTable NormalizeScores(const ScoreTable& table);

struct NashAverageResult {
  Lottery agent_distribution;
  Lottery task_distribution;
  std::vector<double> agent_values;  // S * task_distribution.
  double game_value = 0.0;
  // False if entropy maximisation stalled and an LP vertex was used.
  bool max_entropy_converged = true;
  RankingResult ranking;
};

// Agents (rows) maximise and tasks (columns) minimise x^T S y. Each side's
// strategy is the maximum-entropy point of its optimal face; agents are
// ranked by their expected score against the task strategy. The table must be
// complete.
NashAverageResult NashAverage(const ScoreTable& table,
                              const TieBreakPolicy& policy = TieBreakPolicy());

// Maximum-entropy distribution over {x in simplex : lhs x >= rhs}, the
// optimal face of a matrix game. Exposed for testing.
Eigen::VectorXd MaxEntropyOnFace(const Eigen::MatrixXd& lhs,
                                 const Eigen::VectorXd& rhs, bool* converged);

}  // namespace vase

#endif  // VASE_BASELINES_H_
