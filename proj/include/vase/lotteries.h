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

#ifndef VASE_LOTTERIES_H_
#define VASE_LOTTERIES_H_

// Zero-sum matrix games, maximal lotteries and iterative maximal lotteries.

#include <string>
#include <vector>

#include "Eigen/Core"
#include "vase/profile.h"
#include "vase/ranking.h"

namespace vase {

inline constexpr double kSupportEpsilon = 1e-6;

struct GameSolution {
  Eigen::VectorXd row_strategy;     // Maximiser.
  Eigen::VectorXd column_strategy;  // Minimiser.
  double value = 0.0;
};

// Minimax solution of the game where the row player receives
// payoffs(i, j). Entries must be finite.
GameSolution SolveZeroSum(const Eigen::MatrixXd& payoffs);

// Largest violation of the equilibrium inequalities: how far the row
// strategy falls below `value` against some pure column, or the column
// strategy concedes more than `value` to some pure row.
double EquilibriumGap(const Eigen::MatrixXd& payoffs,
                      const GameSolution& solution);

struct Lottery {
  std::vector<std::string> alternatives;
  std::vector<double> probabilities;

  double ProbabilityOf(const std::string& alternative) const;
};

Eigen::MatrixXd ToPayoffs(const MarginMatrix& margins);

// Row strategy of the margin game. The all-zero game returns the uniform
// lottery.
Lottery MaximalLottery(const PreferenceProfile& profile);
Eigen::VectorXd MaximalLotteryOfMargins(const Eigen::MatrixXd& margins);
// Orders alternatives by their maximal-lottery probability.
RankingResult MaximalLotteryRank(
    const PreferenceProfile& profile,
    const TieBreakPolicy& policy = TieBreakPolicy());

struct LotteryLevel {
  std::vector<int> winners;     // Registry indices.
  std::vector<double> lottery;  // Same order as winners; sums to 1.
};

struct IterativeLotteryResult {
  std::vector<LotteryLevel> levels;  // levels[0] is the top.
  std::vector<double> scores;        // By registry index.
  RankingResult ranking;
};

// Repeatedly solves the margin subgame over the remaining alternatives and
// removes the support of its maximal lottery. An alternative selected at
// level t (of L) scores (L - 1 - t) + its probability at that level.
IterativeLotteryResult IterativeMaximalLotteries(
    const PreferenceProfile& profile,
    const TieBreakPolicy& policy = TieBreakPolicy());

}  // namespace vase

#endif  // VASE_LOTTERIES_H_
