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

#include "vase/lotteries.h"

#include <algorithm>
#include <cmath>

#include "vase/error.h"
#include "vase/linear_program.h"

namespace vase {
namespace {

// Clips negative dust and rescales to sum to one.
Eigen::VectorXd CleanDistribution(Eigen::VectorXd v) {
  v = v.cwiseMax(0.0);
  const double total = v.sum();
  if (total > 0.0) v /= total;
  return v;
}

}  // namespace

GameSolution SolveZeroSum(const Eigen::MatrixXd& payoffs) {
  const int rows = static_cast<int>(payoffs.rows());
  const int cols = static_cast<int>(payoffs.cols());
  if (rows == 0 || cols == 0) Fail(ErrorKind::kUsage, "empty payoff matrix");
  if (!payoffs.allFinite()) {
    Fail(ErrorKind::kData, "payoff matrix has a non-finite entry");
  }
  // With every payoff >= 1 the game value is positive, and the column
  // player's problem becomes max 1^T w s.t. B w <= 1, w >= 0 with
  // w = q / value. Its duals are the row player's p / value.
  const double shift = 1.0 + std::abs(payoffs.minCoeff());
  LinearProgram lp;
  lp.objective = Eigen::VectorXd::Ones(cols);
  lp.upper_lhs = payoffs.array() + shift;
  lp.upper_rhs = Eigen::VectorXd::Ones(rows);
  const LpSolution solution = SolveLinearProgram(lp);
  if (solution.status != LpStatus::kOptimal || solution.objective <= 0.0) {
    Fail(ErrorKind::kSolver, "zero-sum game LP did not reach an optimum");
  }
  GameSolution game;
  game.column_strategy = CleanDistribution(solution.x);
  game.row_strategy = CleanDistribution(solution.upper_duals);
  game.value = 1.0 / solution.objective - shift;
  return game;
}

double EquilibriumGap(const Eigen::MatrixXd& payoffs,
                      const GameSolution& solution) {
  const Eigen::VectorXd row_payoffs =
      payoffs.transpose() * solution.row_strategy;  // Per pure column.
  const Eigen::VectorXd column_payoffs =
      payoffs * solution.column_strategy;  // Per pure row.
  const double row_shortfall = solution.value - row_payoffs.minCoeff();
  const double column_excess = column_payoffs.maxCoeff() - solution.value;
  return std::max({0.0, row_shortfall, column_excess});
}

double Lottery::ProbabilityOf(const std::string& alternative) const {
  for (size_t i = 0; i < alternatives.size(); ++i) {
    if (alternatives[i] == alternative) return probabilities[i];
  }
  return 0.0;
}

Eigen::MatrixXd ToPayoffs(const MarginMatrix& margins) {
  return margins.margins.cast<double>();
}

Eigen::VectorXd MaximalLotteryOfMargins(const Eigen::MatrixXd& margins) {
  const int m = static_cast<int>(margins.rows());
  if (m == 0) return Eigen::VectorXd();
  // Every lottery is maximal when all margins vanish.
  if (margins.cwiseAbs().maxCoeff() == 0.0) {
    return Eigen::VectorXd::Constant(m, 1.0 / m);
  }
  return SolveZeroSum(margins).row_strategy;
}

Lottery MaximalLottery(const PreferenceProfile& profile) {
  if (profile.num_alternatives() < 1) {
    Fail(ErrorKind::kStructural, "maximal lottery needs an alternative");
  }
  const Eigen::VectorXd p =
      MaximalLotteryOfMargins(ToPayoffs(ComputeMarginMatrix(profile)));
  Lottery lottery;
  lottery.alternatives = profile.alternatives();
  lottery.probabilities.assign(p.data(), p.data() + p.size());
  return lottery;
}

RankingResult MaximalLotteryRank(const PreferenceProfile& profile,
                                 const TieBreakPolicy& policy) {
  const Lottery lottery = MaximalLottery(profile);
  return RankByScore("maximal_lottery", profile.alternatives(),
                     lottery.probabilities, policy);
}

IterativeLotteryResult IterativeMaximalLotteries(
    const PreferenceProfile& profile, const TieBreakPolicy& policy) {
  const int m = profile.num_alternatives();
  if (m < 1) Fail(ErrorKind::kStructural, "IML needs an alternative");
  const Eigen::MatrixXd margins = ToPayoffs(ComputeMarginMatrix(profile));

  IterativeLotteryResult result;
  std::vector<int> remaining(m);
  for (int a = 0; a < m; ++a) remaining[a] = a;
  while (!remaining.empty()) {
    // Deleting winners from every ballot leaves the strict counts between
    // survivors untouched, so the subgame is a submatrix of the margins.
    const int size = static_cast<int>(remaining.size());
    Eigen::MatrixXd sub(size, size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j)
        sub(i, j) = margins(remaining[i], remaining[j]);
    }
    Eigen::VectorXd x = MaximalLotteryOfMargins(sub);
    for (int i = 0; i < size; ++i) {
      if (x(i) <= kSupportEpsilon) x(i) = 0.0;
    }
    x /= x.sum();

    LotteryLevel level;
    std::vector<int> survivors;
    for (int i = 0; i < size; ++i) {
      if (x(i) > 0.0) {
        level.winners.push_back(remaining[i]);
        level.lottery.push_back(x(i));
      } else {
        survivors.push_back(remaining[i]);
      }
    }
    result.levels.push_back(std::move(level));
    remaining = std::move(survivors);
  }

  const int num_levels = static_cast<int>(result.levels.size());
  result.scores.assign(m, 0.0);
  for (int t = 0; t < num_levels; ++t) {
    const auto& level = result.levels[t];
    for (size_t i = 0; i < level.winners.size(); ++i) {
      result.scores[level.winners[i]] = (num_levels - 1 - t) + level.lottery[i];
    }
  }
  result.ranking =
      RankByScore("iml", profile.alternatives(), result.scores, policy);
  return result;
}

}  // namespace vase
