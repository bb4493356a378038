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

#include "vase/baselines.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "Eigen/Dense"
#include "vase/error.h"
#include "vase/linear_program.h"

namespace vase {

double EloPredict(double rating, double opponent) {
  return 1.0 / (1.0 + std::pow(10.0, (opponent - rating) / 400.0));
}

WinRecord::WinRecord(std::vector<std::string> agents)
    : agents_(std::move(agents)),
      wins_(agents_.size(), std::vector<double>(agents_.size(), 0.0)),
      games_(agents_.size(), std::vector<double>(agents_.size(), 0.0)) {}

int WinRecord::Index(const std::string& agent) const {
  auto it = std::find(agents_.begin(), agents_.end(), agent);
  if (it == agents_.end()) {
    Fail(ErrorKind::kStructural, "unknown agent '" + agent + "'");
  }
  return static_cast<int>(it - agents_.begin());
}

void WinRecord::Add(int i, int j, double wins, double total) {
  if (i == j || i < 0 || j < 0 || i >= num_agents() || j >= num_agents()) {
    Fail(ErrorKind::kStructural, "bad agent pair in win record");
  }
  if (!(total > 0.0) || !(wins >= 0.0) || wins > total) {
    Fail(ErrorKind::kData, "win record needs 0 <= wins <= total, total > 0");
  }
  wins_[i][j] += wins;
  wins_[j][i] += total - wins;
  games_[i][j] += total;
  games_[j][i] += total;
}

void WinRecord::Add(const std::string& i, const std::string& j, double wins,
                    double total) {
  Add(Index(i), Index(j), wins, total);
}

double WinRecord::Wins(int i, int j) const { return wins_.at(i).at(j); }
double WinRecord::Games(int i, int j) const { return games_.at(i).at(j); }

bool WinRecord::empty() const {
  for (const auto& row : games_) {
    for (double g : row) {
      if (g > 0.0) return false;
    }
  }
  return true;
}

WinRecord WinRecordFromProfile(const PreferenceProfile& profile) {
  WinRecord record(profile.alternatives());
  for (const auto& ballot : profile.ballots()) {
    const double w = static_cast<double>(ballot.weight);
    for (size_t g = 0; g < ballot.groups.size(); ++g) {
      const auto& group = ballot.groups[g];
      for (size_t i = 0; i < group.size(); ++i) {
        for (size_t j = i + 1; j < group.size(); ++j) {
          record.Add(group[i], group[j], 0.5 * w, w);
        }
      }
      for (size_t h = g + 1; h < ballot.groups.size(); ++h) {
        for (int x : group) {
          for (int y : ballot.groups[h]) record.Add(x, y, w, w);
        }
      }
    }
  }
  return record;
}

double EloRatings::RatingOf(const std::string& agent) const {
  for (size_t i = 0; i < agents.size(); ++i) {
    if (agents[i] == agent) return ratings[i];
  }
  Fail(ErrorKind::kStructural, "unknown agent '" + agent + "'");
}

EloRatings FitElo(const WinRecord& record, const EloFitOptions& options) {
  if (record.empty()) Fail(ErrorKind::kData, "Elo needs at least one game");
  if (!(options.k_factor > 0.0)) Fail(ErrorKind::kUsage, "Elo needs K > 0");
  const int n = record.num_agents();

  // Full-batch steps overshoot once K times the curvature of the log-loss
  // passes 2; the curvature is at most (ln 10 / 400) * games / 4 per agent,
  // doubled for the off-diagonal part.
  double max_games = 0.0;
  for (int i = 0; i < n; ++i) {
    double games = 0.0;
    for (int j = 0; j < n; ++j) games += record.Games(i, j);
    max_games = std::max(max_games, games);
  }
  const double curvature = std::log(10.0) / 400.0 * 0.5 * max_games;
  const double k = std::min(options.k_factor, 1.5 / curvature);

  EloRatings result;
  result.agents = record.agents();
  result.k_factor = k;
  std::vector<double> r(n, 0.0);
  std::vector<double> step(n);
  for (int iter = 1; iter <= options.max_iters; ++iter) {
    double largest = 0.0;
    for (int x = 0; x < n; ++x) {
      double delta = 0.0;
      for (int y = 0; y < n; ++y) {
        const double games = record.Games(x, y);
        if (games == 0.0) continue;
        delta += record.Wins(x, y) - games * EloPredict(r[x], r[y]);
      }
      step[x] = k * delta;
      largest = std::max(largest, std::abs(step[x]));
    }
    for (int x = 0; x < n; ++x) r[x] += step[x];
    result.iterations = iter;
    if (options.observer) options.observer(iter, r);
    if (largest < options.grad_tol) {
      result.converged = true;
      break;
    }
  }
  const auto lowest = std::min_element(r.begin(), r.end());
  result.anchor = static_cast<int>(lowest - r.begin());
  const double offset = *lowest;
  for (double& rating : r) rating -= offset;
  r[result.anchor] = 0.0;
  result.ratings = std::move(r);
  return result;
}

RankingResult EloRank(const EloRatings& ratings, const TieBreakPolicy& policy) {
  return RankByScore("elo", ratings.agents, ratings.ratings, policy);
}

ScoreTable NormalizeScores(const ScoreTable& table) {
  ScoreTable out = table;
  for (int t = 0; t < table.num_tasks(); ++t) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < table.num_agents(); ++a) {
      const auto& cell = table.scores[a][t];
      if (!cell) continue;
      if (!std::isfinite(*cell)) {
        Fail(ErrorKind::kData, "non-finite score for agent '" +
                                   table.agents[a] + "' on task '" +
                                   table.tasks[t] + "'");
      }
      lo = std::min(lo, *cell);
      hi = std::max(hi, *cell);
    }
    for (int a = 0; a < table.num_agents(); ++a) {
      auto& cell = out.scores[a][t];
      if (!cell) continue;
      cell = hi > lo ? (*cell - lo) / (hi - lo) : 0.5;
    }
  }
  return out;
}

namespace {

constexpr double kFaceSlack = 1e-10;
constexpr double kFaceDetect = 1e-8;

// max objective^T x over {x in simplex : lhs x >= rhs - slack}.
LpSolution MaximiseOnFace(const Eigen::VectorXd& objective,
                          const Eigen::MatrixXd& lhs,
                          const Eigen::VectorXd& rhs) {
  const int n = static_cast<int>(lhs.cols());
  LinearProgram lp;
  lp.objective = objective;
  lp.upper_lhs = -lhs;
  lp.upper_rhs = -(rhs.array() - kFaceSlack).matrix();
  lp.equality_lhs = Eigen::MatrixXd::Ones(1, n);
  lp.equality_rhs = Eigen::VectorXd::Ones(1);
  return SolveLinearProgram(lp);
}

}  // namespace

Eigen::VectorXd MaxEntropyOnFace(const Eigen::MatrixXd& lhs,
                                 const Eigen::VectorXd& rhs, bool* converged) {
  const int n = static_cast<int>(lhs.cols());
  const int k = static_cast<int>(lhs.rows());
  *converged = true;

  // Find which coordinates can be positive and which inequalities can be
  // slack; averaging the witnesses gives a relative-interior start point.
  std::vector<Eigen::VectorXd> witnesses;
  std::vector<bool> can_be_positive(n, false);
  for (int i = 0; i < n; ++i) {
    const LpSolution s = MaximiseOnFace(Eigen::VectorXd::Unit(n, i), lhs, rhs);
    if (s.status != LpStatus::kOptimal) {
      Fail(ErrorKind::kSolver, "optimal face is empty");
    }
    if (s.objective > kFaceDetect) {
      can_be_positive[i] = true;
      witnesses.push_back(s.x);
    }
  }
  std::vector<int> equalities;
  std::vector<int> inequalities;
  for (int j = 0; j < k; ++j) {
    const LpSolution s = MaximiseOnFace(lhs.row(j).transpose(), lhs, rhs);
    if (s.objective - rhs(j) > kFaceDetect) {
      inequalities.push_back(j);
      witnesses.push_back(s.x);
    } else {
      equalities.push_back(j);
    }
  }
  Eigen::VectorXd start = Eigen::VectorXd::Zero(n);
  for (const auto& w : witnesses) start += w;
  start /= static_cast<double>(witnesses.size());

  std::vector<int> support;
  for (int i = 0; i < n; ++i) {
    if (can_be_positive[i]) support.push_back(i);
  }
  const int s = static_cast<int>(support.size());
  auto embed = [&](const Eigen::VectorXd& reduced) {
    Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < s; ++i) full(support[i]) = reduced(i);
    return full;
  };
  Eigen::VectorXd x(s);
  for (int i = 0; i < s; ++i) x(i) = start(support[i]);

  // Directions that keep the simplex sum and the tight rows fixed.
  Eigen::MatrixXd equality_rows(1 + equalities.size(), s);
  equality_rows.row(0).setOnes();
  for (size_t r = 0; r < equalities.size(); ++r) {
    for (int i = 0; i < s; ++i) {
      equality_rows(r + 1, i) = lhs(equalities[r], support[i]);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(equality_rows, Eigen::ComputeFullV);
  const double cutoff = 1e-10 * std::max(1.0, svd.singularValues()(0));
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > cutoff) ++rank;
  }
  const Eigen::MatrixXd basis = svd.matrixV().rightCols(s - rank);
  if (basis.cols() == 0) return embed(x);

  Eigen::MatrixXd inequality_rows(inequalities.size(), s);
  Eigen::VectorXd inequality_rhs(inequalities.size());
  for (size_t r = 0; r < inequalities.size(); ++r) {
    for (int i = 0; i < s; ++i) {
      inequality_rows(r, i) = lhs(inequalities[r], support[i]);
    }
    inequality_rhs(r) = rhs(inequalities[r]) - kFaceSlack;
  }

  // Barrier method: minimise sum x log x - mu * sum log(slack), mu -> 0.
  auto objective = [&](const Eigen::VectorXd& v, double mu) {
    double f = (v.array() * v.array().log()).sum();
    if (inequality_rows.rows() > 0) {
      f -= mu * (inequality_rows * v - inequality_rhs).array().log().sum();
    }
    return f;
  };
  auto feasible = [&](const Eigen::VectorXd& v) {
    if (v.minCoeff() <= 0.0) return false;
    if (inequality_rows.rows() == 0) return true;
    return (inequality_rows * v - inequality_rhs).minCoeff() > 0.0;
  };
  if (!feasible(x)) {
    *converged = false;
    return embed(x);
  }
  const bool has_barrier = inequality_rows.rows() > 0;
  for (double mu = has_barrier ? 1e-2 : 0.0;; mu *= 0.1) {
    bool stage_done = false;
    for (int iter = 0; iter < 200; ++iter) {
      Eigen::VectorXd gradient = (x.array().log() + 1.0).matrix();
      Eigen::MatrixXd hessian = x.cwiseInverse().asDiagonal();
      if (has_barrier) {
        const Eigen::VectorXd slack = inequality_rows * x - inequality_rhs;
        const Eigen::VectorXd inv = slack.cwiseInverse();
        gradient -= mu * inequality_rows.transpose() * inv;
        hessian += mu * inequality_rows.transpose() *
                   inv.cwiseAbs2().asDiagonal() * inequality_rows;
      }
      const Eigen::VectorXd g = basis.transpose() * gradient;
      const Eigen::MatrixXd h = basis.transpose() * hessian * basis;
      const Eigen::VectorXd dz = -h.ldlt().solve(g);
      const double decrement = -g.dot(dz);
      // Below this the decrement is rounding noise.
      if (decrement < 1e-18) {
        stage_done = true;
        break;
      }
      const Eigen::VectorXd dx = basis * dz;
      double t = 1.0;
      while (!feasible(x + t * dx) && t > 1e-20) t *= 0.5;
      // Once the decrement is below rounding in f, Armijo cannot tell steps
      // apart; the local Newton step is then taken as is.
      const double f0 = objective(x, mu);
      while (decrement > 1e-12 &&
             objective(x + t * dx, mu) > f0 - 0.25 * t * decrement &&
             t > 1e-20) {
        t *= 0.5;
      }
      if (t <= 1e-20) {
        stage_done = decrement < 1e-16;
        break;
      }
      x += t * dx;
    }
    if (!stage_done) *converged = false;
    if (!has_barrier || mu < 1e-13) break;
  }
  x = x.cwiseMax(0.0);
  x /= x.sum();
  return embed(x);
}

NashAverageResult NashAverage(const ScoreTable& table,
                              const TieBreakPolicy& policy) {
  if (!table.IsComplete()) {
    Fail(ErrorKind::kData, "Nash averaging needs a complete score table");
  }
  const int m = table.num_agents();
  const int n = table.num_tasks();
  if (m < 1 || n < 1) Fail(ErrorKind::kData, "empty score table");
  Eigen::MatrixXd s(m, n);
  for (int a = 0; a < m; ++a) {
    for (int t = 0; t < n; ++t) s(a, t) = *table.scores[a][t];
  }
  if (!s.allFinite())
    Fail(ErrorKind::kData, "score table has a non-finite entry");

  const GameSolution game = SolveZeroSum(s);
  const double v = game.value;

  // Agent face: S^T x >= v. Task face: -S y >= -v.
  bool agents_converged = true;
  bool tasks_converged = true;
  Eigen::VectorXd x = MaxEntropyOnFace(
      s.transpose(), Eigen::VectorXd::Constant(n, v), &agents_converged);
  Eigen::VectorXd y =
      MaxEntropyOnFace(-s, Eigen::VectorXd::Constant(m, -v), &tasks_converged);
  NashAverageResult result;
  result.max_entropy_converged = agents_converged && tasks_converged;
  if (!agents_converged) x = game.row_strategy;
  if (!tasks_converged) y = game.column_strategy;
  x = x.cwiseMax(0.0) / x.cwiseMax(0.0).sum();
  y = y.cwiseMax(0.0) / y.cwiseMax(0.0).sum();

  result.agent_distribution.alternatives = table.agents;
  result.agent_distribution.probabilities.assign(x.data(), x.data() + m);
  result.task_distribution.alternatives = table.tasks;
  result.task_distribution.probabilities.assign(y.data(), y.data() + n);
  const Eigen::VectorXd values = s * y;
  result.agent_values.assign(values.data(), values.data() + m);
  result.game_value = v;
  result.ranking =
      RankByScore("nash_average", table.agents, result.agent_values, policy);
  return result;
}

}  // namespace vase
