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

#include "vase/linear_program.h"

#include <cmath>
#include <vector>

#include "vase/error.h"

namespace vase {
namespace {

// Dense simplex tableau. Row i reads sum_j table(i, j) x_j = table(i, rhs);
// `reduced` holds c_j - c_B^T B^-1 a_j and -objective in its rhs slot.
class Tableau {
 public:
  Tableau(Eigen::MatrixXd table, std::vector<int> basis, double tolerance)
      : table_(std::move(table)),
        basis_(std::move(basis)),
        tolerance_(tolerance),
        rhs_(static_cast<int>(table_.cols()) - 1),
        allowed_(rhs_, true) {}

  Eigen::MatrixXd& table() { return table_; }
  std::vector<int>& basis() { return basis_; }
  Eigen::VectorXd& reduced() { return reduced_; }
  int rhs() const { return rhs_; }
  void Forbid(int column) { allowed_[column] = false; }

  // Sets the objective and prices out the current basis.
  void SetObjective(const Eigen::VectorXd& costs) {
    reduced_ = Eigen::VectorXd::Zero(rhs_ + 1);
    reduced_.head(rhs_) = costs;
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
      const double cb = costs(basis_[i]);
      if (cb != 0.0) reduced_ -= cb * table_.row(i).transpose();
    }
  }

  void Pivot(int row, int column) {
    table_.row(row) /= table_(row, column);
    for (int i = 0; i < table_.rows(); ++i) {
      if (i == row) continue;
      const double factor = table_(i, column);
      if (factor != 0.0) table_.row(i) -= factor * table_.row(row);
    }
    const double factor = reduced_(column);
    if (factor != 0.0) reduced_ -= factor * table_.row(row).transpose();
    basis_[row] = column;
  }

  // Runs Bland's rule to optimality. Returns false if unbounded.
  bool Optimize(int* iterations) {
    while (true) {
      if (++*iterations > kSimplexIterationCap) {
        Fail(ErrorKind::kSolver, "simplex iteration cap reached");
      }
      int entering = -1;
      for (int j = 0; j < rhs_; ++j) {
        if (allowed_[j] && reduced_(j) > tolerance_) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < table_.rows(); ++i) {
        const double a = table_(i, entering);
        if (a <= tolerance_) continue;
        const double ratio = table_(i, rhs_) / a;
        if (leaving < 0 || ratio < best_ratio - tolerance_ ||
            (ratio <= best_ratio + tolerance_ && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
    }
  }

  void DropRow(int row) {
    const int rows = static_cast<int>(table_.rows());
    if (row < rows - 1) {
      table_.block(row, 0, rows - 1 - row, table_.cols()) =
          table_.block(row + 1, 0, rows - 1 - row, table_.cols());
    }
    table_.conservativeResize(rows - 1, Eigen::NoChange);
    basis_.erase(basis_.begin() + row);
  }

 private:
  Eigen::MatrixXd table_;
  std::vector<int> basis_;
  double tolerance_;
  int rhs_;
  std::vector<bool> allowed_;
  Eigen::VectorXd reduced_;
};

}  // namespace

LpSolution SolveLinearProgram(const LinearProgram& lp, double tolerance) {
  const int n = static_cast<int>(lp.objective.size());
  const int num_upper = static_cast<int>(lp.upper_lhs.rows());
  const int num_eq = static_cast<int>(lp.equality_lhs.rows());
  if ((num_upper > 0 && lp.upper_lhs.cols() != n) ||
      (num_eq > 0 && lp.equality_lhs.cols() != n) ||
      lp.upper_rhs.size() != num_upper || lp.equality_rhs.size() != num_eq) {
    Fail(ErrorKind::kUsage, "linear program dimensions disagree");
  }
  const int rows = num_upper + num_eq;

  // Columns: x, one slack per <= row, one artificial per row that needs it.
  std::vector<bool> needs_artificial(rows, false);
  int num_artificial = 0;
  for (int i = 0; i < rows; ++i) {
    const double rhs =
        i < num_upper ? lp.upper_rhs(i) : lp.equality_rhs(i - num_upper);
    needs_artificial[i] = i >= num_upper || rhs < 0.0;
    if (needs_artificial[i]) ++num_artificial;
  }
  const int slack0 = n;
  const int art0 = n + num_upper;
  const int cols = art0 + num_artificial;
  Eigen::MatrixXd table = Eigen::MatrixXd::Zero(rows, cols + 1);
  std::vector<int> basis(rows);
  int next_artificial = art0;
  for (int i = 0; i < rows; ++i) {
    double rhs;
    if (i < num_upper) {
      table.row(i).head(n) = lp.upper_lhs.row(i);
      table(i, slack0 + i) = 1.0;
      rhs = lp.upper_rhs(i);
    } else {
      table.row(i).head(n) = lp.equality_lhs.row(i - num_upper);
      rhs = lp.equality_rhs(i - num_upper);
    }
    table(i, cols) = rhs;
    if (rhs < 0.0) table.row(i) *= -1.0;
    if (needs_artificial[i]) {
      table(i, next_artificial) = 1.0;
      basis[i] = next_artificial++;
    } else {
      basis[i] = slack0 + i;
    }
  }

  Tableau tableau(std::move(table), std::move(basis), tolerance);
  int iterations = 0;
  LpSolution solution;

  if (num_artificial > 0) {
    Eigen::VectorXd phase_one = Eigen::VectorXd::Zero(cols);
    phase_one.tail(num_artificial).setConstant(-1.0);
    tableau.SetObjective(phase_one);
    tableau.Optimize(&iterations);
    if (tableau.reduced()(tableau.rhs()) > 1e3 * tolerance) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Pivot remaining (zero-level) artificials out; rows where that is
    // impossible are redundant.
    for (int i = static_cast<int>(tableau.basis().size()) - 1; i >= 0; --i) {
      if (tableau.basis()[i] < art0) continue;
      int column = -1;
      for (int j = 0; j < art0; ++j) {
        if (std::abs(tableau.table()(i, j)) > 1e3 * tolerance) {
          column = j;
          break;
        }
      }
      if (column >= 0) {
        tableau.Pivot(i, column);
      } else {
        tableau.DropRow(i);
      }
    }
    for (int j = art0; j < cols; ++j) tableau.Forbid(j);
  }

  Eigen::VectorXd costs = Eigen::VectorXd::Zero(cols);
  costs.head(n) = lp.objective;
  tableau.SetObjective(costs);
  if (!tableau.Optimize(&iterations)) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.x = Eigen::VectorXd::Zero(n);
  for (size_t i = 0; i < tableau.basis().size(); ++i) {
    const int var = tableau.basis()[i];
    if (var < n) solution.x(var) = tableau.table()(i, tableau.rhs());
  }
  solution.objective = lp.objective.dot(solution.x);
  solution.upper_duals = Eigen::VectorXd::Zero(num_upper);
  for (int i = 0; i < num_upper; ++i) {
    solution.upper_duals(i) = -tableau.reduced()(slack0 + i);
  }
  return solution;
}

}  // namespace vase
