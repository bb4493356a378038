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

#ifndef VASE_LINEAR_PROGRAM_H_
#define VASE_LINEAR_PROGRAM_H_

// Dense two-phase simplex with Bland's rule.
//
//   maximize    c^T x
//   subject to  A_ub x <= b_ub
//               A_eq x == b_eq
//               x >= 0

#include "Eigen/Core"

namespace vase {

inline constexpr int kSimplexIterationCap = 1000000;

struct LinearProgram {
  Eigen::VectorXd objective;
  Eigen::MatrixXd upper_lhs;
  Eigen::VectorXd upper_rhs;
  Eigen::MatrixXd equality_lhs;
  Eigen::VectorXd equality_rhs;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Eigen::VectorXd x;
  double objective = 0.0;
  // Multipliers of the <= rows (non-negative at an optimum).
  Eigen::VectorXd upper_duals;
};

// Throws VaseError(kSolver) if the iteration cap is hit.
LpSolution SolveLinearProgram(const LinearProgram& lp,
                              double tolerance = 1e-10);

}  // namespace vase

#endif  // VASE_LINEAR_PROGRAM_H_
