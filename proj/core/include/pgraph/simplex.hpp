#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <string>
#include <vector>

#include "pgraph/types.hpp"

namespace pgraph {

/// min cost^T x  subject to  constraints * x = rhs,  x >= 0.
struct LinearProgram {
  Eigen::SparseMatrix<double> constraints;  // m x n, column-major
  Eigen::VectorXd rhs;
  Eigen::VectorXd cost;
};

struct SimplexOptions {
  /// Optimality threshold on reduced costs.
  double tol = 1e-9;
  double feasibility_tol = 1e-9;
  double pivot_tol = 1e-9;
  /// 0 selects 20 * (m + n) + 1000.
  long max_iterations = 0;
  /// Pivots between dense LU refactorisations of the basis; 0 selects
  /// max(64, 2m).
  int refactor_period = 0;
  /// Steps at or below this length count as degenerate.
  double degenerate_step = 1e-9;
  /// Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_limit = 50;
};

struct SimplexResult {
  Eigen::VectorXd x;
  double objective = 0.0;
  /// Row multipliers y with reduced costs c - A^T y.
  Eigen::VectorXd duals;
  Eigen::VectorXd reduced_costs;
  std::vector<Eigen::Index> basis;
  long iterations = 0;
  long bland_pivots = 0;
};

enum class LpStatus { kIterationLimit, kInfeasible, kUnbounded, kNumericalBreakdown };

std::string_view to_string(LpStatus status);

class LpError : public SolverError {
 public:
  LpError(LpStatus status, const std::string& what, Eigen::VectorXd best_point = {})
      : SolverError(what), status_(status), best_point_(std::move(best_point)) {}

  LpStatus status() const { return status_; }
  /// Last primal feasible iterate, empty when none was reached.
  const Eigen::VectorXd& best_point() const { return best_point_; }

 private:
  LpStatus status_;
  Eigen::VectorXd best_point_;
};

/// Two-phase revised simplex. Rows with a positive singleton column seed the
/// starting basis; the remaining rows get artificial variables. Dantzig
/// pricing, with Bland's rule after a run of degenerate pivots.
SimplexResult solve_simplex(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace pgraph
