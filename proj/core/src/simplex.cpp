#include "pgraph/simplex.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pgraph {

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kIterationLimit:
      return "iteration limit";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kNumericalBreakdown:
      return "numerical breakdown";
  }
  return "unknown";
}

namespace {

using Index = Eigen::Index;
using SparseMatrix = Eigen::SparseMatrix<double>;

class RevisedSimplex {
 public:
  RevisedSimplex(const LinearProgram& lp, const SimplexOptions& options)
      : options_(options),
        m_(lp.constraints.rows()),
        n_(lp.constraints.cols()),
        a_(lp.constraints),
        b_(lp.rhs),
        c_(lp.cost),
        row_sign_(Eigen::VectorXd::Ones(lp.constraints.rows())) {
    if (b_.size() != m_ || c_.size() != n_) {
      throw std::invalid_argument("linear program has inconsistent shapes");
    }
    if (!b_.allFinite() || !c_.allFinite()) {
      throw std::invalid_argument("linear program has non-finite data");
    }
    a_.makeCompressed();
    for (Index r = 0; r < m_; ++r) {
      if (b_(r) < 0.0) row_sign_(r) = -1.0;
    }
    a_ = row_sign_.asDiagonal() * a_;
    b_ = row_sign_.cwiseProduct(b_);
    max_iterations_ = options_.max_iterations > 0
                          ? options_.max_iterations
                          : 20 * static_cast<long>(m_ + n_) + 1000;
    refactor_period_ = options_.refactor_period > 0
                           ? options_.refactor_period
                           : std::max<long>(64, 2 * static_cast<long>(m_));
  }

  SimplexResult solve() {
    crash_basis();
    if (!artificial_rows_.empty()) {
      Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(total_columns());
      phase1.tail(static_cast<Index>(artificial_rows_.size())).setOnes();
      iterate(phase1, /*phase_one=*/true);
      double infeasibility = 0.0;
      for (Index r = 0; r < m_; ++r) {
        if (is_artificial(basis_[r])) infeasibility += xb_(r);
      }
      const double scale = std::max(1.0, b_.lpNorm<Eigen::Infinity>());
      if (infeasibility > options_.feasibility_tol * scale * static_cast<double>(m_)) {
        throw LpError(LpStatus::kInfeasible, "linear program is infeasible");
      }
      drive_out_artificials();
    }
    Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(total_columns());
    phase2.head(n_) = c_;
    iterate(phase2, /*phase_one=*/false);
    return package(phase2);
  }

 private:
  Index total_columns() const {
    return n_ + static_cast<Index>(artificial_rows_.size());
  }
  bool is_artificial(Index j) const { return j >= n_; }

  double column_dot(const Eigen::VectorXd& y, Index j) const {
    if (is_artificial(j)) return y(artificial_rows_[static_cast<std::size_t>(j - n_)]);
    double s = 0.0;
    for (SparseMatrix::InnerIterator it(a_, j); it; ++it) s += y(it.row()) * it.value();
    return s;
  }

  Eigen::VectorXd ftran(Index j) const {
    if (is_artificial(j)) return binv_.col(artificial_rows_[static_cast<std::size_t>(j - n_)]);
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m_);
    for (SparseMatrix::InnerIterator it(a_, j); it; ++it) {
      alpha.noalias() += it.value() * binv_.col(it.row());
    }
    return alpha;
  }

  void crash_basis() {
    basis_.assign(static_cast<std::size_t>(m_), -1);
    position_.assign(static_cast<std::size_t>(n_), -1);
    Eigen::VectorXd diag = Eigen::VectorXd::Ones(m_);
    for (Index j = 0; j < n_; ++j) {
      if (a_.col(j).nonZeros() != 1) continue;
      SparseMatrix::InnerIterator it(a_, j);
      const Index r = it.row();
      if (basis_[static_cast<std::size_t>(r)] >= 0 || !(it.value() > 0.0)) continue;
      basis_[static_cast<std::size_t>(r)] = j;
      position_[static_cast<std::size_t>(j)] = r;
      diag(r) = it.value();
    }
    for (Index r = 0; r < m_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] >= 0) continue;
      basis_[static_cast<std::size_t>(r)] = n_ + static_cast<Index>(artificial_rows_.size());
      artificial_rows_.push_back(r);
      position_.push_back(r);
    }
    binv_ = diag.cwiseInverse().asDiagonal();
    xb_ = binv_ * b_;
    since_refactor_ = 0;
  }

  void refactor() {
    Eigen::MatrixXd basis_matrix = Eigen::MatrixXd::Zero(m_, m_);
    for (Index r = 0; r < m_; ++r) {
      const Index j = basis_[static_cast<std::size_t>(r)];
      if (is_artificial(j)) {
        basis_matrix(artificial_rows_[static_cast<std::size_t>(j - n_)], r) = 1.0;
      } else {
        for (SparseMatrix::InnerIterator it(a_, j); it; ++it) {
          basis_matrix(it.row(), r) = it.value();
        }
      }
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    if (m_ > 0 && pivots.minCoeff() <= 1e-12 * std::max(1.0, pivots.maxCoeff())) {
      throw LpError(LpStatus::kNumericalBreakdown, "basis matrix became singular",
                    feasible_point());
    }
    binv_ = lu.inverse();
    xb_ = binv_ * b_;
    for (Index r = 0; r < m_; ++r) {
      if (xb_(r) < 0.0 && xb_(r) > -options_.feasibility_tol) xb_(r) = 0.0;
    }
    since_refactor_ = 0;
  }

  Eigen::VectorXd basic_costs(const Eigen::VectorXd& cost) const {
    Eigen::VectorXd cb(m_);
    for (Index r = 0; r < m_; ++r) cb(r) = cost(basis_[static_cast<std::size_t>(r)]);
    return cb;
  }

  Eigen::VectorXd feasible_point() const {
    if (!phase_two_) return {};
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
    for (Index r = 0; r < m_; ++r) {
      const Index j = basis_[static_cast<std::size_t>(r)];
      if (!is_artificial(j)) x(j) = std::max(0.0, xb_(r));
    }
    return x;
  }

  // Harris two-pass ratio test. Returns -1 when the direction is unbounded.
  Index choose_leaving(const Eigen::VectorXd& alpha, bool bland) const {
    const double piv = options_.pivot_tol;
    const double feas = options_.feasibility_tol;
    auto bound = [&](Index r, double slack) -> double {
      const double a = alpha(r);
      const double x = std::max(0.0, xb_(r));
      if (a > piv) return (x + slack) / a;
      // Artificials left in the basis are pinned at zero.
      if (phase_two_ && a < -piv && is_artificial(basis_[static_cast<std::size_t>(r)])) {
        return slack / -a;
      }
      return std::numeric_limits<double>::infinity();
    };
    constexpr double kInf = std::numeric_limits<double>::infinity();
    if (bland) {
      double best = kInf;
      for (Index r = 0; r < m_; ++r) best = std::min(best, bound(r, 0.0));
      if (best == kInf) return -1;
      Index leave = -1;
      const double cutoff = best + 1e-12 * (1.0 + best);
      for (Index r = 0; r < m_; ++r) {
        if (bound(r, 0.0) <= cutoff &&
            (leave < 0 || basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = r;
        }
      }
      return leave;
    }
    double theta_max = kInf;
    for (Index r = 0; r < m_; ++r) theta_max = std::min(theta_max, bound(r, feas));
    if (theta_max == kInf) return -1;
    Index leave = -1;
    for (Index r = 0; r < m_; ++r) {
      if (bound(r, 0.0) <= theta_max &&
          (leave < 0 || std::abs(alpha(r)) > std::abs(alpha(leave)))) {
        leave = r;
      }
    }
    return leave;
  }

  void pivot(Index leave, Index enter, const Eigen::VectorXd& alpha, double theta) {
    xb_.noalias() -= theta * alpha;
    xb_(leave) = theta;
    for (Index r = 0; r < m_; ++r) {
      if (xb_(r) < 0.0 && xb_(r) > -options_.feasibility_tol) xb_(r) = 0.0;
    }
    const double a_r = alpha(leave);
    binv_.row(leave) /= a_r;
    const Eigen::RowVectorXd pivot_row = binv_.row(leave);
    // alpha is usually sparse; touch only the rows it hits.
    for (Index r = 0; r < m_; ++r) {
      if (r != leave && alpha(r) != 0.0) binv_.row(r).noalias() -= alpha(r) * pivot_row;
    }
    const Index old = basis_[static_cast<std::size_t>(leave)];
    position_[static_cast<std::size_t>(old)] = -1;
    basis_[static_cast<std::size_t>(leave)] = enter;
    position_[static_cast<std::size_t>(enter)] = leave;
    ++since_refactor_;
    ++iterations_;
  }

  void iterate(const Eigen::VectorXd& cost, bool phase_one) {
    phase_two_ = !phase_one;
    int degenerate_run = 0;
    bool bland = false;
    bool fresh = false;
    Eigen::VectorXd y;
    const Index columns = total_columns();
    for (;;) {
      if (iterations_ >= max_iterations_) {
        throw LpError(LpStatus::kIterationLimit, "simplex iteration limit exceeded",
                      feasible_point());
      }
      if (since_refactor_ >= refactor_period_) refactor();
      if (since_refactor_ == 0 || y.size() != m_) y = binv_.transpose() * basic_costs(cost);

      Index enter = -1;
      double best = -options_.tol;
      double enter_cost = 0.0;
      for (Index j = 0; j < columns; ++j) {
        if (position_[static_cast<std::size_t>(j)] >= 0 || is_artificial(j)) continue;
        const double d = cost(j) - column_dot(y, j);
        if (d < best) {
          enter = j;
          enter_cost = d;
          if (bland) break;
          best = d;
        }
      }
      if (enter < 0) {
        // Confirm optimality against a freshly factored basis.
        if (fresh || since_refactor_ == 0) return;
        refactor();
        fresh = true;
        continue;
      }
      fresh = false;

      const Eigen::VectorXd alpha = ftran(enter);
      const Index leave = choose_leaving(alpha, bland);
      if (leave < 0) {
        throw LpError(LpStatus::kUnbounded, "linear program is unbounded",
                      feasible_point());
      }
      double theta = std::max(0.0, xb_(leave)) / alpha(leave);
      if (is_artificial(basis_[static_cast<std::size_t>(leave)]) && alpha(leave) < 0.0) {
        theta = 0.0;
      }
      theta = std::max(0.0, theta);
      if (bland) ++bland_pivots_;
      pivot(leave, enter, alpha, theta);
      y.noalias() += enter_cost * binv_.row(leave).transpose();

      if (theta <= options_.degenerate_step) {
        if (++degenerate_run > options_.degenerate_limit) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }
    }
  }

  void drive_out_artificials() {
    for (Index r = 0; r < m_; ++r) {
      if (!is_artificial(basis_[static_cast<std::size_t>(r)])) continue;
      const Eigen::VectorXd row = binv_.row(r).transpose();
      Index enter = -1;
      double best = 1e-7;
      for (Index j = 0; j < n_; ++j) {
        if (position_[static_cast<std::size_t>(j)] >= 0) continue;
        const double v = std::abs(column_dot(row, j));
        if (v > best) {
          best = v;
          enter = j;
        }
      }
      if (enter < 0) continue;  // redundant row; artificial stays at zero
      const Eigen::VectorXd alpha = ftran(enter);
      pivot(r, enter, alpha, 0.0);
    }
  }

  SimplexResult package(const Eigen::VectorXd& cost) {
    if (since_refactor_ > 0) refactor();
    SimplexResult result;
    result.x = Eigen::VectorXd::Zero(n_);
    for (Index r = 0; r < m_; ++r) {
      const Index j = basis_[static_cast<std::size_t>(r)];
      if (!is_artificial(j)) result.x(j) = std::max(0.0, xb_(r));
    }
    const Eigen::VectorXd y = binv_.transpose() * basic_costs(cost);
    result.reduced_costs.resize(n_);
    for (Index j = 0; j < n_; ++j) result.reduced_costs(j) = c_(j) - column_dot(y, j);
    result.duals = row_sign_.cwiseProduct(y);
    result.objective = c_.dot(result.x);
    result.basis = basis_;
    result.iterations = iterations_;
    result.bland_pivots = bland_pivots_;
    return result;
  }

  SimplexOptions options_;
  Index m_;
  Index n_;
  SparseMatrix a_;
  Eigen::VectorXd b_;
  Eigen::VectorXd c_;
  Eigen::VectorXd row_sign_;
  long max_iterations_ = 0;
  long refactor_period_ = 64;

  std::vector<Index> artificial_rows_;
  std::vector<Index> basis_;     // basic column per row
  std::vector<Index> position_;  // row per column, -1 when nonbasic
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> binv_;
  Eigen::VectorXd xb_;
  int since_refactor_ = 0;
  long iterations_ = 0;
  long bland_pivots_ = 0;
  bool phase_two_ = false;
};

}  // namespace

SimplexResult solve_simplex(const LinearProgram& lp, const SimplexOptions& options) {
  return RevisedSimplex(lp, options).solve();
}

}  // namespace pgraph
