#include "pgraph/centroids.hpp"

#include <Eigen/Cholesky>

#include <stdexcept>

#include "pgraph/model.hpp"

namespace pgraph {

CentroidMatrix update_centroids(const DataMatrix& points,
                                const AssignmentMatrix& assignments,
                                const WeightMatrix& weights, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  const Eigen::MatrixXd& p = assignments.values;
  const Eigen::Index k = p.cols();
  if (p.rows() != points.cols()) {
    throw std::invalid_argument("assignments do not match the number of points");
  }
  if (weights.values.rows() != k || weights.values.cols() != k) {
    throw std::invalid_argument("weights do not match the number of centroids");
  }

  const Eigen::VectorXd mass = p.colwise().sum().transpose();
  if ((mass.array() <= 0.0).any()) {
    throw SolverError("empty cluster under hard assignment");
  }

  Eigen::MatrixXd system = (2.0 / gamma) * laplacian(weights);
  system.diagonal() += mass;
  const Eigen::LLT<Eigen::MatrixXd> llt(system);
  if (llt.info() != Eigen::Success) {
    throw SolverError("centroid system is not positive definite");
  }
  // M symmetric, so C M = X P  <=>  M C^T = (X P)^T.
  const Eigen::MatrixXd rhs = (points * p).transpose();
  CentroidMatrix centroids = llt.solve(rhs).transpose();
  if (!centroids.allFinite()) {
    throw SolverError("centroid solve produced non-finite values");
  }
  return centroids;
}

}  // namespace pgraph
