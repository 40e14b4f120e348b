#include "pgraph/preprocess.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

#include "pgraph/model.hpp"

namespace pgraph {

DataMatrix standardize(const DataMatrix& points) {
  const double n = static_cast<double>(points.cols());
  DataMatrix out = points.colwise() - points.rowwise().mean();
  for (Eigen::Index d = 0; d < out.rows(); ++d) {
    const double sd = std::sqrt(out.row(d).squaredNorm() / n);
    if (sd > 0.0) out.row(d) /= sd;
  }
  return out;
}

DataMatrix heat_kernel_features(const DataMatrix& points) {
  const double dims = static_cast<double>(points.rows());
  DataMatrix kernel = (-cost_matrix(points).array() / dims).exp().matrix();
  kernel.diagonal().setOnes();
  return kernel;
}

DataMatrix pca_reduce(const DataMatrix& points, double energy) {
  if (!(energy > 0.0 && energy <= 1.0)) {
    throw std::invalid_argument("energy must lie in (0, 1]");
  }
  const DataMatrix centred = points.colwise() - points.rowwise().mean();
  const Eigen::MatrixXd cov =
      centred * centred.transpose() / static_cast<double>(points.cols());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  if (eig.info() != Eigen::Success) {
    throw SolverError("covariance eigendecomposition failed");
  }
  // Eigen sorts ascending; walk from the top.
  const Eigen::VectorXd values = eig.eigenvalues().reverse().cwiseMax(0.0);
  const Eigen::MatrixXd vectors = eig.eigenvectors().rowwise().reverse();
  const double total = values.sum();
  const Eigen::Index dims = values.size();

  Eigen::Index rank = 0;
  const double floor = 1e-10 * (dims > 0 ? values(0) : 0.0);
  while (rank < dims && values(rank) > floor) ++rank;

  Eigen::Index keep = 1;
  double acc = dims > 0 ? values(0) : 0.0;
  while (keep < rank && acc < energy * total * (1.0 - 1e-12)) acc += values(keep++);

  Eigen::MatrixXd basis = vectors.leftCols(keep);
  for (Eigen::Index c = 0; c < keep; ++c) {
    Eigen::Index arg = 0;
    basis.col(c).cwiseAbs().maxCoeff(&arg);
    if (basis(arg, c) < 0.0) basis.col(c) *= -1.0;
  }
  return basis.transpose() * centred;
}

DataMatrix maxabs_rescale(const DataMatrix& points) {
  DataMatrix out = points;
  for (Eigen::Index d = 0; d < out.rows(); ++d) {
    const double m = out.row(d).cwiseAbs().maxCoeff();
    if (m > 0.0) out.row(d) /= m;
  }
  return out;
}

}  // namespace pgraph
