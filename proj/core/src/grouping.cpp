#include "pgraph/grouping.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pgraph/model.hpp"

namespace pgraph {
namespace {

void require_positive_sigma(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
}

// Softmax of -dist/sigma along one row or column, written into `out`.
template <typename In, typename Out>
void softmax_neg(const In& dist, double sigma, Out&& out) {
  const double lo = dist.minCoeff();
  double z = 0.0;
  for (Eigen::Index j = 0; j < dist.size(); ++j) {
    const double e = std::exp(-(dist(j) - lo) / sigma);
    out(j) = e;
    z += e;
  }
  constexpr double kFloor = std::numeric_limits<double>::min();
  for (Eigen::Index j = 0; j < dist.size(); ++j) {
    out(j) = std::max(out(j) / z, kFloor);
  }
}

// -sigma log sum_j exp(-dist_j / sigma), stabilised.
template <typename In>
double neg_log_sum_exp(const In& dist, double sigma) {
  const double lo = dist.minCoeff();
  double z = 0.0;
  for (Eigen::Index j = 0; j < dist.size(); ++j) {
    z += std::exp(-(dist(j) - lo) / sigma);
  }
  return lo - sigma * std::log(z);
}

}  // namespace

AssignmentMatrix update_assignments(const DataMatrix& points,
                                    const CentroidMatrix& centroids,
                                    double sigma) {
  require_positive_sigma(sigma);
  const Eigen::MatrixXd dist = point_centroid_distances(points, centroids);
  AssignmentMatrix p{Eigen::MatrixXd(dist.rows(), dist.cols()),
                     StochasticAxis::kRow};
  for (Eigen::Index i = 0; i < dist.rows(); ++i) {
    softmax_neg(dist.row(i), sigma, p.values.row(i));
  }
  return p;
}

AssignmentMatrix hard_assignments(const DataMatrix& points,
                                  const CentroidMatrix& centroids) {
  const Eigen::MatrixXd dist = point_centroid_distances(points, centroids);
  AssignmentMatrix p{Eigen::MatrixXd::Zero(dist.rows(), dist.cols()),
                     StochasticAxis::kRow};
  for (Eigen::Index i = 0; i < dist.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < dist.cols(); ++k) {
      if (dist(i, k) < dist(i, best)) best = k;
    }
    p.values(i, best) = 1.0;
  }
  return p;
}

AssignmentMatrix update_assignments_colstochastic(const DataMatrix& points,
                                                  const CentroidMatrix& centroids,
                                                  double sigma) {
  require_positive_sigma(sigma);
  const Eigen::MatrixXd dist = point_centroid_distances(points, centroids);
  AssignmentMatrix p{Eigen::MatrixXd(dist.rows(), dist.cols()),
                     StochasticAxis::kColumn};
  for (Eigen::Index k = 0; k < dist.cols(); ++k) {
    softmax_neg(dist.col(k), sigma, p.values.col(k));
  }
  return p;
}

double free_energy(const DataMatrix& points, const CentroidMatrix& centroids,
                   double sigma) {
  require_positive_sigma(sigma);
  const Eigen::MatrixXd dist = point_centroid_distances(points, centroids);
  double total = 0.0;
  for (Eigen::Index i = 0; i < dist.rows(); ++i) {
    total += neg_log_sum_exp(dist.row(i), sigma);
  }
  return total;
}

double mean_shift_energy(const DataMatrix& points,
                         const CentroidMatrix& centroids, double sigma) {
  require_positive_sigma(sigma);
  const Eigen::MatrixXd dist = point_centroid_distances(points, centroids);
  double total = 0.0;
  for (Eigen::Index k = 0; k < dist.cols(); ++k) {
    total += neg_log_sum_exp(dist.col(k), sigma);
  }
  return total;
}

}  // namespace pgraph
