#include "pgraph/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pgraph {

std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::kSpanningTree:
      return "tree";
    case Structure::kL1Graph:
      return "l1";
  }
  return "unknown";
}

Structure parse_structure(std::string_view name) {
  if (name == "tree" || name == "spanning-tree") return Structure::kSpanningTree;
  if (name == "l1" || name == "l1-graph") return Structure::kL1Graph;
  throw std::invalid_argument("unknown structure '" + std::string(name) + "'");
}

void FitParams::validate() const {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (nn < 1) throw std::invalid_argument("nn must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
}

CostMatrix cost_matrix(const CentroidMatrix& centroids) {
  const Eigen::Index k = centroids.cols();
  CostMatrix phi = CostMatrix::Zero(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = j + 1; i < k; ++i) {
      const double d = (centroids.col(i) - centroids.col(j)).squaredNorm();
      phi(i, j) = d;
      phi(j, i) = d;
    }
  }
  return phi;
}

Eigen::MatrixXd point_centroid_distances(const DataMatrix& points,
                                         const CentroidMatrix& centroids) {
  if (points.rows() != centroids.rows()) {
    throw std::invalid_argument("points and centroids differ in dimension");
  }
  Eigen::MatrixXd dist(points.cols(), centroids.cols());
  for (Eigen::Index k = 0; k < centroids.cols(); ++k) {
    for (Eigen::Index i = 0; i < points.cols(); ++i) {
      dist(i, k) = (points.col(i) - centroids.col(k)).squaredNorm();
    }
  }
  return dist;
}

Eigen::MatrixXd laplacian(const WeightMatrix& weights) {
  const Eigen::MatrixXd& w = weights.values;
  Eigen::MatrixXd l = -w;
  l.diagonal() = w.rowwise().sum() - w.diagonal();
  return l;
}

double rge_penalty(const CentroidMatrix& centroids, const WeightMatrix& weights) {
  if (weights.values.rows() != centroids.cols() ||
      weights.values.cols() != centroids.cols()) {
    throw std::invalid_argument("weight matrix does not match centroid count");
  }
  return cost_matrix(centroids).cwiseProduct(weights.values).sum();
}

double reconstruction_error(const CentroidMatrix& centroids,
                            const WeightMatrix& weights) {
  Eigen::MatrixXd w = weights.values;
  w.diagonal().setZero();
  // Column k of C W is sum_k' w_k'k c_k'.
  return (centroids - centroids * w).cwiseAbs().sum();
}

double grouping_loss(const DataMatrix& points, const CentroidMatrix& centroids,
                     const AssignmentMatrix& assignments, double sigma) {
  const Eigen::MatrixXd& p = assignments.values;
  if (p.rows() != points.cols() || p.cols() != centroids.cols()) {
    throw std::invalid_argument("assignment matrix has the wrong shape");
  }
  if ((p.array() < 0.0).any()) {
    throw std::invalid_argument("assignment matrix has negative entries");
  }
  const Eigen::MatrixXd dist = point_centroid_distances(points, centroids);
  double total = 0.0;
  for (Eigen::Index k = 0; k < p.cols(); ++k) {
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      const double pik = p(i, k);
      if (pik > 0.0) total += pik * (dist(i, k) + sigma * std::log(pik));
    }
  }
  return total;
}

ObjectiveTerms objective_terms(const DataMatrix& points,
                               const CentroidMatrix& centroids,
                               const WeightMatrix& weights,
                               const AssignmentMatrix& assignments,
                               const FitParams& params) {
  ObjectiveTerms terms;
  terms.graph = rge_penalty(centroids, weights);
  if (params.structure == Structure::kL1Graph) {
    terms.reconstruction =
        params.lambda * reconstruction_error(centroids, weights);
  }
  terms.grouping =
      params.gamma * grouping_loss(points, centroids, assignments, params.sigma);
  return terms;
}

double objective(const DataMatrix& points, const CentroidMatrix& centroids,
                 const WeightMatrix& weights,
                 const AssignmentMatrix& assignments, const FitParams& params) {
  return objective_terms(points, centroids, weights, assignments, params).total();
}

Eigen::VectorXd harmonic_point(const CentroidMatrix& centroids,
                               const WeightMatrix& weights, Eigen::Index k) {
  if (k < 0 || k >= centroids.cols()) {
    throw std::out_of_range("vertex index out of range");
  }
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(centroids.rows());
  double mass = 0.0;
  for (Eigen::Index j = 0; j < centroids.cols(); ++j) {
    if (j == k) continue;
    const double w = weights.values(k, j);
    if (w > 0.0) {
      acc += w * centroids.col(j);
      mass += w;
    }
  }
  if (mass <= 0.0) throw std::invalid_argument("no neighbors");
  return acc / mass;
}

}  // namespace pgraph
