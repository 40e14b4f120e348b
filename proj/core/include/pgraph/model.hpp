#pragma once

#include <Eigen/Core>

#include "pgraph/types.hpp"

namespace pgraph {

/// Pairwise squared distances between the columns of `centroids`.
CostMatrix cost_matrix(const CentroidMatrix& centroids);

/// Squared distances between every data column and every centroid column,
/// returned as an N x K matrix.
Eigen::MatrixXd point_centroid_distances(const DataMatrix& points,
                                         const CentroidMatrix& centroids);

/// L = diag(W 1) - W.
Eigen::MatrixXd laplacian(const WeightMatrix& weights);

/// Sum over ordered pairs of w_kk' * |c_k - c_k'|^2, i.e. trace(Phi^T W).
double rge_penalty(const CentroidMatrix& centroids, const WeightMatrix& weights);

/// sum_k |c_k - sum_{k' != k} w_k'k c_k'|_1, the linear reconstruction error
/// of every centroid from its graph neighbours.
double reconstruction_error(const CentroidMatrix& centroids,
                            const WeightMatrix& weights);

/// sum_ik p_ik (|x_i - c_k|^2 + sigma log p_ik) with 0 log 0 = 0.
double grouping_loss(const DataMatrix& points, const CentroidMatrix& centroids,
                     const AssignmentMatrix& assignments, double sigma);

struct ObjectiveTerms {
  double graph = 0.0;           ///< trace(Phi^T W)
  double reconstruction = 0.0;  ///< lambda * l1 error, zero for trees
  double grouping = 0.0;        ///< gamma * grouping_loss
  double total() const { return graph + reconstruction + grouping; }
  /// Objective without the l1 reconstruction term.
  double smooth() const { return graph + grouping; }
};

ObjectiveTerms objective_terms(const DataMatrix& points,
                               const CentroidMatrix& centroids,
                               const WeightMatrix& weights,
                               const AssignmentMatrix& assignments,
                               const FitParams& params);

/// Full objective. The lambda term only participates for Structure::kL1Graph.
/// Throws std::invalid_argument on negative assignments or shape mismatch.
double objective(const DataMatrix& points, const CentroidMatrix& centroids,
                 const WeightMatrix& weights,
                 const AssignmentMatrix& assignments, const FitParams& params);

/// Weighted mean of the neighbours of vertex `k`; the minimiser of the
/// embedding penalty over c_k with every other column held fixed.
Eigen::VectorXd harmonic_point(const CentroidMatrix& centroids,
                               const WeightMatrix& weights, Eigen::Index k);

}  // namespace pgraph
