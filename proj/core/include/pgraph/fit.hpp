#pragma once

#include <functional>
#include <vector>

#include "pgraph/model.hpp"
#include "pgraph/types.hpp"

namespace pgraph {

struct FitResult {
  CentroidMatrix centroids;
  WeightMatrix weights;
  AssignmentMatrix assignments;
  /// Objective after every completed iteration.
  std::vector<double> objective_trace;
  /// Same iterates without the lambda reconstruction term (equal to
  /// objective_trace for spanning trees).
  std::vector<double> smooth_trace;
  int iterations = 0;
  bool converged = false;
};

struct IterationInfo {
  int iteration = 0;
  ObjectiveTerms terms;
  double relative_change = 0.0;
};

using IterationObserver = std::function<void(const IterationInfo&)>;

/// Alternating minimisation over the full data set: C starts at X (K = N) and
/// each round recomputes costs, soft assignments, the graph (Kruskal or the
/// l1 LP) and the closed-form centroids. Stops once
///   |obj_t - obj_{t-1}| / max(|obj_{t-1}|, 1e-12) < params.tol
/// or after params.max_iters rounds, in which case the best iterate is
/// returned with converged = false.
FitResult fit(const DataMatrix& points, const FitParams& params,
              const IterationObserver& observer = {});

/// Same loop over K landmarks seeded by k-means. Throws std::invalid_argument
/// when K > N.
FitResult fit_landmarks(const DataMatrix& points, const FitParams& params, int k,
                        const IterationObserver& observer = {});

/// Majority label of the points whose strongest assignment is each centroid.
/// Centroids that receive no point get -1; ties go to the smallest label.
std::vector<int> majority_labels(const AssignmentMatrix& assignments,
                                 const std::vector<int>& labels);

}  // namespace pgraph
