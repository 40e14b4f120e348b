#include "pgraph/fit.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

#include "pgraph/centroids.hpp"
#include "pgraph/grouping.hpp"
#include "pgraph/kmeans.hpp"
#include "pgraph/l1_graph.hpp"
#include "pgraph/spanning_tree.hpp"

namespace pgraph {
namespace {

constexpr double kLpTolerance = 1e-9;
constexpr Eigen::Index kMaxCompleteGraph = 300;

FitResult alternate(const DataMatrix& points, CentroidMatrix centroids,
                    const FitParams& params, const IterationObserver& observer) {
  params.validate();
  if (points.size() == 0 || !points.allFinite()) {
    throw std::invalid_argument("data must be non-empty and finite");
  }

  std::optional<CandidateEdgeSet> candidates;
  if (params.structure == Structure::kL1Graph) {
    const Eigen::Index k = centroids.cols();
    if (params.nn >= k - 1 && k > kMaxCompleteGraph) {
      throw std::invalid_argument("complete-graph l1 LP is limited to K <= 300");
    }
    candidates = params.nn >= k - 1 ? complete_edges(k)
                                    : candidate_edges(centroids, params.nn);
  }

  FitResult result;
  FitResult best;
  double best_value = INFINITY;
  for (int t = 1; t <= params.max_iters; ++t) {
    const CostMatrix phi = cost_matrix(centroids);
    AssignmentMatrix assignments = update_assignments(points, centroids, params.sigma);
    WeightMatrix weights =
        candidates ? solve_lp(build_lp(phi, centroids, params.lambda, *candidates),
                              kLpTolerance)
                         .weights
                   : kruskal_mst(phi);
    centroids = update_centroids(points, assignments, weights, params.gamma);

    const ObjectiveTerms terms =
        objective_terms(points, centroids, weights, assignments, params);
    const double value = terms.total();
    result.objective_trace.push_back(value);
    result.smooth_trace.push_back(terms.smooth());
    result.iterations = t;

    IterationInfo info{t, terms, INFINITY};
    if (t > 1) {
      const double prev = result.objective_trace[static_cast<std::size_t>(t - 2)];
      info.relative_change = std::abs(value - prev) / std::max(std::abs(prev), 1e-12);
    }
    if (observer) observer(info);

    result.centroids = centroids;
    result.weights = std::move(weights);
    result.assignments = std::move(assignments);
    if (value < best_value) {
      best_value = value;
      best.centroids = result.centroids;
      best.weights = result.weights;
      best.assignments = result.assignments;
    }
    if (info.relative_change < params.tol) {
      result.converged = true;
      return result;
    }
  }
  result.centroids = std::move(best.centroids);
  result.weights = std::move(best.weights);
  result.assignments = std::move(best.assignments);
  return result;
}

}  // namespace

FitResult fit(const DataMatrix& points, const FitParams& params,
              const IterationObserver& observer) {
  return alternate(points, points, params, observer);
}

FitResult fit_landmarks(const DataMatrix& points, const FitParams& params, int k,
                        const IterationObserver& observer) {
  if (k < 1 || k > points.cols()) {
    throw std::invalid_argument("landmark count must satisfy 1 <= K <= N");
  }
  params.validate();
  return alternate(points, kmeans(points, k, params.seed).centroids, params, observer);
}

std::vector<int> majority_labels(const AssignmentMatrix& assignments,
                                 const std::vector<int>& labels) {
  const Eigen::MatrixXd& p = assignments.values;
  if (static_cast<Eigen::Index>(labels.size()) != p.rows()) {
    throw std::invalid_argument("label count does not match assignments");
  }
  std::vector<std::map<int, int>> votes(static_cast<std::size_t>(p.cols()));
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    Eigen::Index k = 0;
    p.row(i).maxCoeff(&k);
    ++votes[static_cast<std::size_t>(k)][labels[static_cast<std::size_t>(i)]];
  }
  std::vector<int> out(static_cast<std::size_t>(p.cols()), -1);
  for (std::size_t k = 0; k < votes.size(); ++k) {
    int best_count = 0;
    for (const auto& [label, count] : votes[k]) {
      if (count > best_count) {  // map order: smallest label wins ties
        best_count = count;
        out[k] = label;
      }
    }
  }
  return out;
}

}  // namespace pgraph
