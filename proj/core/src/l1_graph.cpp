#include "pgraph/l1_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pgraph/model.hpp"

namespace pgraph {

using Index = Eigen::Index;

bool CandidateEdgeSet::contains(Index i, Index j) const {
  if (i == j) return false;
  const std::pair<Index, Index> key{std::min(i, j), std::max(i, j)};
  return std::binary_search(pairs.begin(), pairs.end(), key);
}

CandidateEdgeSet candidate_edges(const DataMatrix& points, int nn) {
  const Index n = points.cols();
  if (nn < 1 || nn >= n) {
    throw std::invalid_argument("nn must satisfy 1 <= nn < N");
  }
  const CostMatrix dist = cost_matrix(points);
  std::vector<char> allowed(static_cast<std::size_t>(n * n), 0);
  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    std::iota(order.begin(), order.end(), Index{0});
    // i itself sorts first at distance zero ahead of any equal-index tie.
    std::partial_sort(order.begin(), order.begin() + nn + 1, order.end(),
                      [&](Index a, Index b) {
                        if (a == i || b == i) return a == i && b != i;
                        if (dist(i, a) != dist(i, b)) return dist(i, a) < dist(i, b);
                        return a < b;
                      });
    for (int r = 1; r <= nn; ++r) {
      const Index j = order[static_cast<std::size_t>(r)];
      allowed[static_cast<std::size_t>(std::min(i, j) * n + std::max(i, j))] = 1;
    }
  }
  CandidateEdgeSet set;
  set.vertices = n;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (allowed[static_cast<std::size_t>(i * n + j)]) set.pairs.emplace_back(i, j);
    }
  }
  return set;
}

CandidateEdgeSet complete_edges(Index vertices) {
  CandidateEdgeSet set;
  set.vertices = vertices;
  for (Index i = 0; i < vertices; ++i) {
    for (Index j = i + 1; j < vertices; ++j) set.pairs.emplace_back(i, j);
  }
  return set;
}

std::string LpVariable::name() const {
  switch (kind) {
    case LpVariableKind::kWeight:
      return "w[" + std::to_string(first) + "," + std::to_string(second) + "]";
    case LpVariableKind::kErrorPlus:
      return "e+[" + std::to_string(first) + "," + std::to_string(second) + "]";
    case LpVariableKind::kErrorMinus:
      return "e-[" + std::to_string(first) + "," + std::to_string(second) + "]";
  }
  return "?";
}

WeightMatrix LpProblem::expand(const Eigen::VectorXd& x) const {
  const Index k = vertices();
  WeightMatrix w{Eigen::MatrixXd::Zero(k, k), GraphKind::kL1Weighted};
  for (Index v = 0; v < weight_variables(); ++v) {
    const auto [a, b] = candidates.pairs[static_cast<std::size_t>(v)];
    w.values(a, b) = x(v);
    w.values(b, a) = x(v);
  }
  return w;
}

LpProblem build_lp(const CostMatrix& phi, const CentroidMatrix& centroids,
                   double lambda, const CandidateEdgeSet& candidates) {
  const Index k = centroids.cols();
  const Index d = centroids.rows();
  if (phi.rows() != k || phi.cols() != k || candidates.vertices != k) {
    throw std::invalid_argument("cost matrix, centroids and candidates disagree on K");
  }
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");

  LpProblem problem;
  problem.candidates = candidates;
  problem.dims = d;
  const Index nw = problem.weight_variables();
  const Index rows = k * d;
  const Index cols = nw + 2 * rows;

  problem.variables.reserve(static_cast<std::size_t>(cols));
  problem.program.cost.resize(cols);
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(2 * d * nw + 2 * rows));

  for (Index v = 0; v < nw; ++v) {
    const auto [a, b] = candidates.pairs[static_cast<std::size_t>(v)];
    problem.variables.push_back({LpVariableKind::kWeight, a, b});
    problem.program.cost(v) = 2.0 * phi(a, b);
    for (Index dim = 0; dim < d; ++dim) {
      // w_ab reconstructs c_a from c_b and c_b from c_a.
      entries.emplace_back(a * d + dim, v, centroids(dim, b));
      entries.emplace_back(b * d + dim, v, centroids(dim, a));
    }
  }
  for (Index vertex = 0; vertex < k; ++vertex) {
    for (Index dim = 0; dim < d; ++dim) {
      const Index row = vertex * d + dim;
      const Index plus = nw + 2 * row;
      problem.variables.push_back({LpVariableKind::kErrorPlus, dim, vertex});
      problem.variables.push_back({LpVariableKind::kErrorMinus, dim, vertex});
      problem.program.cost(plus) = lambda;
      problem.program.cost(plus + 1) = lambda;
      entries.emplace_back(row, plus, 1.0);
      entries.emplace_back(row, plus + 1, -1.0);
    }
  }
  problem.program.constraints.resize(rows, cols);
  problem.program.constraints.setFromTriplets(entries.begin(), entries.end());
  problem.program.constraints.makeCompressed();
  problem.program.rhs = Eigen::Map<const Eigen::VectorXd>(centroids.data(), rows);
  return problem;
}

L1Solution solve_lp(const LpProblem& problem, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  SimplexOptions options;
  options.tol = tol;
  L1Solution solution;
  solution.lp = solve_simplex(problem.program, options);
  solution.weights = problem.expand(solution.lp.x);
  solution.objective = solution.lp.objective;
  return solution;
}

}  // namespace pgraph
