#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pgraph/simplex.hpp"
#include "pgraph/types.hpp"

namespace pgraph {

/// Unordered vertex pairs that may carry an edge. Every other pair is a
/// cannot-link and its weight is fixed at zero.
struct CandidateEdgeSet {
  Eigen::Index vertices = 0;
  /// Sorted lexicographically, first < second.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;

  bool contains(Eigen::Index i, Eigen::Index j) const;
  std::size_t size() const { return pairs.size(); }
};

/// {i, j} is allowed iff j is among the nn nearest neighbours of i or i is
/// among the nn nearest neighbours of j. Distance ties go to the lower index.
/// Throws std::invalid_argument unless 1 <= nn < N.
CandidateEdgeSet candidate_edges(const DataMatrix& points, int nn);

/// All K (K - 1) / 2 pairs.
CandidateEdgeSet complete_edges(Eigen::Index vertices);

enum class LpVariableKind { kWeight, kErrorPlus, kErrorMinus };

struct LpVariable {
  LpVariableKind kind;
  /// Weight: the pair (u, v) with u < v. Error: (dimension, vertex).
  Eigen::Index first;
  Eigen::Index second;

  std::string name() const;
};

/// The weight subproblem for the l1 graph as a standard-form LP. One weight
/// variable per allowed unordered pair (so symmetry holds by construction)
/// followed by a positive/negative error pair per (vertex, dimension). Row
/// k * D + d encodes
///   sum_{k'} w_kk' c_dk' + e+_dk - e-_dk = c_dk.
struct LpProblem {
  LinearProgram program;
  std::vector<LpVariable> variables;
  CandidateEdgeSet candidates;
  Eigen::Index dims = 0;

  Eigen::Index vertices() const { return candidates.vertices; }
  Eigen::Index weight_variables() const {
    return static_cast<Eigen::Index>(candidates.size());
  }
  /// Dense symmetric weight matrix from an LP solution vector.
  WeightMatrix expand(const Eigen::VectorXd& x) const;
};

/// Cost 2 phi_kk' per weight (both ordered pairs of trace(Phi^T W)) and
/// lambda per error variable.
LpProblem build_lp(const CostMatrix& phi, const CentroidMatrix& centroids,
                   double lambda, const CandidateEdgeSet& candidates);

struct L1Solution {
  WeightMatrix weights;
  double objective = 0.0;
  SimplexResult lp;
};

/// Solves a problem built by build_lp. Throws LpError on solver failure.
L1Solution solve_lp(const LpProblem& problem, double tol = 1e-9);

}  // namespace pgraph
