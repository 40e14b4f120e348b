#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgraph {

/// D x N input points, one point per column.
using DataMatrix = Eigen::MatrixXd;
/// D x K denoised points, one centroid per column.
using CentroidMatrix = Eigen::MatrixXd;
/// K x K squared Euclidean distances between centroids.
using CostMatrix = Eigen::MatrixXd;

enum class GraphKind { kTreeBinary, kL1Weighted };

/// Symmetric nonnegative K x K edge weights with zero diagonal.
struct WeightMatrix {
  Eigen::MatrixXd values;
  GraphKind kind = GraphKind::kL1Weighted;

  Eigen::Index size() const { return values.rows(); }
};

enum class StochasticAxis { kRow, kColumn };

/// N x K responsibilities. Rows sum to one for kRow, columns for kColumn.
struct AssignmentMatrix {
  Eigen::MatrixXd values;
  StochasticAxis axis = StochasticAxis::kRow;
};

enum class Structure { kSpanningTree, kL1Graph };

std::string_view to_string(Structure s);
Structure parse_structure(std::string_view name);

struct FitParams {
  double sigma = 0.01;
  double gamma = 1.0;
  double lambda = 1.0;
  int nn = 5;
  double tol = 1e-5;
  int max_iters = 100;
  Structure structure = Structure::kSpanningTree;
  unsigned long long seed = 0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// A subproblem could not be solved (singular system, LP failure, ...).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pgraph
