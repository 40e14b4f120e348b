#pragma once

#include "pgraph/types.hpp"

namespace pgraph {

/// Closed-form centroid step: the C solving C (2 L + gamma Lambda) = gamma X P,
/// with L the Laplacian of `weights` and Lambda = diag(1^T P). The system
/// matrix 2 L / gamma + Lambda is Cholesky-factored once and applied to all D
/// right-hand sides.
///
/// Throws SolverError("empty cluster under hard assignment") when a column of
/// P sums to zero, and SolverError when the factorisation fails.
CentroidMatrix update_centroids(const DataMatrix& points,
                                const AssignmentMatrix& assignments,
                                const WeightMatrix& weights, double gamma);

}  // namespace pgraph
