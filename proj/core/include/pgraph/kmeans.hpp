#pragma once

#include <vector>

#include "pgraph/types.hpp"

namespace pgraph {

struct KMeansResult {
  CentroidMatrix centroids;  // D x K
  std::vector<int> labels;   // cluster per point
  /// Within-cluster sum of squares after every update, starting with the
  /// initial partition.
  std::vector<double> inertia_trace;
  int iterations = 0;
};

/// Lloyd's algorithm from a seeded random partition. Stops at an assignment
/// fixpoint or after `max_iters` rounds. A cluster that empties is re-seeded
/// with the point farthest from its own centroid.
/// Throws std::invalid_argument unless 1 <= K <= N.
KMeansResult kmeans(const DataMatrix& points, int k, unsigned long long seed,
                    int max_iters = 100);

}  // namespace pgraph
