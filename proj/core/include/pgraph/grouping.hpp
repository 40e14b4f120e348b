#pragma once

#include "pgraph/types.hpp"

namespace pgraph {

/// Row-stochastic soft assignments
///   p_ik = exp(-|x_i - c_k|^2 / sigma) / sum_k' exp(-|x_i - c_k'|^2 / sigma),
/// evaluated with a per-row max shift. Entries that would underflow are
/// clamped to the smallest normal double so every entry stays positive.
AssignmentMatrix update_assignments(const DataMatrix& points,
                                    const CentroidMatrix& centroids,
                                    double sigma);

/// Indicator of the nearest centroid per point; ties go to the lowest index.
AssignmentMatrix hard_assignments(const DataMatrix& points,
                                  const CentroidMatrix& centroids);

/// Column-stochastic variant: each centroid distributes unit mass over the
/// points (the mean-shift form).
AssignmentMatrix update_assignments_colstochastic(const DataMatrix& points,
                                                  const CentroidMatrix& centroids,
                                                  double sigma);

/// -sigma sum_i log sum_k exp(-|x_i - c_k|^2 / sigma); the minimum of the
/// grouping loss over row-stochastic assignments.
double free_energy(const DataMatrix& points, const CentroidMatrix& centroids,
                   double sigma);

/// -sigma sum_k log sum_i exp(-|x_i - c_k|^2 / sigma); the minimum of the
/// grouping loss over column-stochastic assignments.
double mean_shift_energy(const DataMatrix& points,
                         const CentroidMatrix& centroids, double sigma);

}  // namespace pgraph
