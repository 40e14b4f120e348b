#pragma once

#include "pgraph/types.hpp"

namespace pgraph {

/// Zero mean and unit population standard deviation (denominator N) per
/// dimension. Constant dimensions are centred only, i.e. become zero.
DataMatrix standardize(const DataMatrix& points);

/// N x N heat-kernel matrix K(i, j) = exp(-|x_i - x_j|^2 / D). Each column is
/// the new feature vector of one point.
DataMatrix heat_kernel_features(const DataMatrix& points);

/// Projects the centred data onto the fewest leading principal directions
/// whose eigenvalues carry at least `energy` of the total. Each direction is
/// signed so that its largest-magnitude loading is positive.
/// Throws std::invalid_argument unless 0 < energy <= 1.
DataMatrix pca_reduce(const DataMatrix& points, double energy);

/// Divides each dimension by its maximum absolute value; all-zero dimensions
/// are left unchanged.
DataMatrix maxabs_rescale(const DataMatrix& points);

}  // namespace pgraph
