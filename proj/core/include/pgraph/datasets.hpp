#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pgraph/types.hpp"

namespace pgraph {

/// A 2-D synthetic benchmark sample together with its noiseless skeleton.
struct Dataset {
  std::string name;
  DataMatrix points;        // 2 x N
  std::vector<int> labels;  // branch or component id per point
  /// Ground-truth skeleton as polylines of 2-D vertices (densely sampled).
  std::vector<std::vector<Eigen::Vector2d>> skeleton;
};

/// Default sample size and fitting parameters for one benchmark set.
struct DatasetDefaults {
  std::string_view name;
  int n;
  double sigma;
  double gamma;
  double lambda;
  int nn;
};

inline constexpr double kDefaultNoise = 0.05;

/// distorted-s, spiral, circle, two-moon, tree, three-clusters.
const std::vector<DatasetDefaults>& dataset_catalog();
/// Throws std::invalid_argument for an unknown name.
const DatasetDefaults& dataset_defaults(std::string_view name);
/// Fit parameters for `name` with the given structure.
FitParams dataset_params(std::string_view name, Structure structure);

/// Samples `n` skeleton points uniformly by arc length (per component) and adds
/// isotropic Gaussian noise of standard deviation `noise`. n <= 0 selects the
/// catalog size. Deterministic for a fixed seed.
/// Throws std::invalid_argument for an unknown name or 0 < n < 10.
Dataset gen_dataset(std::string_view name, int n, double noise,
                    unsigned long long seed);

}  // namespace pgraph
