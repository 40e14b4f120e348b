#include "pgraph/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

namespace pgraph {
namespace {

using Curve = std::function<Eigen::Vector2d(double)>;

constexpr int kTableSize = 2048;
constexpr double kPi = std::numbers::pi;

Curve segment(Eigen::Vector2d a, Eigen::Vector2d b) {
  return [a, b](double t) -> Eigen::Vector2d { return a + t * (b - a); };
}

std::vector<Curve> skeleton_of(std::string_view name) {
  if (name == "distorted-s") {
    return {[](double t) {
      const double u = 3.0 * kPi * (t - 0.5);
      const double y = (u < 0.0 ? -1.0 : 1.0) * (std::cos(u) - 1.0);
      const double x = std::sin(u) + 0.25 * std::sin(1.5 * y);
      return Eigen::Vector2d(0.5 + 0.2 * x, 0.5 + 0.2 * y);
    }};
  }
  if (name == "spiral") {
    return {[](double t) {
      const double r = 0.05 + 0.4 * t;
      const double theta = 3.0 * kPi * t;
      return Eigen::Vector2d(0.5 + r * std::cos(theta), 0.5 + r * std::sin(theta));
    }};
  }
  if (name == "circle") {
    return {[](double t) {
      return Eigen::Vector2d(std::cos(2.0 * kPi * t), std::sin(2.0 * kPi * t));
    }};
  }
  if (name == "two-moon") {
    return {[](double t) {
              return Eigen::Vector2d((std::cos(kPi * t) + 1.0) / 3.0,
                                     std::sin(kPi * t) / 3.0 + 5.0 / 12.0);
            },
            [](double t) {
              return Eigen::Vector2d((2.0 - std::cos(kPi * t)) / 3.0,
                                     (0.5 - std::sin(kPi * t)) / 3.0 + 5.0 / 12.0);
            }};
  }
  if (name == "tree") {
    return {segment({0.5, 0.05}, {0.5, 0.45}), segment({0.5, 0.45}, {0.2, 0.8}),
            segment({0.5, 0.45}, {0.8, 0.8}), segment({0.35, 0.625}, {0.45, 0.95})};
  }
  if (name == "three-clusters") {
    return {segment({0.1, 0.15}, {0.35, 0.3}), segment({0.65, 0.2}, {0.9, 0.1}),
            segment({0.4, 0.75}, {0.6, 0.85})};
  }
  throw std::invalid_argument("unknown dataset '" + std::string(name) + "'");
}

// Cumulative arc length at t = j / kTableSize.
std::vector<double> arc_length_table(const Curve& curve) {
  std::vector<double> table(kTableSize + 1, 0.0);
  Eigen::Vector2d prev = curve(0.0);
  for (int j = 1; j <= kTableSize; ++j) {
    const Eigen::Vector2d cur = curve(static_cast<double>(j) / kTableSize);
    table[static_cast<std::size_t>(j)] = table[static_cast<std::size_t>(j - 1)] + (cur - prev).norm();
    prev = cur;
  }
  return table;
}

double parameter_at(const std::vector<double>& table, double s) {
  const auto it = std::upper_bound(table.begin(), table.end(), s);
  const auto j = std::clamp<std::ptrdiff_t>(it - table.begin(), 1, kTableSize);
  const double lo = table[static_cast<std::size_t>(j - 1)];
  const double hi = table[static_cast<std::size_t>(j)];
  const double frac = hi > lo ? (s - lo) / (hi - lo) : 0.0;
  return (static_cast<double>(j - 1) + std::clamp(frac, 0.0, 1.0)) / kTableSize;
}

// Largest-remainder split of n points proportional to component lengths.
std::vector<int> allocate(int n, const std::vector<double>& lengths) {
  double total = 0.0;
  for (double l : lengths) total += l;
  std::vector<int> counts(lengths.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  int assigned = 0;
  for (std::size_t c = 0; c < lengths.size(); ++c) {
    const double exact = n * lengths[c] / total;
    counts[c] = static_cast<int>(std::floor(exact));
    assigned += counts[c];
    remainders.emplace_back(-(exact - counts[c]), c);
  }
  std::sort(remainders.begin(), remainders.end());
  for (std::size_t r = 0; assigned < n; ++r, ++assigned) {
    ++counts[remainders[r % remainders.size()].second];
  }
  return counts;
}

const std::vector<DatasetDefaults> kCatalog = {
    {"distorted-s", 100, 0.01, 0.5, 1.0, 5},
    {"spiral", 200, 0.01, 0.5, 1.0, 10},
    {"circle", 100, 0.1, 0.5, 1.0, 10},
    {"two-moon", 200, 0.01, 3.0, 0.1, 5},
    {"tree", 300, 0.01, 10.0, 1.0, 5},
    {"three-clusters", 300, 0.01, 0.5, 0.1, 5},
};

}  // namespace

const std::vector<DatasetDefaults>& dataset_catalog() { return kCatalog; }

const DatasetDefaults& dataset_defaults(std::string_view name) {
  for (const auto& d : kCatalog) {
    if (d.name == name) return d;
  }
  throw std::invalid_argument("unknown dataset '" + std::string(name) + "'");
}

FitParams dataset_params(std::string_view name, Structure structure) {
  const DatasetDefaults& d = dataset_defaults(name);
  FitParams params;
  params.sigma = d.sigma;
  params.gamma = d.gamma;
  params.lambda = d.lambda;
  params.nn = d.nn;
  params.structure = structure;
  return params;
}

Dataset gen_dataset(std::string_view name, int n, double noise,
                    unsigned long long seed) {
  const DatasetDefaults& defaults = dataset_defaults(name);
  if (n <= 0) n = defaults.n;
  if (n < 10) throw std::invalid_argument("datasets need at least 10 points");
  if (!(noise >= 0.0)) throw std::invalid_argument("noise must be >= 0");

  const std::vector<Curve> curves = skeleton_of(name);
  std::vector<std::vector<double>> tables;
  std::vector<double> lengths;
  for (const Curve& c : curves) {
    tables.push_back(arc_length_table(c));
    lengths.push_back(tables.back().back());
  }
  const std::vector<int> counts = allocate(n, lengths);

  Dataset out;
  out.name = std::string(defaults.name);
  out.points.resize(2, n);
  out.labels.reserve(static_cast<std::size_t>(n));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Index col = 0;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    for (int i = 0; i < counts[c]; ++i) {
      const double t = parameter_at(tables[c], unit(rng) * lengths[c]);
      Eigen::Vector2d p = curves[c](t);
      if (noise > 0.0) {
        const double gx = gauss(rng);
        const double gy = gauss(rng);
        p += noise * Eigen::Vector2d(gx, gy);
      }
      out.points.col(col++) = p;
      out.labels.push_back(static_cast<int>(c));
    }
    std::vector<Eigen::Vector2d> polyline;
    constexpr int kSkeletonVertices = 200;
    for (int j = 0; j <= kSkeletonVertices; ++j) {
      polyline.push_back(curves[c](static_cast<double>(j) / kSkeletonVertices));
    }
    out.skeleton.push_back(std::move(polyline));
  }
  return out;
}

}  // namespace pgraph
