#include "pgraph/kmeans.hpp"

#include <random>
#include <stdexcept>

namespace pgraph {
namespace {

using Index = Eigen::Index;

struct Partition {
  const DataMatrix& points;
  std::vector<int> labels;
  CentroidMatrix centroids;
  std::vector<int> counts;

  void recompute_means() {
    centroids.setZero();
    std::fill(counts.begin(), counts.end(), 0);
    for (Index i = 0; i < points.cols(); ++i) {
      const int c = labels[static_cast<std::size_t>(i)];
      centroids.col(c) += points.col(i);
      ++counts[static_cast<std::size_t>(c)];
    }
    for (Index c = 0; c < centroids.cols(); ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) {
        centroids.col(c) /= counts[static_cast<std::size_t>(c)];
      }
    }
  }

  void reseed_empty() {
    for (Index c = 0; c < centroids.cols(); ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) continue;
      Index far = -1;
      double far_dist = -1.0;
      for (Index i = 0; i < points.cols(); ++i) {
        const int own = labels[static_cast<std::size_t>(i)];
        if (counts[static_cast<std::size_t>(own)] < 2) continue;
        const double d = (points.col(i) - centroids.col(own)).squaredNorm();
        if (d > far_dist) {
          far_dist = d;
          far = i;
        }
      }
      const int old = labels[static_cast<std::size_t>(far)];
      labels[static_cast<std::size_t>(far)] = static_cast<int>(c);
      --counts[static_cast<std::size_t>(old)];
      counts[static_cast<std::size_t>(c)] = 1;
      recompute_means();
    }
  }

  double inertia() const {
    double s = 0.0;
    for (Index i = 0; i < points.cols(); ++i) {
      s += (points.col(i) - centroids.col(labels[static_cast<std::size_t>(i)])).squaredNorm();
    }
    return s;
  }

  // Nearest-centroid relabelling; returns whether any label changed.
  bool assign() {
    bool changed = false;
    for (Index i = 0; i < points.cols(); ++i) {
      int best = 0;
      double best_d = (points.col(i) - centroids.col(0)).squaredNorm();
      for (Index c = 1; c < centroids.cols(); ++c) {
        const double d = (points.col(i) - centroids.col(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = static_cast<int>(c);
        }
      }
      int& label = labels[static_cast<std::size_t>(i)];
      if (label != best) {
        // Keep the current label on exact ties so the loop reaches a fixpoint,
        // unless the two centroids coincide: then the higher index drains and
        // gets reseeded.
        const double cur = (points.col(i) - centroids.col(label)).squaredNorm();
        if (cur > best_d || centroids.col(label) == centroids.col(best)) {
          label = best;
          changed = true;
        }
      }
    }
    return changed;
  }
};

}  // namespace

KMeansResult kmeans(const DataMatrix& points, int k, unsigned long long seed,
                    int max_iters) {
  const Index n = points.cols();
  if (k < 1 || k > n) throw std::invalid_argument("k-means requires 1 <= K <= N");

  Partition part{points, std::vector<int>(static_cast<std::size_t>(n)),
                 CentroidMatrix::Zero(points.rows(), k),
                 std::vector<int>(static_cast<std::size_t>(k), 0)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (auto& label : part.labels) label = pick(rng);
  part.recompute_means();
  part.reseed_empty();

  KMeansResult result;
  result.inertia_trace.push_back(part.inertia());
  for (int it = 0; it < max_iters; ++it) {
    const bool changed = part.assign();
    ++result.iterations;
    if (!changed) break;
    part.recompute_means();
    part.reseed_empty();
    result.inertia_trace.push_back(part.inertia());
  }
  result.centroids = std::move(part.centroids);
  result.labels = std::move(part.labels);
  return result;
}

}  // namespace pgraph
