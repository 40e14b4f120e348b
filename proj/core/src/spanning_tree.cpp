#include "pgraph/spanning_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace pgraph {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  std::size_t rx = find(x);
  std::size_t ry = find(y);
  if (rx == ry) return false;
  if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
  parent_[ry] = rx;
  if (rank_[rx] == rank_[ry]) ++rank_[rx];
  --components_;
  return true;
}

WeightMatrix kruskal_mst(const CostMatrix& phi) {
  if (phi.rows() != phi.cols()) {
    throw std::invalid_argument("cost matrix must be square");
  }
  if (!phi.allFinite()) {
    throw std::invalid_argument("cost matrix has non-finite entries");
  }
  const Eigen::Index k = phi.rows();
  WeightMatrix tree{Eigen::MatrixXd::Zero(k, k), GraphKind::kTreeBinary};
  if (k < 2) return tree;

  struct Edge {
    double cost;
    Eigen::Index u;
    Eigen::Index v;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k * (k - 1) / 2));
  for (Eigen::Index u = 0; u < k; ++u) {
    for (Eigen::Index v = u + 1; v < k; ++v) {
      edges.push_back({phi(u, v), u, v});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.cost, a.u, a.v) < std::tie(b.cost, b.u, b.v);
  });

  UnionFind sets(static_cast<std::size_t>(k));
  Eigen::Index added = 0;
  for (const Edge& e : edges) {
    if (sets.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
      tree.values(e.u, e.v) = 1.0;
      tree.values(e.v, e.u) = 1.0;
      if (++added == k - 1) break;
    }
  }
  return tree;
}

bool validate_tree(const WeightMatrix& weights) {
  const Eigen::MatrixXd& w = weights.values;
  const Eigen::Index k = w.rows();
  if (w.cols() != k || k == 0) return false;
  UnionFind sets(static_cast<std::size_t>(k));
  Eigen::Index edges = 0;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (w(i, i) != 0.0) return false;
    for (Eigen::Index j = i + 1; j < k; ++j) {
      if (w(i, j) != w(j, i)) return false;
      if (w(i, j) == 0.0) continue;
      if (w(i, j) != 1.0) return false;
      ++edges;
      sets.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  return edges == k - 1 && sets.components() == 1;
}

std::vector<int> component_labels(const Eigen::MatrixXd& weights,
                                  double threshold) {
  const Eigen::Index k = weights.rows();
  UnionFind sets(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      if (weights(i, j) > threshold || weights(j, i) > threshold) {
        sets.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  }
  std::vector<int> root_label(static_cast<std::size_t>(k), -1);
  std::vector<int> labels(static_cast<std::size_t>(k));
  int next = 0;
  for (Eigen::Index i = 0; i < k; ++i) {
    const std::size_t r = sets.find(static_cast<std::size_t>(i));
    if (root_label[r] < 0) root_label[r] = next++;
    labels[static_cast<std::size_t>(i)] = root_label[r];
  }
  return labels;
}

}  // namespace pgraph
