#pragma once

#include <cstddef>
#include <vector>

#include "pgraph/types.hpp"

namespace pgraph {

/// Disjoint-set forest with path compression and union by rank.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false when x and y were already in the same set.
  bool unite(std::size_t x, std::size_t y);
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
  std::size_t components_;
};

/// Minimum spanning tree of the complete graph with edge costs `phi`, as a
/// binary symmetric weight matrix. Equal costs are ordered by
/// (min endpoint, max endpoint). K = 1 yields the 1 x 1 zero matrix.
/// Throws std::invalid_argument on non-finite or non-square costs.
WeightMatrix kruskal_mst(const CostMatrix& phi);

/// True iff `weights` is binary, symmetric, zero-diagonal, has K - 1
/// undirected edges and is connected.
bool validate_tree(const WeightMatrix& weights);

/// Connected-component id per vertex, treating w_ij > threshold as an edge.
/// Ids are dense and ordered by first vertex.
std::vector<int> component_labels(const Eigen::MatrixXd& weights,
                                  double threshold = 0.0);

}  // namespace pgraph
