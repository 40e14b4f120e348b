#include <gtest/gtest.h>

#include <set>

#include "pgraph/datasets.hpp"

namespace {

using namespace pgraph;

TEST(Catalog, ParameterTable) {
  struct Row {
    const char* name;
    int n;
    double sigma, gamma, lambda;
    int nn;
  };
  const Row table[] = {{"distorted-s", 100, 0.01, 0.5, 1.0, 5}, {"spiral", 200, 0.01, 0.5, 1.0, 10},
                       {"circle", 100, 0.1, 0.5, 1.0, 10},      {"two-moon", 200, 0.01, 3, 0.1, 5},
                       {"tree", 300, 0.01, 10, 1.0, 5},         {"three-clusters", 300, 0.01, 0.5, 0.1, 5}};
  ASSERT_EQ(dataset_catalog().size(), 6U);
  for (const Row& row : table) {
    const DatasetDefaults& d = dataset_defaults(row.name);
    EXPECT_EQ(d.n, row.n);
    EXPECT_EQ(d.sigma, row.sigma);
    EXPECT_EQ(d.gamma, row.gamma);
    EXPECT_EQ(d.lambda, row.lambda);
    EXPECT_EQ(d.nn, row.nn);
    const FitParams p = dataset_params(row.name, Structure::kL1Graph);
    EXPECT_EQ(p.sigma, row.sigma);
    EXPECT_EQ(p.nn, row.nn);
    EXPECT_EQ(p.structure, Structure::kL1Graph);
  }
}

TEST(GenDataset, DefaultSizes) {
  EXPECT_EQ(gen_dataset("tree", 0, kDefaultNoise, 1).points.cols(), 300);
  EXPECT_EQ(gen_dataset("two-moon", 0, kDefaultNoise, 1).points.cols(), 200);
  for (const auto& d : dataset_catalog()) {
    const Dataset data = gen_dataset(d.name, 0, kDefaultNoise, 1);
    EXPECT_EQ(data.points.rows(), 2);
    EXPECT_EQ(data.points.cols(), d.n);
    EXPECT_EQ(static_cast<int>(data.labels.size()), d.n);
    EXPECT_FALSE(data.skeleton.empty());
    EXPECT_TRUE(data.points.allFinite());
  }
}

TEST(GenDataset, NoiselessCircleOnUnitCircle) {
  const Dataset data = gen_dataset("circle", 0, 0.0, 4);
  for (Eigen::Index i = 0; i < data.points.cols(); ++i) {
    EXPECT_NEAR(data.points.col(i).norm(), 1.0, 1e-12);
  }
}

TEST(GenDataset, SeedDeterministic) {
  for (const auto& d : dataset_catalog()) {
    const Dataset a = gen_dataset(d.name, 150, 0.03, 11);
    const Dataset b = gen_dataset(d.name, 150, 0.03, 11);
    const Dataset c = gen_dataset(d.name, 150, 0.03, 12);
    EXPECT_EQ(a.points, b.points);
    EXPECT_EQ(a.labels, b.labels);
    EXPECT_NE(a.points, c.points);
  }
}

TEST(GenDataset, LabelsNameComponents) {
  const Dataset three = gen_dataset("three-clusters", 0, kDefaultNoise, 1);
  EXPECT_EQ(std::set<int>(three.labels.begin(), three.labels.end()), (std::set<int>{0, 1, 2}));
  const Dataset moons = gen_dataset("two-moon", 0, kDefaultNoise, 1);
  EXPECT_EQ(std::set<int>(moons.labels.begin(), moons.labels.end()), (std::set<int>{0, 1}));
  const Dataset tree = gen_dataset("tree", 0, kDefaultNoise, 1);
  EXPECT_GE(std::set<int>(tree.labels.begin(), tree.labels.end()).size(), 3U);
}

TEST(GenDataset, Errors) {
  EXPECT_THROW(gen_dataset("teapot", 0, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(gen_dataset("spiral", 5, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(gen_dataset("spiral", 50, -0.1, 1), std::invalid_argument);
  EXPECT_THROW(dataset_defaults("teapot"), std::invalid_argument);
}

}  // namespace
