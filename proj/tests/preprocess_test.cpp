#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <random>

#include "oracles/random.hpp"
#include "pgraph/model.hpp"
#include "pgraph/preprocess.hpp"

namespace {

using namespace pgraph;

TEST(Standardize, PopulationScale) {
  Eigen::MatrixXd x(1, 2);
  x << 0, 2;
  const DataMatrix z = standardize(x);
  EXPECT_NEAR(z(0, 0), -1.0, 1e-15);
  EXPECT_NEAR(z(0, 1), 1.0, 1e-15);
  // sample-std convention would give -0.7071; population std is used here
  Eigen::MatrixXd y(1, 3);
  y << 0, 0, 3;
  EXPECT_NEAR(standardize(y)(0, 2), std::sqrt(2.0), 1e-15);
}

TEST(Standardize, MeanZeroUnitStdAndIdempotent) {
  std::mt19937_64 rng(1);
  const Eigen::MatrixXd x = oracle::uniform(4, 50, rng, -3, 7);
  const DataMatrix z = standardize(x);
  for (Eigen::Index d = 0; d < z.rows(); ++d) {
    EXPECT_LT(std::abs(z.row(d).mean()), 1e-12);
    EXPECT_NEAR(z.row(d).squaredNorm() / 50.0, 1.0, 1e-12);
  }
  EXPECT_LT((standardize(z) - z).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Standardize, ConstantDimensionBecomesZero) {
  Eigen::MatrixXd x(2, 3);
  x << 5, 5, 5, 1, 2, 3;
  EXPECT_TRUE(standardize(x).row(0).isZero(0.0));
}

TEST(HeatKernel, Values) {
  Eigen::MatrixXd x(1, 3);
  x << 0, 1, 0;
  const DataMatrix k = heat_kernel_features(x);
  EXPECT_NEAR(k(0, 1), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(k(0, 1), 0.3679, 1e-4);
  EXPECT_EQ(k(0, 2), 1.0);
}

TEST(HeatKernel, SymmetricUnitDiagonalPsd) {
  std::mt19937_64 rng(2);
  const DataMatrix k = heat_kernel_features(oracle::uniform(3, 60, rng));
  EXPECT_EQ(k, k.transpose());
  EXPECT_TRUE(k.diagonal().isOnes(0.0));
  EXPECT_GT(k.minCoeff(), 0.0);
  EXPECT_LE(k.maxCoeff(), 1.0);
  EXPECT_GE(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(k).eigenvalues().minCoeff(), -1e-8);
}

TEST(Pca, FullEnergyPreservesDistances) {
  std::mt19937_64 rng(3);
  // rank-2 data in 4-D
  const Eigen::MatrixXd x = oracle::uniform(4, 2, rng, -1, 1) * oracle::uniform(2, 30, rng);
  const DataMatrix y = pca_reduce(x, 1.0);
  EXPECT_EQ(y.rows(), 2);
  EXPECT_LT((cost_matrix(y) - cost_matrix(x)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Pca, LineIn3dKeepsOneDimension) {
  std::mt19937_64 rng(4);
  const Eigen::MatrixXd t = oracle::uniform(1, 40, rng);
  const Eigen::MatrixXd x = Eigen::Vector3d(1, -2, 0.5) * t;
  EXPECT_EQ(pca_reduce(x, 0.95).rows(), 1);
}

TEST(Pca, KeepsRequestedEnergyWithSignConvention) {
  std::mt19937_64 rng(5);
  Eigen::MatrixXd x = oracle::uniform(5, 80, rng);
  x.row(0) *= 10;
  x.row(1) *= 4;
  const DataMatrix centred = x.colwise() - x.rowwise().mean();
  for (double energy : {0.5, 0.8, 0.95, 0.99}) {
    const DataMatrix y = pca_reduce(x, energy);
    EXPECT_GE(y.squaredNorm() / centred.squaredNorm(), energy - 1e-12);
    if (y.rows() > 1) {
      // dropping the last kept component would fall short
      EXPECT_LT(y.topRows(y.rows() - 1).squaredNorm() / centred.squaredNorm(), energy);
    }
  }
  // same result twice, and the first loading points along +x0
  EXPECT_EQ(pca_reduce(x, 0.9), pca_reduce(x, 0.9));
  const DataMatrix y = pca_reduce(x, 0.5);
  EXPECT_GT(y.row(0).dot(centred.row(0)), 0.0);
}

TEST(Pca, RejectsEnergyOutsideRange) {
  const Eigen::MatrixXd x = Eigen::MatrixXd::Random(2, 5);
  EXPECT_THROW(pca_reduce(x, 0.0), std::invalid_argument);
  EXPECT_THROW(pca_reduce(x, 1.5), std::invalid_argument);
}

TEST(MaxAbs, Cases) {
  Eigen::MatrixXd x(2, 2);
  x << -2, 1, 0, 0;
  const DataMatrix y = maxabs_rescale(x);
  EXPECT_EQ(y(0, 0), -1.0);
  EXPECT_EQ(y(0, 1), 0.5);
  EXPECT_TRUE(y.row(1).isZero(0.0));
  EXPECT_EQ(maxabs_rescale(y), y);
}

}  // namespace
