#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles/random.hpp"
#include "pgraph/datasets.hpp"
#include "pgraph/fit.hpp"
#include "pgraph/grouping.hpp"
#include "pgraph/model.hpp"
#include "pgraph/spanning_tree.hpp"

namespace {

using namespace pgraph;

void expect_monotone(const std::vector<double>& trace) {
  for (std::size_t t = 1; t < trace.size(); ++t) {
    EXPECT_LE(trace[t], trace[t - 1] + 1e-9 * std::abs(trace[t - 1])) << "t=" << t;
  }
}

void expect_bounded(const FitResult& r, const FitParams& p, Eigen::Index n) {
  const double nd = static_cast<double>(n);
  for (double v : r.objective_trace) EXPECT_GE(v, -p.gamma * p.sigma * nd * std::log(nd));
}

void expect_converged_consistently(const FitResult& r, const FitParams& p) {
  if (!r.converged) return;
  ASSERT_GE(r.objective_trace.size(), 2U);
  const double a = r.objective_trace[r.objective_trace.size() - 2];
  const double b = r.objective_trace.back();
  EXPECT_LT(std::abs(b - a) / std::max(std::abs(a), 1e-12), p.tol);
}

TEST(Fit, TwoIdenticalPoints) {
  const Eigen::MatrixXd x = Eigen::MatrixXd::Constant(2, 2, 0.3);
  FitParams p;
  const FitResult r = fit(x, p);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 2);
  Eigen::MatrixXd expected(2, 2);
  expected << 0, 1, 1, 0;
  EXPECT_EQ(r.weights.values, expected);
  EXPECT_TRUE(r.centroids.isApprox(x));
}

TEST(Fit, TreeDescentOnRandomClouds) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXd x = oracle::uniform(2, 30 + 5 * trial, rng);
    FitParams p;
    p.sigma = 0.005 * (1 + trial % 3);
    p.gamma = 0.5 + trial;
    const FitResult r = fit(x, p);
    expect_monotone(r.objective_trace);
    expect_bounded(r, p, x.cols());
    expect_converged_consistently(r, p);
    EXPECT_TRUE(validate_tree(r.weights));
    EXPECT_EQ(static_cast<int>(r.objective_trace.size()), r.iterations);
  }
}

TEST(Fit, EverySyntheticDatasetDescends) {
  for (const auto& d : dataset_catalog()) {
    const Dataset data = gen_dataset(d.name, 0, kDefaultNoise, 5);
    const FitParams p = dataset_params(d.name, Structure::kSpanningTree);
    const FitResult r = fit(data.points, p);
    SCOPED_TRACE(std::string(d.name));
    expect_monotone(r.objective_trace);
    expect_bounded(r, p, data.points.cols());
    EXPECT_TRUE(validate_tree(r.weights));
  }
}

TEST(Fit, ObserverSeesEveryIteration) {
  std::mt19937_64 rng(2);
  const Eigen::MatrixXd x = oracle::uniform(2, 40, rng);
  FitParams p;
  p.sigma = 0.01;
  std::vector<IterationInfo> seen;
  const FitResult r = fit(x, p, [&](const IterationInfo& info) { seen.push_back(info); });
  ASSERT_EQ(static_cast<int>(seen.size()), r.iterations);
  for (std::size_t t = 0; t < seen.size(); ++t) {
    EXPECT_EQ(seen[t].iteration, static_cast<int>(t + 1));
    EXPECT_DOUBLE_EQ(seen[t].terms.total(), r.objective_trace[t]);
  }
  EXPECT_TRUE(std::isinf(seen.front().relative_change));
}

TEST(Fit, IterationCapReturnsBestIterate) {
  std::mt19937_64 rng(3);
  const Eigen::MatrixXd x = oracle::uniform(2, 60, rng);
  FitParams p;
  p.sigma = 0.01;
  p.max_iters = 2;
  p.tol = 1e-15;
  const FitResult r = fit(x, p);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 2);
  const double at_result = objective(x, r.centroids, r.weights, r.assignments, p);
  EXPECT_DOUBLE_EQ(at_result, *std::min_element(r.objective_trace.begin(), r.objective_trace.end()));
}

TEST(Fit, DeterministicAcrossRuns) {
  const Dataset data = gen_dataset("two-moon", 0, kDefaultNoise, 9);
  for (auto s : {Structure::kSpanningTree, Structure::kL1Graph}) {
    FitParams p = dataset_params("two-moon", s);
    p.max_iters = 5;
    const FitResult a = fit(data.points, p);
    const FitResult b = fit(data.points, p);
    EXPECT_EQ(a.centroids, b.centroids);
    EXPECT_EQ(a.weights.values, b.weights.values);
    EXPECT_EQ(a.assignments.values, b.assignments.values);
    EXPECT_EQ(a.objective_trace, b.objective_trace);
  }
}

TEST(Fit, L1GraphRespectsCandidatesAndSymmetry) {
  const Dataset data = gen_dataset("distorted-s", 60, kDefaultNoise, 4);
  FitParams p = dataset_params("distorted-s", Structure::kL1Graph);
  p.max_iters = 10;
  const FitResult r = fit(data.points, p);
  const Eigen::MatrixXd& w = r.weights.values;
  EXPECT_EQ(r.weights.kind, GraphKind::kL1Weighted);
  EXPECT_EQ(w, w.transpose());
  EXPECT_TRUE(w.diagonal().isZero(0.0));
  EXPECT_GE(w.minCoeff(), 0.0);
  expect_bounded(r, p, data.points.cols());
  ASSERT_EQ(r.smooth_trace.size(), r.objective_trace.size());
  for (std::size_t t = 0; t < r.smooth_trace.size(); ++t) {
    EXPECT_LE(r.smooth_trace[t], r.objective_trace[t]);
  }
}

TEST(Fit, L1CompleteCandidatesWhenNnCoversAll) {
  std::mt19937_64 rng(4);
  const Eigen::MatrixXd x = oracle::uniform(2, 8, rng);
  FitParams p;
  p.structure = Structure::kL1Graph;
  p.nn = 50;
  p.max_iters = 3;
  EXPECT_NO_THROW(fit(x, p));
}

TEST(Fit, RejectsBadInput) {
  FitParams p;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(2, 3);
  x(0, 0) = std::nan("");
  EXPECT_THROW(fit(x, p), std::invalid_argument);
  p.sigma = -1;
  EXPECT_THROW(fit(Eigen::MatrixXd::Zero(2, 3), p), std::invalid_argument);
}

TEST(FitLandmarks, KEqualsNMatchesFullFitUpToRelabeling) {
  std::mt19937_64 rng(5);
  const Eigen::MatrixXd x = oracle::uniform(2, 25, rng);
  FitParams p;
  p.sigma = 0.01;
  p.gamma = 2;
  const FitResult full = fit(x, p);
  const FitResult land = fit_landmarks(x, p, 25);
  ASSERT_EQ(full.objective_trace.size(), land.objective_trace.size());
  for (std::size_t t = 0; t < full.objective_trace.size(); ++t) {
    EXPECT_NEAR(full.objective_trace[t], land.objective_trace[t],
                1e-9 * std::abs(full.objective_trace[t]));
  }
}

TEST(FitLandmarks, TreeOnLargeResample) {
  const Dataset data = gen_dataset("tree", 2000, kDefaultNoise, 3);
  const FitParams p = dataset_params("tree", Structure::kSpanningTree);
  const FitResult r = fit_landmarks(data.points, p, 50);
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(validate_tree(r.weights));
  EXPECT_EQ(r.centroids.cols(), 50);
  EXPECT_EQ(r.assignments.values.rows(), 2000);
  expect_monotone(r.objective_trace);
}

TEST(FitLandmarks, ThreeClustersStayApart) {
  const Dataset data = gen_dataset("three-clusters", 0, kDefaultNoise, 2);
  const FitParams p = dataset_params("three-clusters", Structure::kL1Graph);
  const FitResult r = fit_landmarks(data.points, p, 30);
  const auto labels = component_labels(r.weights.values, 1e-6);
  EXPECT_GE(*std::max_element(labels.begin(), labels.end()) + 1, 3);
}

TEST(FitLandmarks, RejectsBadK) {
  const Eigen::MatrixXd x = Eigen::MatrixXd::Zero(2, 4);
  EXPECT_THROW(fit_landmarks(x, FitParams{}, 5), std::invalid_argument);
  EXPECT_THROW(fit_landmarks(x, FitParams{}, 0), std::invalid_argument);
}

TEST(MajorityLabels, Cases) {
  EXPECT_EQ(majority_labels({Eigen::MatrixXd::Identity(3, 3)}, {4, 7, 2}),
            (std::vector<int>{4, 7, 2}));
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(5, 3);
  p.col(0).head(3).setOnes();  // labels {1,1,2} -> 1
  p(3, 1) = p(4, 1) = 1;       // labels {2,1} tie -> 1
  EXPECT_EQ(majority_labels({p}, {1, 2, 1, 2, 1}), (std::vector<int>{1, 1, -1}));
  EXPECT_THROW(majority_labels({p}, {1, 2}), std::invalid_argument);
}

}  // namespace
