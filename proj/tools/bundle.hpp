#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgraph/datasets.hpp"
#include "pgraph/fit.hpp"

namespace pgraph::cli {

/// Raised for unreadable or malformed input files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rows of comma-separated decimals, no header; returns one row per line.
Eigen::MatrixXd read_csv(const std::filesystem::path& path);
/// Writes one matrix row per line with 17 significant digits.
void write_csv(const std::filesystem::path& path, const Eigen::MatrixXd& rows);
std::string format_number(double value);

void write_dataset(const std::filesystem::path& dir, const Dataset& dataset,
                   double noise, unsigned long long seed);

/// What was run, recorded in trace.json.
struct RunInfo {
  FitParams params;
  int landmarks = 0;
  bool standardize = false;
  bool kernel = false;
  double pca_energy = 0.0;
  bool maxabs = false;
};

/// centroids.csv, edges.json, assignments.csv, trace.json and, for 2-D
/// data, plot.svg.
void write_bundle(const std::filesystem::path& dir, const DataMatrix& points,
                  const FitResult& result, const RunInfo& info);

nlohmann::json edges_json(const WeightMatrix& weights);
nlohmann::json trace_json(const DataMatrix& points, const FitResult& result,
                          const RunInfo& info);
std::string render_svg(const DataMatrix& points, const CentroidMatrix& centroids,
                       const WeightMatrix& weights);

struct CheckOutcome {
  std::vector<std::string> passed;
  std::vector<std::string> failed;
  bool ok() const { return failed.empty(); }
};

/// Re-validates a bundle: shapes, row-stochastic assignments, tree validity,
/// monotone objective trace and the entropy lower bound.
CheckOutcome check_bundle(const std::filesystem::path& dir);

}  // namespace pgraph::cli
