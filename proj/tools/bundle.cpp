#include "bundle.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pgraph/grouping.hpp"
#include "pgraph/spanning_tree.hpp"

namespace pgraph::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Eigen::MatrixXd read_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const auto first = field.find_first_not_of(" \t");
      const auto last = field.find_last_not_of(" \t");
      if (first == std::string::npos) {
        throw InputError(path.string() + ":" + std::to_string(lineno) + ": empty field");
      }
      const char* begin = field.data() + first;
      const char* end = field.data() + last + 1;
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(begin, end, v);
      if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw InputError(path.string() + ":" + std::to_string(lineno) +
                         ": not a finite number: '" + field + "'");
      }
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError(path.string() + ":" + std::to_string(lineno) +
                       ": inconsistent column count");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError(path.string() + ": no data rows");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

void write_csv(const fs::path& path, const Eigen::MatrixXd& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    for (Eigen::Index j = 0; j < rows.cols(); ++j) {
      if (j) out << ',';
      out << format_number(rows(i, j));
    }
    out << '\n';
  }
}

namespace {

void write_json(const fs::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace

void write_dataset(const fs::path& dir, const Dataset& dataset, double noise,
                   unsigned long long seed) {
  fs::create_directories(dir);
  write_csv(dir / (dataset.name + ".csv"), dataset.points.transpose());
  json skeleton = json::array();
  for (const auto& polyline : dataset.skeleton) {
    json line = json::array();
    for (const auto& v : polyline) line.push_back({v.x(), v.y()});
    skeleton.push_back(std::move(line));
  }
  const json truth = {{"name", dataset.name},
                      {"n", dataset.points.cols()},
                      {"noise", noise},
                      {"seed", seed},
                      {"labels", dataset.labels},
                      {"skeleton", std::move(skeleton)}};
  write_json(dir / (dataset.name + ".truth.json"), truth);
}

json edges_json(const WeightMatrix& weights) {
  json edges = json::array();
  const Eigen::MatrixXd& w = weights.values;
  for (Eigen::Index u = 0; u < w.rows(); ++u) {
    for (Eigen::Index v = u + 1; v < w.cols(); ++v) {
      if (w(u, v) > 0.0) edges.push_back({{"u", u}, {"v", v}, {"weight", w(u, v)}});
    }
  }
  return edges;
}

json trace_json(const DataMatrix& points, const FitResult& result,
                const RunInfo& info) {
  const FitParams& p = info.params;
  const double n = static_cast<double>(points.cols());
  return {{"structure", std::string(to_string(p.structure))},
          {"objective", result.objective_trace},
          {"smooth_objective", result.smooth_trace},
          {"iterations", result.iterations},
          {"converged", result.converged},
          {"lower_bound", -p.gamma * p.sigma * n * std::log(n)},
          {"num_points", points.cols()},
          {"num_centroids", result.centroids.cols()},
          {"dims", points.rows()},
          {"params",
           {{"sigma", p.sigma},
            {"gamma", p.gamma},
            {"lambda", p.lambda},
            {"nn", p.nn},
            {"tol", p.tol},
            {"max_iters", p.max_iters},
            {"seed", p.seed},
            {"landmarks", info.landmarks},
            {"standardize", info.standardize},
            {"kernel", info.kernel},
            {"pca_energy", info.pca_energy},
            {"maxabs", info.maxabs}}}};
}

std::string render_svg(const DataMatrix& points, const CentroidMatrix& centroids,
                       const WeightMatrix& weights) {
  constexpr double kSize = 800.0;
  constexpr double kMargin = 20.0;
  Eigen::Vector2d lo = points.rowwise().minCoeff();
  Eigen::Vector2d hi = points.rowwise().maxCoeff();
  if (centroids.cols() > 0) {
    lo = lo.cwiseMin(centroids.rowwise().minCoeff());
    hi = hi.cwiseMax(centroids.rowwise().maxCoeff());
  }
  const Eigen::Vector2d span = (hi - lo).cwiseMax(1e-300);
  auto px = [&](const Eigen::Vector2d& p) {
    const Eigen::Vector2d u = (p - lo).cwiseQuotient(span);  // [0, 1]^2
    return Eigen::Vector2d(kMargin + (kSize - 2 * kMargin) * u.x(),
                           kSize - kMargin - (kSize - 2 * kMargin) * u.y());
  };
  std::ostringstream svg;
  char buf[160];
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" "
         "width=\"800\" height=\"800\">\n"
      << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n<g fill=\"#aaaaaa\">\n";
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    const Eigen::Vector2d q = px(points.col(i));
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2\"/>\n", q.x(), q.y());
    svg << buf;
  }
  svg << "</g>\n<g stroke=\"#1f4e9c\" stroke-width=\"1.5\">\n";
  const Eigen::MatrixXd& w = weights.values;
  for (Eigen::Index u = 0; u < w.rows(); ++u) {
    for (Eigen::Index v = u + 1; v < w.cols(); ++v) {
      if (w(u, v) <= 0.0) continue;
      const Eigen::Vector2d a = px(centroids.col(u));
      const Eigen::Vector2d b = px(centroids.col(v));
      std::snprintf(buf, sizeof buf,
                    "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n",
                    a.x(), a.y(), b.x(), b.y());
      svg << buf;
    }
  }
  svg << "</g>\n<g fill=\"#d62728\">\n";
  for (Eigen::Index k = 0; k < centroids.cols(); ++k) {
    const Eigen::Vector2d q = px(centroids.col(k));
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\"/>\n", q.x(), q.y());
    svg << buf;
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void write_bundle(const fs::path& dir, const DataMatrix& points,
                  const FitResult& result, const RunInfo& info) {
  fs::create_directories(dir);
  write_csv(dir / "centroids.csv", result.centroids.transpose());
  write_json(dir / "edges.json", edges_json(result.weights));
  write_csv(dir / "assignments.csv", result.assignments.values);
  write_json(dir / "trace.json", trace_json(points, result, info));
  const fs::path plot = dir / "plot.svg";
  if (points.rows() == 2) {
    std::ofstream out(plot, std::ios::binary);
    out << render_svg(points, result.centroids, result.weights);
  } else if (fs::exists(plot)) {
    fs::remove(plot);
  }
}

CheckOutcome check_bundle(const fs::path& dir) {
  CheckOutcome outcome;
  auto verdict = [&](bool ok, const std::string& what) {
    (ok ? outcome.passed : outcome.failed).push_back(what);
  };

  const json trace = read_json(dir / "trace.json");
  const json edges = read_json(dir / "edges.json");
  const Eigen::MatrixXd centroids = read_csv(dir / "centroids.csv");
  const Eigen::MatrixXd p = read_csv(dir / "assignments.csv");

  const Eigen::Index k = centroids.rows();
  const Eigen::Index n = p.rows();
  const bool tree = trace.at("structure").get<std::string>() == "tree";
  verdict(trace.at("num_centroids").get<Eigen::Index>() == k &&
              trace.at("num_points").get<Eigen::Index>() == n && p.cols() == k &&
              trace.at("dims").get<Eigen::Index>() == centroids.cols(),
          "shapes agree");

  bool stochastic = (p.array() >= 0.0).all() && (p.array() <= 1.0).all();
  for (Eigen::Index i = 0; i < n && stochastic; ++i) {
    stochastic = std::abs(p.row(i).sum() - 1.0) <= 1e-9;
  }
  verdict(stochastic, "assignments row-stochastic");

  WeightMatrix w{Eigen::MatrixXd::Zero(k, k),
                 tree ? GraphKind::kTreeBinary : GraphKind::kL1Weighted};
  bool edges_ok = edges.is_array();
  for (const auto& e : edges) {
    const auto u = e.at("u").get<Eigen::Index>();
    const auto v = e.at("v").get<Eigen::Index>();
    const double weight = e.at("weight").get<double>();
    if (u < 0 || v >= k || u >= v || !(weight > 0.0) || !std::isfinite(weight)) {
      edges_ok = false;
      break;
    }
    w.values(u, v) = weight;
    w.values(v, u) = weight;
  }
  verdict(edges_ok, "edge list well-formed");
  if (tree) verdict(edges_ok && validate_tree(w), "spanning tree valid");

  // The l1 centroid step ignores the reconstruction term, so descent is only
  // checked on the tree objective.
  const auto objective = trace.at("objective").get<std::vector<double>>();
  if (tree) {
    bool monotone = true;
    for (std::size_t t = 1; t < objective.size(); ++t) {
      if (objective[t] > objective[t - 1] + 1e-9 * std::abs(objective[t - 1])) {
        monotone = false;
      }
    }
    verdict(monotone, "objective trace non-increasing");
  }
  const double bound = trace.at("lower_bound").get<double>();
  bool bounded = !objective.empty();
  for (double v : objective) bounded = bounded && v >= bound - 1e-9 * std::abs(bound);
  verdict(bounded, "objective above -gamma sigma N log N");

  if (trace.at("converged").get<bool>() && objective.size() >= 2) {
    const double tol = trace.at("params").at("tol").get<double>();
    const double a = objective[objective.size() - 2];
    const double b = objective.back();
    verdict(std::abs(b - a) / std::max(std::abs(a), 1e-12) < tol,
            "converged flag consistent with tol");
  }
  return outcome;
}

}  // namespace pgraph::cli
