#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

#include "bundle.hpp"
#include "pgraph/datasets.hpp"
#include "pgraph/fit.hpp"
#include "pgraph/preprocess.hpp"

namespace pgraph::cli {
namespace {

namespace fs = std::filesystem;

struct GenOptions {
  std::string name;
  unsigned long long seed = 0;
  int n = 0;
  double noise = kDefaultNoise;
  std::string output_dir = ".";
};

struct FitOptions {
  std::string input;
  std::string output_dir;
  std::string structure = "tree";
  RunInfo info;
};

int do_gen(const GenOptions& opt, std::ostream& out) {
  const Dataset data = gen_dataset(opt.name, opt.n, opt.noise, opt.seed);
  write_dataset(opt.output_dir, data, opt.noise, opt.seed);
  out << "wrote " << (fs::path(opt.output_dir) / (data.name + ".csv")).string() << " ("
      << data.points.cols() << " points)\n";
  return kExitOk;
}

int do_fit(FitOptions opt, std::ostream& out) {
  opt.info.params.structure = parse_structure(opt.structure);
  opt.info.params.validate();

  DataMatrix points = read_csv(opt.input).transpose();
  if (opt.info.standardize) points = standardize(points);
  if (opt.info.kernel) points = heat_kernel_features(points);
  if (opt.info.pca_energy > 0.0) points = pca_reduce(points, opt.info.pca_energy);
  if (opt.info.maxabs) points = maxabs_rescale(points);

  const FitResult result =
      opt.info.landmarks > 0
          ? fit_landmarks(points, opt.info.params, opt.info.landmarks)
          : fit(points, opt.info.params);

  fs::path dir = opt.output_dir.empty()
                     ? fs::path(opt.input).parent_path() / "result"
                     : fs::path(opt.output_dir);
  write_bundle(dir, points, result, opt.info);
  out << "iterations " << result.iterations << ", converged "
      << (result.converged ? "true" : "false") << ", objective "
      << format_number(result.objective_trace.back()) << "\nwrote " << dir.string()
      << "\n";
  return kExitOk;
}

int do_check(const std::string& dir, std::ostream& out) {
  const CheckOutcome outcome = check_bundle(dir);
  for (const auto& p : outcome.passed) out << "ok    " << p << "\n";
  for (const auto& f : outcome.failed) out << "FAIL  " << f << "\n";
  return outcome.ok() ? kExitOk : kExitSolver;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal graph learning from point clouds", "pgraph"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic dataset");
  std::vector<std::string> names;
  for (const auto& d : dataset_catalog()) names.emplace_back(d.name);
  gen->add_option("--name", gen_opt.name, "Dataset name")
      ->required()
      ->check(CLI::IsMember(names));
  gen->add_option("--seed", gen_opt.seed, "Random seed");
  gen->add_option("--n", gen_opt.n, "Number of points (default: catalog size)");
  gen->add_option("--noise", gen_opt.noise, "Gaussian noise standard deviation")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--output-dir", gen_opt.output_dir, "Output directory");

  FitOptions fit_opt;
  FitParams& params = fit_opt.info.params;
  auto* fitcmd = app.add_subcommand("fit", "Fit a principal graph to a CSV point cloud");
  fitcmd->add_option("--input", fit_opt.input, "CSV file, one point per row")->required();
  fitcmd->add_option("--output-dir", fit_opt.output_dir,
                     "Result bundle directory (default: <input dir>/result)");
  fitcmd->add_option("--structure", fit_opt.structure, "tree or l1")
      ->check(CLI::IsMember({"tree", "l1"}));
  fitcmd->add_option("--sigma", params.sigma, "Assignment bandwidth");
  fitcmd->add_option("--gamma", params.gamma, "Data-fit weight");
  fitcmd->add_option("--lambda", params.lambda, "l1 reconstruction weight");
  fitcmd->add_option("--nn", params.nn, "Candidate-edge neighbourhood size");
  fitcmd->add_option("--landmarks", fit_opt.info.landmarks,
                     "Fit K k-means landmarks instead of all points");
  fitcmd->add_option("--tol", params.tol, "Relative objective change to stop");
  fitcmd->add_option("--max-iters", params.max_iters, "Iteration cap");
  fitcmd->add_option("--seed", params.seed, "Seed for k-means initialisation");
  fitcmd->add_flag("--standardize", fit_opt.info.standardize,
                   "Zero-mean unit-variance dimensions first");
  fitcmd->add_flag("--kernel", fit_opt.info.kernel, "Use heat-kernel features");
  fitcmd->add_option("--pca-energy", fit_opt.info.pca_energy,
                     "Keep this fraction of variance with PCA (0 = off)");
  fitcmd->add_flag("--maxabs", fit_opt.info.maxabs,
                   "Rescale each dimension by its max absolute value");

  std::string check_dir;
  auto* check = app.add_subcommand("check", "Validate a result bundle");
  check->add_option("dir", check_dir, "Result bundle directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return do_gen(gen_opt, out);
    if (*fitcmd) return do_fit(fit_opt, out);
    return do_check(check_dir, out);
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace pgraph::cli
