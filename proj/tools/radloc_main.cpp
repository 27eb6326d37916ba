// Command-line front end: solve single scenarios, print radical axes, rerun
// the built-in spurious-point comparison, and drive Monte-Carlo noise sweeps.
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radloc/config.hpp"
#include "radloc/costs.hpp"
#include "radloc/csv.hpp"
#include "radloc/errors.hpp"
#include "radloc/solver.hpp"
#include "radloc/sweep.hpp"
#include "radloc/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace radloc;

std::string point_str(Point2 p) {
  return format_double(p.x) + " " + format_double(p.y);
}

Point2 anchors_centroid(const std::vector<Point2>& anchors) {
  Point2 sum;
  for (const Point2& a : anchors) sum += a;
  return (1.0 / static_cast<double>(anchors.size())) * sum;
}

fs::path ensure_directory(const std::string& dir) {
  const fs::path path(dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) {
    throw IoError("cannot create output directory " + path.string() + ": " + ec.message());
  }
  return path;
}

void print_decimation_note(const SolveResult& run) {
  if (run.iterations > kTrajectoryDenseLimit) {
    std::cout << "trajectory decimation: every iteration up to " << kTrajectoryDenseLimit
              << ", every " << kTrajectoryStride << "th after\n";
  }
}

void print_run(const std::string& name, const SolveResult& run) {
  std::cout << name << " estimate: " << point_str(run.estimate) << "\n"
            << name << " iterations: " << run.iterations
            << (run.converged ? " (converged)" : " (iteration cap reached)") << "\n";
}

struct SolveArgs {
  std::string scenario_path;
  std::string algorithm = "convex";
  double mu = 1e-3;
  bool auto_step_flag = false;
  std::int64_t max_iters = 200000;
  std::vector<double> initial;
  std::string out_path;
};

int run_solve(const SolveArgs& args) {
  const ScenarioFile sf = load_scenario(args.scenario_path);
  const ConvexCost cost = convex_cost(sf.scenario);
  const Quadratic2 q = assemble_quadratic(cost);

  if (args.algorithm == "direct") {
    const Point2 estimate = solve_direct(q);
    std::cout << "estimate: " << point_str(estimate) << "\n";
    return 0;
  }
  if (args.auto_step_flag && args.algorithm == "baseline") {
    throw std::invalid_argument("--auto-step applies to the convex cost only");
  }

  SolverConfig scfg;
  scfg.mu = args.auto_step_flag ? auto_step(q) : args.mu;
  scfg.max_iters = args.max_iters;
  scfg.grad_tol = default_grad_tol(q);
  scfg.initial = anchors_centroid(sf.scenario.anchors);
  if (sf.initial) scfg.initial = *sf.initial;
  if (args.initial.size() == 2) scfg.initial = {args.initial[0], args.initial[1]};
  scfg.record_trajectory = !args.out_path.empty();

  const SolveResult run = args.algorithm == "baseline"
                              ? descend(baseline_cost(sf.scenario), scfg)
                              : descend(cost, scfg);
  std::cout << "estimate: " << point_str(run.estimate) << "\n"
            << "iterations: " << run.iterations << "\n"
            << "converged: " << (run.converged ? "yes" : "no") << "\n"
            << "final cost: " << format_double(run.final_cost) << "\n"
            << "step size: " << format_double(scfg.mu) << "\n";
  if (!args.out_path.empty()) {
    write_trajectory_csv(args.out_path, run.trajectory);
    std::cout << "wrote " << args.out_path << "\n";
    print_decimation_note(run);
  }
  return 0;
}

int run_axes(const std::string& scenario_path) {
  const ScenarioFile sf = load_scenario(scenario_path);
  const std::vector<RadicalAxis> axes = sequential_axes(sf.scenario);
  for (std::size_t i = 0; i < axes.size(); ++i) {
    std::cout << "axis " << i << ": foot " << point_str(axes[i].foot) << ", normal "
              << point_str(axes[i].direction) << "\n";
  }
  const Quadratic2 q = assemble_quadratic(convex_cost(axes));
  std::cout << "gradient Lipschitz bound: " << format_double(lipschitz_bound(q)) << "\n"
            << "stable step sizes: below " << format_double(2.0 / lipschitz_bound(q)) << "\n";
  return 0;
}

int run_repro_spurious(const std::string& out_dir, double mu, std::int64_t max_iters) {
  const SpuriousRepro repro = run_spurious_repro(mu, max_iters);
  const fs::path dir = ensure_directory(out_dir);

  const fs::path convex_path = dir / "spurious_convex_trajectory.csv";
  const fs::path baseline_path = dir / "spurious_baseline_trajectory.csv";
  const fs::path records_path = dir / "spurious_records.csv";
  write_trajectory_csv(convex_path, repro.convex_run.trajectory);
  write_trajectory_csv(baseline_path, repro.baseline_run.trajectory);
  write_records_csv(records_path, {repro.convex, repro.baseline});

  print_run("convex", repro.convex_run);
  print_run("baseline", repro.baseline_run);
  std::cout << "wrote " << convex_path.string() << "\n"
            << "wrote " << baseline_path.string() << "\n"
            << "wrote " << records_path.string() << "\n";
  print_decimation_note(repro.convex_run);
  return 0;
}

void print_table(const std::vector<AggregateRow>& table) {
  std::cout << "sigma_db,algorithm,class,mean_sq_error,trial_count\n";
  for (const AggregateRow& row : table) {
    std::cout << format_double(row.sigma_db) << ',' << to_string(row.algorithm) << ','
              << to_string(row.target_class) << ',' << format_double(row.mean_sq_error) << ','
              << row.trial_count << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Range-based source localization via radical axes"};
  app.set_version_flag("--version",
                       std::string("radloc ") + kVersion + " (schema " + kSchemaVersion + ")");
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Estimate the source position for one scenario file");
  solve_cmd->add_option("--scenario", solve_args.scenario_path, "Scenario JSON file")
      ->required();
  solve_cmd->add_option("--algorithm", solve_args.algorithm, "convex | baseline | direct")
      ->check(CLI::IsMember({"convex", "baseline", "direct"}));
  solve_cmd->add_option("--mu", solve_args.mu, "Gradient step size");
  solve_cmd->add_flag("--auto-step", solve_args.auto_step_flag,
                      "Derive the step size from the cost curvature bound");
  solve_cmd->add_option("--max-iters", solve_args.max_iters, "Iteration cap");
  solve_cmd->add_option("--initial", solve_args.initial, "Initial guess (two numbers: x y)")
      ->expected(2);
  solve_cmd->add_option("--out", solve_args.out_path, "Write the iterate trajectory CSV here");

  std::string axes_scenario;
  CLI::App* axes_cmd =
      app.add_subcommand("axes", "Print the radical axes of a scenario (debugging aid)");
  axes_cmd->add_option("--scenario", axes_scenario, "Scenario JSON file")->required();

  CLI::App* repro_cmd = app.add_subcommand("repro", "Re-run built-in experiments");
  repro_cmd->require_subcommand(1);
  std::string repro_out = ".";
  double repro_mu = 1e-3;
  std::int64_t repro_max_iters = 200000;
  CLI::App* spurious_cmd = repro_cmd->add_subcommand(
      "spurious", "Noise-free comparison where the baseline stalls away from the source");
  spurious_cmd->add_option("--out", repro_out, "Output directory for CSV files");
  spurious_cmd->add_option("--mu", repro_mu, "Gradient step size");
  spurious_cmd->add_option("--max-iters", repro_max_iters, "Iteration cap");

  std::string sweep_config_path;
  std::string sweep_out = ".";
  std::uint64_t sweep_seed = 0;
  double sweep_mu = 1e-3;
  std::int64_t sweep_max_iters = 200000;
  int sweep_trials = 0;
  int sweep_threads = -1;
  bool sweep_auto_step = false;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Monte-Carlo noise sweep comparing the estimators");
  sweep_cmd->add_option("--config", sweep_config_path, "Sweep config JSON file");
  sweep_cmd->add_option("--out", sweep_out, "Output directory for CSV files");
  CLI::Option* seed_opt = sweep_cmd->add_option("--seed", sweep_seed, "Master seed override");
  CLI::Option* mu_opt = sweep_cmd->add_option("--mu", sweep_mu, "Step size override");
  CLI::Option* iters_opt =
      sweep_cmd->add_option("--max-iters", sweep_max_iters, "Iteration cap override");
  CLI::Option* trials_opt =
      sweep_cmd->add_option("--trials", sweep_trials, "Trials per noise level override");
  CLI::Option* threads_opt =
      sweep_cmd->add_option("--threads", sweep_threads, "Worker threads (0 = all cores)");
  CLI::Option* auto_opt = sweep_cmd->add_flag("--auto-step", sweep_auto_step,
                                              "Use the curvature-derived step per trial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve_cmd) {
      return run_solve(solve_args);
    }
    if (*axes_cmd) {
      return run_axes(axes_scenario);
    }
    if (*repro_cmd && *spurious_cmd) {
      return run_repro_spurious(repro_out, repro_mu, repro_max_iters);
    }
    if (*sweep_cmd) {
      SweepConfig cfg;
      if (!sweep_config_path.empty()) {
        cfg = load_sweep_config(sweep_config_path);
      }
      if (seed_opt->count() > 0) cfg.master_seed = sweep_seed;
      if (mu_opt->count() > 0) cfg.mu = sweep_mu;
      if (iters_opt->count() > 0) cfg.max_iters = sweep_max_iters;
      if (trials_opt->count() > 0) cfg.trials = sweep_trials;
      if (threads_opt->count() > 0) cfg.threads = sweep_threads;
      if (auto_opt->count() > 0) cfg.use_auto_step = true;

      const SweepResult result = run_sweep(cfg);
      const fs::path dir = ensure_directory(sweep_out);
      const fs::path records_path = dir / "sweep_records.csv";
      const fs::path table_path = dir / "sweep_summary.csv";
      write_records_csv(records_path, result.records);
      write_table_csv(table_path, result.table);
      print_table(result.table);
      std::cout << "wrote " << records_path.string() << "\n"
                << "wrote " << table_path.string() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
