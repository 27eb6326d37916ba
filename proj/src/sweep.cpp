#include "radloc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "radloc/costs.hpp"
#include "radloc/errors.hpp"

namespace radloc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Harness policy for "landed on the target": converged in gradient norm and
// within 10x the gradient tolerance of the target position.
bool reached_target(const SolveResult& run, Point2 target, double grad_tol) {
  return run.converged && distance(run.estimate, target) <= 10.0 * grad_tol;
}

double tolerance_for(const Scenario& s) {
  return default_grad_tol(assemble_quadratic(convex_cost(s)));
}

TrialRecord blank_record(std::int64_t trial_id, double sigma, Algorithm alg, TargetClass cls,
                         Point2 truth, Point2 init, double mu, std::uint64_t seed) {
  TrialRecord rec;
  rec.trial_id = trial_id;
  rec.sigma_db = sigma;
  rec.algorithm = alg;
  rec.target_class = cls;
  rec.true_source = truth;
  rec.initial = init;
  rec.estimate = {kNaN, kNaN};
  rec.sq_error = kNaN;
  rec.mu = mu;
  rec.seed = seed;
  return rec;
}

void fill_from_run(TrialRecord& rec, const SolveResult& run, double grad_tol) {
  rec.estimate = run.estimate;
  rec.sq_error = norm_sq(run.estimate - rec.true_source);
  rec.iterations = run.iterations;
  rec.converged = run.converged;
  if (rec.algorithm == Algorithm::kBaseline) {
    rec.spurious = run.converged && !reached_target(run, rec.true_source, grad_tol);
  }
}

// Executes one trial (one sampled target/initial pair at one noise level) and
// writes its records into the preassigned slots. Per-trial errors land in the
// failure field instead of aborting the sweep.
void run_trial(const SweepConfig& cfg, std::size_t task, TrialRecord* slot) {
  const std::size_t trials = static_cast<std::size_t>(cfg.trials);
  const double sigma = cfg.sigma_grid[task / trials];
  const auto trial_id = static_cast<std::int64_t>(task);
  const std::uint64_t sub_seed = cfg.master_seed ^ static_cast<std::uint64_t>(task);

  SplitMix64 rng(sub_seed);
  const Point2 truth = cfg.sample_box.sample(rng);
  const Point2 init = cfg.sample_box.sample(rng);
  const std::uint64_t range_seed = rng.next();

  Scenario exact;
  exact.anchors = cfg.anchors;
  exact.source = truth;
  exact.ranges = exact_ranges(cfg.anchors, truth);
  const double exact_tol = tolerance_for(exact);

  SolverConfig base_cfg;
  base_cfg.mu = cfg.mu;
  base_cfg.max_iters = cfg.max_iters;
  base_cfg.grad_tol = exact_tol;
  base_cfg.initial = init;

  // Classification: explicit region if configured, otherwise a noise-free
  // baseline probe from this trial's own initial guess.
  TargetClass cls = TargetClass::kUnguaranteed;
  std::optional<SolveResult> probe;
  std::string probe_failure;
  if (cfg.guaranteed_region) {
    cls = cfg.guaranteed_region->contains(truth) ? TargetClass::kGuaranteedLike
                                                 : TargetClass::kUnguaranteed;
  } else {
    try {
      probe = descend(baseline_cost(exact), base_cfg);
      cls = reached_target(*probe, truth, exact_tol) ? TargetClass::kGuaranteedLike
                                                     : TargetClass::kUnguaranteed;
    } catch (const Error& e) {
      probe_failure = e.name();  // diverged: certainly not guaranteed-like
    }
  }

  TrialRecord* convex_rec = cfg.run_convex ? slot : nullptr;
  TrialRecord* baseline_rec = cfg.run_baseline ? slot + (cfg.run_convex ? 1 : 0) : nullptr;
  if (convex_rec) {
    *convex_rec = blank_record(trial_id, sigma, Algorithm::kConvex, cls, truth, init, cfg.mu,
                               sub_seed);
  }
  if (baseline_rec) {
    *baseline_rec = blank_record(trial_id, sigma, Algorithm::kBaseline, cls, truth, init,
                                 cfg.mu, sub_seed);
  }

  // Range synthesis; sigma 0 reproduces the exact distances.
  Scenario noisy = exact;
  try {
    ShadowingSpec shadow;
    shadow.sigma_db = sigma;
    shadow.seed = range_seed;
    shadow.samples_per_estimate = cfg.samples_per_estimate;
    noisy.ranges = noisy_ranges(cfg.rss, shadow, truth, cfg.anchors);
  } catch (const Error& e) {
    if (convex_rec) convex_rec->failure = e.name();
    if (baseline_rec) baseline_rec->failure = e.name();
    return;
  }

  if (convex_rec) {
    try {
      const ConvexCost cost = convex_cost(noisy);
      const Quadratic2 q = assemble_quadratic(cost);
      SolverConfig scfg = base_cfg;
      scfg.grad_tol = default_grad_tol(q);
      if (cfg.use_auto_step) {
        scfg.mu = auto_step(q, cfg.auto_step_safety);
      }
      convex_rec->mu = scfg.mu;
      fill_from_run(*convex_rec, descend(cost, scfg), scfg.grad_tol);
    } catch (const Error& e) {
      convex_rec->failure = e.name();
    }
  }

  if (baseline_rec) {
    if (sigma == 0.0 && probe) {
      // The probe already ran the baseline on exact ranges with this exact
      // configuration; reuse it.
      fill_from_run(*baseline_rec, *probe, exact_tol);
    } else if (sigma == 0.0 && !cfg.guaranteed_region) {
      baseline_rec->failure = probe_failure;
    } else {
      try {
        SolverConfig scfg = base_cfg;
        scfg.grad_tol = tolerance_for(noisy);
        fill_from_run(*baseline_rec, descend(baseline_cost(noisy), scfg), scfg.grad_tol);
      } catch (const Error& e) {
        baseline_rec->failure = e.name();
      }
    }
  }
}

}  // namespace

std::string to_string(Algorithm a) {
  return a == Algorithm::kConvex ? "convex" : "baseline";
}

std::string to_string(TargetClass c) {
  return c == TargetClass::kGuaranteedLike ? "guaranteed-like" : "unguaranteed";
}

Point2 Box::sample(SplitMix64& rng) const {
  const double x = rng.uniform(lo.x, hi.x);
  const double y = rng.uniform(lo.y, hi.y);
  return {x, y};
}

bool Ellipse::contains(Point2 p) const {
  const Point2 rel = p - center;
  const double c = std::cos(rotation_rad);
  const double s = std::sin(rotation_rad);
  const double u = (c * rel.x + s * rel.y) / semi_major;
  const double v = (-s * rel.x + c * rel.y) / semi_minor;
  return u * u + v * v <= 1.0;
}

Scenario spurious_scenario() {
  Scenario s;
  s.anchors = {{1.0, 1.0}, {1.0, 3.0}, {3.0, 1.0}};
  s.source = Point2{0.0, 0.0};
  s.ranges = {std::sqrt(2.0), std::sqrt(10.0), std::sqrt(10.0)};
  s.label = "spurious-demo";
  return s;
}

std::vector<Point2> default_sweep_anchors() {
  return {{-2.0, -1.0}, {-1.0, -3.0}, {-1.0, 1.0}, {1.0, 0.0}};
}

void validate(const SweepConfig& cfg) {
  if (cfg.anchors.size() < 3) {
    throw std::invalid_argument("sweep anchors: 2-D localization needs N > 2");
  }
  for (const Point2& a : cfg.anchors) {
    if (!is_finite(a)) throw std::invalid_argument("sweep anchors must be finite");
  }
  for (std::size_t i = 0; i + 1 < cfg.anchors.size(); ++i) {
    if (cfg.anchors[i] == cfg.anchors[i + 1]) {
      throw std::invalid_argument("consecutive sweep anchors coincide at index " +
                                  std::to_string(i));
    }
  }
  if (!(cfg.rss.source_strength > 0.0) || !std::isfinite(cfg.rss.source_strength)) {
    throw std::invalid_argument("RSS source strength must be finite and positive");
  }
  if (!(cfg.rss.path_loss_exponent > 0.0) || !std::isfinite(cfg.rss.path_loss_exponent)) {
    throw std::invalid_argument("RSS path loss exponent must be finite and positive");
  }
  if (cfg.sigma_grid.empty()) {
    throw std::invalid_argument("sigma grid must not be empty");
  }
  for (double s : cfg.sigma_grid) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw std::invalid_argument("sigma grid entries must be finite and non-negative");
    }
  }
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!cfg.run_convex && !cfg.run_baseline) {
    throw std::invalid_argument("at least one algorithm must be enabled");
  }
  if (!(cfg.mu > 0.0) || !std::isfinite(cfg.mu)) {
    throw std::invalid_argument("step size must be finite and positive");
  }
  if (!(cfg.auto_step_safety > 0.0) || !(cfg.auto_step_safety <= 1.0)) {
    throw std::invalid_argument("auto step safety factor must lie in (0, 1]");
  }
  if (cfg.max_iters < 1) throw std::invalid_argument("max iterations must be at least 1");
  if (cfg.samples_per_estimate < 1) {
    throw std::invalid_argument("samples per estimate must be at least 1");
  }
  if (cfg.threads < 0) throw std::invalid_argument("thread count must be non-negative");
  if (!is_finite(cfg.sample_box.lo) || !is_finite(cfg.sample_box.hi) ||
      !(cfg.sample_box.lo.x < cfg.sample_box.hi.x) ||
      !(cfg.sample_box.lo.y < cfg.sample_box.hi.y)) {
    throw std::invalid_argument("sample box must be finite with lo < hi in both coordinates");
  }
  if (cfg.guaranteed_region) {
    const Ellipse& e = *cfg.guaranteed_region;
    if (!is_finite(e.center) || !(e.semi_major > 0.0) || !(e.semi_minor > 0.0) ||
        !std::isfinite(e.semi_major) || !std::isfinite(e.semi_minor) ||
        !std::isfinite(e.rotation_rad)) {
      throw std::invalid_argument("guaranteed region ellipse must be finite with positive axes");
    }
  }
}

SpuriousRepro run_spurious_repro(double mu, std::int64_t max_iters) {
  const Scenario sc = spurious_scenario();
  const Point2 truth = *sc.source;
  const Point2 init{3.0, 2.0};

  const ConvexCost cost = convex_cost(sc);
  const double grad_tol = default_grad_tol(assemble_quadratic(cost));

  SolverConfig scfg;
  scfg.mu = mu;
  scfg.max_iters = max_iters;
  scfg.grad_tol = grad_tol;
  scfg.initial = init;
  scfg.record_trajectory = true;

  SpuriousRepro out;
  out.convex_run = descend(cost, scfg);
  out.baseline_run = descend(baseline_cost(sc), scfg);

  const TargetClass cls = reached_target(out.baseline_run, truth, grad_tol)
                              ? TargetClass::kGuaranteedLike
                              : TargetClass::kUnguaranteed;
  out.convex = blank_record(0, 0.0, Algorithm::kConvex, cls, truth, init, mu, 0);
  out.baseline = blank_record(0, 0.0, Algorithm::kBaseline, cls, truth, init, mu, 0);
  fill_from_run(out.convex, out.convex_run, grad_tol);
  fill_from_run(out.baseline, out.baseline_run, grad_tol);
  return out;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  const std::size_t rows_per_trial =
      (cfg.run_convex ? 1u : 0u) + (cfg.run_baseline ? 1u : 0u);
  const std::size_t total = cfg.sigma_grid.size() * static_cast<std::size_t>(cfg.trials);

  SweepResult result;
  result.records.resize(total * rows_per_trial);

  std::size_t workers = cfg.threads > 0
                            ? static_cast<std::size_t>(cfg.threads)
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, total);

  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> poisoned{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&]() {
    try {
      for (;;) {
        const std::size_t task = next_task.fetch_add(1, std::memory_order_relaxed);
        if (task >= total || poisoned.load(std::memory_order_relaxed)) return;
        run_trial(cfg, task, result.records.data() + task * rows_per_trial);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      poisoned.store(true, std::memory_order_relaxed);
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  result.table = aggregate(result.records, cfg.sigma_grid);
  return result;
}

std::vector<AggregateRow> aggregate(const std::vector<TrialRecord>& records,
                                    const std::vector<double>& sigma_grid) {
  std::vector<AggregateRow> table;
  for (double sigma : sigma_grid) {
    for (Algorithm alg : {Algorithm::kConvex, Algorithm::kBaseline}) {
      for (TargetClass cls : {TargetClass::kGuaranteedLike, TargetClass::kUnguaranteed}) {
        double sum = 0.0;
        std::int64_t count = 0;
        for (const TrialRecord& rec : records) {
          if (rec.sigma_db != sigma || rec.algorithm != alg || rec.target_class != cls) {
            continue;
          }
          if (!rec.failure.empty() || !std::isfinite(rec.sq_error)) continue;
          sum += rec.sq_error;
          ++count;
        }
        if (count == 0) continue;
        AggregateRow row;
        row.sigma_db = sigma;
        row.algorithm = alg;
        row.target_class = cls;
        row.mean_sq_error = sum / static_cast<double>(count);
        row.trial_count = count;
        table.push_back(row);
      }
    }
  }
  return table;
}

}  // namespace radloc
