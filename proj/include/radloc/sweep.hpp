#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radloc/geometry.hpp"
#include "radloc/measurement.hpp"
#include "radloc/rng.hpp"
#include "radloc/scenario.hpp"
#include "radloc/solver.hpp"

namespace radloc {

// Which estimator produced a record.
enum class Algorithm { kConvex, kBaseline };

// Behaviour class of a trial's target: "guaranteed-like" when the baseline,
// fed exact ranges from the trial's own initial guess, reaches the true
// position; "unguaranteed" otherwise. An explicit region (below) can replace
// that empirical probe.
enum class TargetClass { kGuaranteedLike, kUnguaranteed };

std::string to_string(Algorithm a);
std::string to_string(TargetClass c);

// Axis-aligned sampling box for true positions and initial guesses.
struct Box {
  Point2 lo{-5.0, -5.0};
  Point2 hi{5.0, 5.0};

  Point2 sample(SplitMix64& rng) const;
};

// Rotated ellipse in absolute coordinates. When configured on a sweep it
// replaces the empirical probe: targets inside are classified
// guaranteed-like, targets outside unguaranteed.
struct Ellipse {
  Point2 center;
  double semi_major = 1.0;
  double semi_minor = 1.0;
  double rotation_rad = 0.0;

  bool contains(Point2 p) const;
};

// Three anchors whose squared-range cost has a second, locally stable
// stationary point at (3, 3) while the true source sits at the origin.
Scenario spurious_scenario();

// Four-anchor layout used by the default noise sweep.
std::vector<Point2> default_sweep_anchors();

// Full description of a Monte-Carlo sweep over shadowing noise levels.
struct SweepConfig {
  std::vector<Point2> anchors = default_sweep_anchors();
  RssModel rss{};                    // signal model used to corrupt ranges
  std::vector<double> sigma_grid{0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  int trials = 1000;                 // trials per noise level
  std::uint64_t master_seed = 0;     // every random stream derives from this
  bool run_convex = true;
  bool run_baseline = true;
  double mu = 1e-3;
  bool use_auto_step = false;        // convex solver only; baseline keeps mu
  double auto_step_safety = 0.9;
  std::int64_t max_iters = 200000;
  int samples_per_estimate = 1;      // RSS readings averaged per range
  int threads = 0;                   // 0 = hardware concurrency
  Box sample_box{};
  std::optional<Ellipse> guaranteed_region;  // overrides the empirical probe
};

void validate(const SweepConfig& cfg);

// One solver run within a sweep. Failed trials carry the error name in
// `failure` and NaN estimate / squared error; they never enter the means.
struct TrialRecord {
  std::int64_t trial_id = 0;
  double sigma_db = 0.0;
  Algorithm algorithm = Algorithm::kConvex;
  TargetClass target_class = TargetClass::kGuaranteedLike;
  Point2 true_source;
  Point2 initial;
  Point2 estimate;
  double sq_error = 0.0;
  std::int64_t iterations = 0;
  bool converged = false;
  bool spurious = false;          // stopped on a stationary point away from
                                  // the true source (baseline runs only)
  double mu = 0.0;                // step size actually used
  std::uint64_t seed = 0;         // sub-seed that generated this trial
  std::string failure;            // empty on success, error name otherwise
};

// Mean squared error for one (noise level, algorithm, class) cell.
struct AggregateRow {
  double sigma_db = 0.0;
  Algorithm algorithm = Algorithm::kConvex;
  TargetClass target_class = TargetClass::kGuaranteedLike;
  double mean_sq_error = 0.0;
  std::int64_t trial_count = 0;   // rows entering the mean (failures excluded)
};

struct SweepResult {
  std::vector<TrialRecord> records;
  std::vector<AggregateRow> table;
};

// Side-by-side noise-free run of both solvers on spurious_scenario() from the
// initial guess (3, 2), with full trajectories for plotting.
struct SpuriousRepro {
  TrialRecord convex;
  TrialRecord baseline;
  SolveResult convex_run;
  SolveResult baseline_run;
};

SpuriousRepro run_spurious_repro(double mu = 1e-3, std::int64_t max_iters = 200000);

// Runs the Monte-Carlo sweep. Deterministic for a given config: records come
// back in trial order with per-trial sub-seeds, so neither thread count nor
// scheduling affects any output byte.
SweepResult run_sweep(const SweepConfig& cfg);

// Groups records by (noise level, algorithm, class) in deterministic order
// and averages squared errors over non-failed trials. Cells without any
// usable trial are omitted.
std::vector<AggregateRow> aggregate(const std::vector<TrialRecord>& records,
                                    const std::vector<double>& sigma_grid);

}  // namespace radloc
