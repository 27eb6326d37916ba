#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "radloc/costs.hpp"
#include "radloc/errors.hpp"
#include "radloc/geometry.hpp"
#include "radloc/scenario.hpp"
#include "radloc/solver.hpp"
#include "radloc/sweep.hpp"

#include "oracles.hpp"

using namespace radloc;

namespace {

SolverConfig from_32() {
  SolverConfig cfg;
  cfg.mu = 1e-3;
  cfg.initial = {3.0, 2.0};
  return cfg;
}

}  // namespace

TEST_CASE("convex descent reaches the source of the worked scenario") {
  const ConvexCost cost = convex_cost(spurious_scenario());
  const SolveResult run = descend(cost, from_32());
  CHECK(run.converged);
  CHECK(distance(run.estimate, {0.0, 0.0}) <= 1e-3);
  CHECK(norm(cost.gradient(run.estimate)) <= from_32().grad_tol);
  CHECK(run.final_cost == doctest::Approx(cost.value(run.estimate)));
}

TEST_CASE("baseline descent from the same start stalls at (3,3)") {
  const SolveResult run = descend(baseline_cost(spurious_scenario()), from_32());
  CHECK(run.converged);
  CHECK(distance(run.estimate, {3.0, 3.0}) <= 1e-3);
}

TEST_CASE("starting at the minimizer converges in zero iterations") {
  SolverConfig cfg = from_32();
  cfg.initial = {0.0, 0.0};
  const SolveResult run = descend(convex_cost(spurious_scenario()), cfg);
  CHECK(run.converged);
  CHECK(run.iterations == 0);
}

TEST_CASE("auto step size from the curvature bound") {
  const Quadratic2 worked = assemble_quadratic(convex_cost(spurious_scenario()));
  CHECK(auto_step(worked, 0.9) ==
        doctest::Approx(1.8 / (6.0 + 2.0 * std::sqrt(5.0))).epsilon(1e-12));
  CHECK(auto_step(Quadratic2{SymMat2{1.0, 0.0, 1.0}, {}}, 1.0) == doctest::Approx(2.0));

  CHECK_THROWS_AS(auto_step(Quadratic2{}, 0.9), DegenerateCost);
  CHECK_THROWS_AS(auto_step(worked, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(auto_step(worked, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(auto_step(worked, 1.5), std::invalid_argument);
}

TEST_CASE("default gradient tolerance scales with the problem") {
  Quadratic2 q;
  q.rhs = {3.0, 4.0};
  CHECK(default_grad_tol(q) == doctest::Approx(6e-8).epsilon(1e-12));
}

TEST_CASE("direct solve inverts the quadratic") {
  const Quadratic2 worked = assemble_quadratic(convex_cost(spurious_scenario()));
  CHECK(norm(solve_direct(worked)) <= 1e-12);

  Scenario collinear;
  collinear.anchors = {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
  collinear.source = Point2{0.5, 0.5};
  collinear.ranges = exact_ranges(collinear.anchors, *collinear.source);
  CHECK_THROWS_AS(solve_direct(assemble_quadratic(convex_cost(collinear))), CollinearAnchors);
}

TEST_CASE("direct solve recovers the source on noise-free scenarios") {
  SplitMix64 rng(707);
  for (int trial = 0; trial < 100; ++trial) {
    const Scenario s = testutil::random_scenario(rng);
    CHECK(distance(solve_direct(assemble_quadratic(convex_cost(s))), *s.source) <= 1e-9);
  }
}

TEST_CASE("auto-step descent never increases the convex cost") {
  SplitMix64 rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const Scenario s = testutil::random_scenario(rng);
    const ConvexCost cost = convex_cost(s);
    const Quadratic2 q = assemble_quadratic(cost);
    SolverConfig cfg;
    cfg.mu = auto_step(q, 0.9);
    cfg.grad_tol = default_grad_tol(q);
    cfg.initial = {rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0)};
    cfg.record_trajectory = true;
    const SolveResult run = descend(cost, cfg);
    REQUIRE(run.iterations < kTrajectoryDenseLimit);  // trajectory is every iterate
    double prev = cost.value(run.trajectory.front().position);
    for (const TrajectorySample& sample : run.trajectory) {
      const double value = cost.value(sample.position);
      CHECK(value <= prev + 1e-12 * (1.0 + prev));
      prev = value;
    }
  }
}

TEST_CASE("descent agrees with the direct oracle") {
  SplitMix64 rng(909);
  for (int trial = 0; trial < 100; ++trial) {
    const Scenario s = testutil::random_scenario(rng);
    const ConvexCost cost = convex_cost(s);
    const Quadratic2 q = assemble_quadratic(cost);
    SolverConfig cfg;
    cfg.mu = auto_step(q, 0.9);
    cfg.grad_tol = 1e-10;
    cfg.initial = {rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0)};
    const SolveResult run = descend(cost, cfg);
    CHECK(run.converged);
    CHECK(distance(run.estimate, solve_direct(q)) <= 1e-6);
  }
}

TEST_CASE("convergence from far-away starting points") {
  SplitMix64 rng(1010);
  for (int trial = 0; trial < 50; ++trial) {
    const Scenario s = testutil::random_scenario(rng);
    const ConvexCost cost = convex_cost(s);
    const Quadratic2 q = assemble_quadratic(cost);
    Point2 centroid{};
    for (const Point2& a : s.anchors) centroid += a;
    centroid = (1.0 / static_cast<double>(s.anchors.size())) * centroid;
    SolverConfig cfg;
    cfg.mu = auto_step(q, 0.9);
    // Tolerance tight enough that the position error (~ grad_tol / lambda_min)
    // sits far below the 1e-6 target.
    cfg.grad_tol = 1e-8 * eigenvalues(q.hessian).first;
    cfg.initial = centroid + Point2{rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
    const SolveResult run = descend(cost, cfg);
    CHECK(run.converged);
    CHECK(distance(run.estimate, *s.source) <= 1e-6);
  }
}

TEST_CASE("descent is deterministic") {
  const ConvexCost cost = convex_cost(spurious_scenario());
  const SolveResult a = descend(cost, from_32());
  const SolveResult b = descend(cost, from_32());
  CHECK(a.estimate.x == b.estimate.x);
  CHECK(a.estimate.y == b.estimate.y);
  CHECK(a.iterations == b.iterations);
  CHECK(a.final_cost == b.final_cost);
}

TEST_CASE("oversized steps on the quartic baseline blow up as NonFinite") {
  SolverConfig cfg = from_32();
  cfg.mu = 1.0;
  CHECK_THROWS_AS(descend(baseline_cost(spurious_scenario()), cfg), NonFinite);
}

TEST_CASE("iteration cap is respected and reported") {
  SolverConfig cfg = from_32();
  cfg.max_iters = 5;
  const SolveResult run = descend(convex_cost(spurious_scenario()), cfg);
  CHECK_FALSE(run.converged);
  CHECK(run.iterations == 5);
}

TEST_CASE("solver config validation") {
  const ConvexCost cost = convex_cost(spurious_scenario());
  SolverConfig cfg;
  cfg.mu = 0.0;
  CHECK_THROWS_AS(descend(cost, cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.grad_tol = 0.0;
  CHECK_THROWS_AS(descend(cost, cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.max_iters = 0;
  CHECK_THROWS_AS(descend(cost, cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.initial = {std::nan(""), 0.0};
  CHECK_THROWS_AS(descend(cost, cfg), std::invalid_argument);
}

TEST_CASE("trajectory is dense early and decimated late") {
  SolverConfig cfg = from_32();
  cfg.record_trajectory = true;
  const SolveResult run = descend(convex_cost(spurious_scenario()), cfg);
  REQUIRE(run.converged);
  REQUIRE(run.iterations > kTrajectoryDenseLimit);  // exercises the decimation

  const std::vector<TrajectorySample>& tr = run.trajectory;
  REQUIRE_FALSE(tr.empty());
  CHECK(tr.front().iteration == 0);
  CHECK(tr.front().position.x == 3.0);
  CHECK(tr.front().position.y == 2.0);
  CHECK(tr.back().iteration == run.iterations);
  for (std::size_t i = 0; i < tr.size(); ++i) {
    if (tr[i].iteration <= kTrajectoryDenseLimit) {
      CHECK(tr[i].iteration == static_cast<std::int64_t>(i));
    } else if (i + 1 < tr.size()) {
      CHECK(tr[i].iteration % kTrajectoryStride == 0);
    }
  }
}
