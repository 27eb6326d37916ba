#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "radloc/costs.hpp"
#include "radloc/errors.hpp"
#include "radloc/geometry.hpp"

namespace radloc {

template <class C>
concept GradientCost = requires(const C& c, Point2 y) {
  { c.value(y) } -> std::convertible_to<double>;
  { c.gradient(y) } -> std::convertible_to<Point2>;
};

struct SolverConfig {
  double mu = 1e-3;                // fixed step size, > 0
  std::int64_t max_iters = 200000;
  double grad_tol = 1e-8;          // stop once ||gradient|| <= grad_tol
  Point2 initial{};
  bool record_trajectory = false;
};

void validate(const SolverConfig& cfg);

// Trajectory samples carry the true iteration index, so the decimation
// applied after kTrajectoryDenseLimit stays explicit in the data.
struct TrajectorySample {
  std::int64_t iteration = 0;
  Point2 position{};
};

inline constexpr std::int64_t kTrajectoryDenseLimit = 10000;
inline constexpr std::int64_t kTrajectoryStride = 10;

struct SolveResult {
  Point2 estimate{};
  std::int64_t iterations = 0;
  bool converged = false;
  std::vector<TrajectorySample> trajectory;  // empty unless requested
  double final_cost = 0.0;
};

// Relative stopping tolerance, 1e-8 * (1 + ||b||), so large-coordinate
// scenarios still terminate.
double default_grad_tol(const Quadratic2& q);

// safety * 2 / lambda_max(H); any step below 2 / lambda_max gives monotone
// descent on the quadratic cost. Throws DegenerateCost when lambda_max <= 0.
double auto_step(const Quadratic2& q, double safety = 0.9);

// Closed-form minimizer H^-1 b. Throws CollinearAnchors when H is singular
// (det <= 1e-12 * trace^2): the minimizer set is then a whole line.
Point2 solve_direct(const Quadratic2& q);

// Fixed-step gradient descent y[k+1] = y[k] - mu * grad(y[k]). Runs until
// ||grad|| <= grad_tol or max_iters steps were taken. Deterministic given
// its inputs. Throws NonFinite when an iterate or gradient leaves the
// finite range, which on the baseline cost diagnoses a step size too large
// for its quartic growth.
template <GradientCost C>
SolveResult descend(const C& cost, const SolverConfig& cfg) {
  validate(cfg);
  SolveResult out;
  Point2 y = cfg.initial;
  std::int64_t k = 0;
  for (;; ++k) {
    if (!is_finite(y)) {
      throw NonFinite("iterate left the finite range at iteration " + std::to_string(k) +
                      " (step size too large?)");
    }
    if (cfg.record_trajectory && (k <= kTrajectoryDenseLimit || k % kTrajectoryStride == 0)) {
      out.trajectory.push_back({k, y});
    }
    const Point2 g = cost.gradient(y);
    if (!is_finite(g)) {
      throw NonFinite("gradient non-finite at iteration " + std::to_string(k));
    }
    if (norm(g) <= cfg.grad_tol) {
      out.converged = true;
      break;
    }
    if (k >= cfg.max_iters) {
      break;
    }
    y -= cfg.mu * g;
  }
  if (cfg.record_trajectory &&
      (out.trajectory.empty() || out.trajectory.back().iteration != k)) {
    out.trajectory.push_back({k, y});
  }
  out.estimate = y;
  out.iterations = k;
  out.final_cost = cost.value(y);
  return out;
}

}  // namespace radloc
