#include "radloc/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace radloc {

void validate(const SolverConfig& cfg) {
  if (!(cfg.mu > 0.0) || !std::isfinite(cfg.mu)) {
    throw std::invalid_argument("solver step size must be finite and positive");
  }
  if (cfg.max_iters < 1) {
    throw std::invalid_argument("solver iteration cap must be at least 1");
  }
  if (!(cfg.grad_tol > 0.0) || !std::isfinite(cfg.grad_tol)) {
    throw std::invalid_argument("solver gradient tolerance must be finite and positive");
  }
  if (!is_finite(cfg.initial)) {
    throw std::invalid_argument("solver initial estimate must be finite");
  }
}

double default_grad_tol(const Quadratic2& q) { return 1e-8 * (1.0 + norm(q.rhs)); }

double auto_step(const Quadratic2& q, double safety) {
  if (!(safety > 0.0) || !(safety <= 1.0)) {
    throw std::invalid_argument("auto_step safety factor must lie in (0, 1]");
  }
  const double lips = lipschitz_bound(q);
  if (!(lips > 0.0)) {
    throw DegenerateCost("cannot pick a step size: largest Hessian eigenvalue is " +
                         std::to_string(lips));
  }
  return safety * 2.0 / lips;
}

Point2 solve_direct(const Quadratic2& q) {
  const double tr = q.hessian.trace();
  const double det = q.hessian.det();
  if (!(det > 1e-12 * tr * tr)) {
    throw CollinearAnchors("quadratic cost is singular (collinear anchors): det=" +
                           std::to_string(det) + ", trace=" + std::to_string(tr));
  }
  const Point2 b = q.rhs;
  return {(q.hessian.yy * b.x - q.hessian.xy * b.y) / det,
          (q.hessian.xx * b.y - q.hessian.xy * b.x) / det};
}

}  // namespace radloc
