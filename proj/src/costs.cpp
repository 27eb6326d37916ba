#include "radloc/costs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace radloc {

std::pair<double, double> eigenvalues(const SymMat2& m) {
  const double mean = 0.5 * (m.xx + m.yy);
  const double shift = std::hypot(0.5 * (m.xx - m.yy), m.xy);
  return {mean - shift, mean + shift};
}

double ConvexCost::value(Point2 y) const {
  double sum = 0.0;
  for (const RadicalAxis& axis : axes) {
    const double r = dot(y - axis.foot, axis.direction);
    sum += r * r;
  }
  return 0.5 * sum;
}

Point2 ConvexCost::gradient(Point2 y) const {
  Point2 g{};
  for (const RadicalAxis& axis : axes) {
    g += dot(y - axis.foot, axis.direction) * axis.direction;
  }
  return g;
}

ConvexCost convex_cost(std::vector<RadicalAxis> axes) {
  if (axes.size() < 2) {
    throw std::invalid_argument("convex cost needs at least 2 radical axes, got " +
                                std::to_string(axes.size()));
  }
  for (const RadicalAxis& axis : axes) {
    if (!is_finite(axis.foot) || !is_finite(axis.direction) || !(norm_sq(axis.direction) > 0.0)) {
      throw std::invalid_argument("radical axis with zero or non-finite direction");
    }
  }
  return ConvexCost{std::move(axes)};
}

ConvexCost convex_cost(const Scenario& s) { return convex_cost(sequential_axes(s)); }

double BaselineCost::value(Point2 y) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const double r = norm_sq(anchors[i] - y) - squared_ranges[i];
    sum += weights[i] * r * r;
  }
  return 0.5 * sum;
}

Point2 BaselineCost::gradient(Point2 y) const {
  Point2 g{};
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const double r = norm_sq(anchors[i] - y) - squared_ranges[i];
    g += (2.0 * weights[i] * r) * (y - anchors[i]);
  }
  return g;
}

BaselineCost baseline_cost(std::vector<Point2> anchors, std::vector<double> squared_ranges,
                           std::vector<double> weights) {
  if (anchors.size() < 3 || squared_ranges.size() != anchors.size() ||
      weights.size() != anchors.size()) {
    throw std::invalid_argument("baseline cost needs equal-length anchors/ranges/weights, N > 2");
  }
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (!is_finite(anchors[i])) {
      throw std::invalid_argument("baseline cost: anchor " + std::to_string(i) + " not finite");
    }
    if (!(squared_ranges[i] >= 0.0) || !std::isfinite(squared_ranges[i])) {
      throw std::invalid_argument("baseline cost: squared range " + std::to_string(i) +
                                  " must be finite and non-negative");
    }
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
      throw std::invalid_argument("baseline cost: weight " + std::to_string(i) +
                                  " must be finite and positive");
    }
  }
  return BaselineCost{std::move(anchors), std::move(squared_ranges), std::move(weights)};
}

BaselineCost baseline_cost(const Scenario& s) {
  validate(s);
  std::vector<double> sq;
  sq.reserve(s.ranges.size());
  for (double d : s.ranges) {
    sq.push_back(d * d);
  }
  return baseline_cost(s.anchors, std::move(sq), std::vector<double>(s.anchors.size(), 1.0));
}

Quadratic2 assemble_quadratic(const ConvexCost& c) {
  Quadratic2 q;
  for (const RadicalAxis& axis : c.axes) {
    const Point2 e = axis.direction;
    q.hessian.xx += e.x * e.x;
    q.hessian.xy += e.x * e.y;
    q.hessian.yy += e.y * e.y;
    q.rhs += dot(e, axis.foot) * e;
  }
  return q;
}

double lipschitz_bound(const Quadratic2& q) { return eigenvalues(q.hessian).second; }

}  // namespace radloc
