#pragma once

#include <utility>
#include <vector>

#include "radloc/geometry.hpp"
#include "radloc/scenario.hpp"

namespace radloc {

// Symmetric 2x2 matrix [[xx, xy], [xy, yy]].
struct SymMat2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  double trace() const { return xx + yy; }
  double det() const { return xx * yy - xy * xy; }
};

inline Point2 operator*(const SymMat2& m, Point2 v) {
  return {m.xx * v.x + m.xy * v.y, m.xy * v.x + m.yy * v.y};
}

// (lambda_min, lambda_max) by the closed form for symmetric 2x2 matrices.
std::pair<double, double> eigenvalues(const SymMat2& m);

// Convex localization cost over radical axes:
//   J(y) = 1/2 sum_i (dot(y - foot_i, e_i))^2.
// Directions stay unnormalized; normalizing would change the conditioning
// and with it the admissible step sizes.
struct ConvexCost {
  std::vector<RadicalAxis> axes;  // at least 2

  double value(Point2 y) const;
  Point2 gradient(Point2 y) const;
};

ConvexCost convex_cost(std::vector<RadicalAxis> axes);
ConvexCost convex_cost(const Scenario& s);  // sequential pairing

// Classical squared-range residual cost:
//   J1(y) = 1/2 sum_i w_i (||x_i - y||^2 - d_i^2)^2.
// Non-convex; kept as the comparison baseline.
struct BaselineCost {
  std::vector<Point2> anchors;
  std::vector<double> squared_ranges;
  std::vector<double> weights;

  double value(Point2 y) const;
  Point2 gradient(Point2 y) const;
};

BaselineCost baseline_cost(std::vector<Point2> anchors, std::vector<double> squared_ranges,
                           std::vector<double> weights);
BaselineCost baseline_cost(const Scenario& s);  // unit weights

// Closed form of the convex cost: grad J(y) = H y - b with
// H = sum e_i e_i^T and b = sum e_i e_i^T foot_i.
struct Quadratic2 {
  SymMat2 hessian;
  Point2 rhs;
};

Quadratic2 assemble_quadratic(const ConvexCost& c);

// lambda_max(H). A global Lipschitz constant of the gradient, since the
// cost is quadratic.
double lipschitz_bound(const Quadratic2& q);

}  // namespace radloc
