#include "radloc/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "radloc/errors.hpp"

namespace radloc {

namespace {

std::string point_str(Point2 p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

// Relative non-concentricity threshold so large-coordinate scenarios do not
// false-trigger.
double concentric_eps(const Circle& ci, const Circle& cj) {
  return 1e-12 * std::max({1.0, norm(ci.center), norm(cj.center)});
}

}  // namespace

double axis_offset(const RadicalAxis& axis, Point2 p) {
  return dot(p - axis.foot, axis.direction) / norm(axis.direction);
}

RadicalAxis radical_axis(const Circle& ci, const Circle& cj) {
  const Point2 e = cj.center - ci.center;
  const double len = norm(e);
  if (len <= concentric_eps(ci, cj)) {
    throw ConcentricCircles("radical axis undefined for concentric circles centered at " +
                            point_str(ci.center));
  }
  // Foot on the center line: c_i + a * e/|e|, a = (|e|^2 + r_i^2 - r_j^2) / (2|e|).
  const double a =
      (len * len + ci.radius * ci.radius - cj.radius * cj.radius) / (2.0 * len);
  return RadicalAxis{ci.center + (a / len) * e, e};
}

std::vector<RadicalAxis> sequential_axes(std::span<const Circle> circles) {
  if (circles.size() < 3) {
    throw std::invalid_argument("sequential pairing needs N > 2 measurement circles in 2-D, got " +
                                std::to_string(circles.size()));
  }
  std::vector<RadicalAxis> axes;
  axes.reserve(circles.size() - 1);
  for (std::size_t k = 0; k + 1 < circles.size(); ++k) {
    try {
      axes.push_back(radical_axis(circles[k], circles[k + 1]));
    } catch (const ConcentricCircles& err) {
      throw ConcentricCircles("sequential pair (" + std::to_string(k) + ", " +
                              std::to_string(k + 1) + "): " + err.what());
    }
  }
  return axes;
}

std::vector<RadicalAxis> axes_for_pairs(
    std::span<const Circle> circles,
    std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<RadicalAxis> axes;
  axes.reserve(pairs.size());
  for (const auto& [i, j] : pairs) {
    if (i >= circles.size() || j >= circles.size()) {
      throw std::invalid_argument("circle pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") out of range for " + std::to_string(circles.size()) +
                                  " circles");
    }
    try {
      axes.push_back(radical_axis(circles[i], circles[j]));
    } catch (const ConcentricCircles& err) {
      throw ConcentricCircles("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                              "): " + err.what());
    }
  }
  return axes;
}

std::vector<Point2> circle_intersections(const Circle& ci, const Circle& cj) {
  const Point2 e = cj.center - ci.center;
  const double len = norm(e);
  if (len <= concentric_eps(ci, cj)) {
    throw ConcentricCircles("intersections undefined for concentric circles centered at " +
                            point_str(ci.center));
  }
  const double a =
      (len * len + ci.radius * ci.radius - cj.radius * cj.radius) / (2.0 * len);
  const double h_sq = ci.radius * ci.radius - a * a;
  if (h_sq < 0.0) {
    return {};  // disjoint or nested
  }
  const Point2 mid = ci.center + (a / len) * e;
  if (h_sq == 0.0) {
    return {mid};  // tangent
  }
  const Point2 off = (std::sqrt(h_sq) / len) * perp(e);
  return {mid + off, mid - off};
}

}  // namespace radloc
