#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace radloc {

// 2-D point. Also used as a plain vector where the context is a direction,
// offset, or gradient.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline Point2 operator*(Point2 a, double s) { return s * a; }

inline Point2& operator+=(Point2& a, Point2 b) {
  a.x += b.x;
  a.y += b.y;
  return a;
}

inline Point2& operator-=(Point2& a, Point2 b) {
  a.x -= b.x;
  a.y -= b.y;
  return a;
}

inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Point2 a) { return dot(a, a); }
inline double norm(Point2 a) { return std::sqrt(norm_sq(a)); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

// Rotation by +90 degrees.
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

inline bool is_finite(Point2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

struct Circle {
  Point2 center;
  double radius = 0.0;  // >= 0
};

// Power of a point with respect to a circle: ||p - c||^2 - r^2.
inline double power(const Circle& c, Point2 p) {
  return norm_sq(p - c.center) - c.radius * c.radius;
}

// Line of equal power with respect to two non-concentric circles, stored as
// the foot point on the center line plus the unnormalized center difference
// e = c_j - c_i. The line is { p : dot(p - foot, direction) == 0 }, so
// `direction` is the line's normal, not a vector along it. It is kept
// unnormalized on purpose: the convex cost consumes it as-is.
struct RadicalAxis {
  Point2 foot;
  Point2 direction;
};

// Signed distance of p to the axis line (offset along the normal).
double axis_offset(const RadicalAxis& axis, Point2 p);

// Throws ConcentricCircles when the centers coincide (relative threshold).
RadicalAxis radical_axis(const Circle& ci, const Circle& cj);

// Axes of the consecutive pairs (k, k+1), k = 0..N-2. Needs N > 2 circles.
std::vector<RadicalAxis> sequential_axes(std::span<const Circle> circles);

// Generic pair selection; no optimality claim, callers choose the pairs.
std::vector<RadicalAxis> axes_for_pairs(
    std::span<const Circle> circles,
    std::span<const std::pair<std::size_t, std::size_t>> pairs);

// Zero, one, or two intersection points; empty when disjoint or nested.
// Independent of radical_axis, which makes it usable as an incidence oracle.
std::vector<Point2> circle_intersections(const Circle& ci, const Circle& cj);

}  // namespace radloc
