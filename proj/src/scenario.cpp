#include "radloc/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace radloc {

void validate(const Scenario& s) {
  if (s.anchors.size() < 3) {
    throw std::invalid_argument("scenario '" + s.label + "' has " +
                                std::to_string(s.anchors.size()) +
                                " anchors; 2-D localization needs N > 2");
  }
  for (std::size_t i = 0; i < s.anchors.size(); ++i) {
    if (!is_finite(s.anchors[i])) {
      throw std::invalid_argument("scenario '" + s.label + "': anchor " + std::to_string(i) +
                                  " is not finite");
    }
  }
  if (s.source && !is_finite(*s.source)) {
    throw std::invalid_argument("scenario '" + s.label + "': source is not finite");
  }
  if (s.ranges.size() != s.anchors.size()) {
    throw std::invalid_argument("scenario '" + s.label + "' has " +
                                std::to_string(s.ranges.size()) + " ranges for " +
                                std::to_string(s.anchors.size()) + " anchors");
  }
  for (std::size_t i = 0; i < s.ranges.size(); ++i) {
    if (!(s.ranges[i] >= 0.0) || !std::isfinite(s.ranges[i])) {
      throw std::invalid_argument("scenario '" + s.label + "': range " + std::to_string(i) +
                                  " must be finite and non-negative");
    }
  }
}

std::vector<double> exact_ranges(std::span<const Point2> anchors, Point2 source) {
  std::vector<double> out;
  out.reserve(anchors.size());
  for (const Point2& a : anchors) {
    out.push_back(distance(source, a));
  }
  return out;
}

std::vector<Circle> measurement_circles(const Scenario& s) {
  validate(s);
  std::vector<Circle> circles;
  circles.reserve(s.anchors.size());
  for (std::size_t i = 0; i < s.anchors.size(); ++i) {
    circles.push_back({s.anchors[i], s.ranges[i]});
  }
  return circles;
}

std::vector<RadicalAxis> sequential_axes(const Scenario& s) {
  const auto circles = measurement_circles(s);
  return sequential_axes(std::span<const Circle>(circles));
}

}  // namespace radloc
