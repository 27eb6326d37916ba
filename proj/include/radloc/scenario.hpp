#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radloc/geometry.hpp"

namespace radloc {

// Anchor set plus one range measurement per anchor. `source` is the ground
// truth position when it is known (synthetic data, benchmarks); estimation
// itself never reads it.
struct Scenario {
  std::vector<Point2> anchors;
  std::optional<Point2> source;
  std::vector<double> ranges;
  std::string label;
};

// Throws std::invalid_argument naming the broken field; in particular the
// N > 2 anchor requirement for 2-D localization.
void validate(const Scenario& s);

std::vector<double> exact_ranges(std::span<const Point2> anchors, Point2 source);

// The circles C(x_i, d_i), one per anchor.
std::vector<Circle> measurement_circles(const Scenario& s);

// Radical axes of the consecutive measurement-circle pairs.
std::vector<RadicalAxis> sequential_axes(const Scenario& s);

}  // namespace radloc
