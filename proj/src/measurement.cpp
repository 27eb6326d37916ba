#include "radloc/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "radloc/errors.hpp"
#include "radloc/rng.hpp"

namespace radloc {

namespace {

void validate(const RssModel& m) {
  if (!(m.source_strength > 0.0) || !std::isfinite(m.source_strength)) {
    throw std::invalid_argument("RSS source strength must be finite and positive");
  }
  if (!(m.path_loss_exponent > 0.0) || !std::isfinite(m.path_loss_exponent)) {
    throw std::invalid_argument("RSS path loss exponent must be finite and positive");
  }
}

void validate(const ShadowingSpec& spec) {
  if (!(spec.sigma_db >= 0.0) || !std::isfinite(spec.sigma_db)) {
    throw std::invalid_argument("shadowing sigma must be finite and non-negative");
  }
  if (spec.samples_per_estimate < 1) {
    throw std::invalid_argument("samples per estimate must be at least 1");
  }
}

}  // namespace

double rss_at(const RssModel& m, double dist) {
  validate(m);
  if (!(dist > 0.0) || !std::isfinite(dist)) {
    throw NonPositiveDistance("RSS undefined at distance " + std::to_string(dist));
  }
  return m.source_strength / std::pow(dist, m.path_loss_exponent);
}

double distance_from_rss(const RssModel& m, double signal) {
  validate(m);
  if (!(signal > 0.0) || !std::isfinite(signal)) {
    throw NonPositiveSignal("distance undefined for signal strength " + std::to_string(signal));
  }
  return std::pow(m.source_strength / signal, 1.0 / m.path_loss_exponent);
}

std::vector<double> noisy_ranges(const RssModel& m, const ShadowingSpec& spec, Point2 source,
                                 std::span<const Point2> anchors) {
  validate(m);
  validate(spec);
  SplitMix64 rng(spec.seed);
  std::vector<double> out;
  out.reserve(anchors.size());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const double dist = distance(source, anchors[i]);
    const double eps = 1e-12 * std::max({1.0, norm(source), norm(anchors[i])});
    if (dist <= eps) {
      throw SourceOnAnchor("source coincides with anchor " + std::to_string(i));
    }
    if (spec.sigma_db == 0.0) {
      out.push_back(dist);
      continue;
    }
    double db = 0.0;
    for (int k = 0; k < spec.samples_per_estimate; ++k) {
      db += spec.sigma_db * rng.gaussian();
    }
    db /= spec.samples_per_estimate;
    const double omega = std::pow(10.0, db / 10.0);
    out.push_back(distance_from_rss(m, omega * rss_at(m, dist)));
  }
  return out;
}

}  // namespace radloc
