#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "radloc/geometry.hpp"

namespace radloc {

// Received-signal-strength power law s = A / d^eta.
struct RssModel {
  double source_strength = 1.0;     // A, > 0
  double path_loss_exponent = 3.0;  // eta, > 0
};

// Log-normal shadowing: the RSS is scaled by omega with
// 10*log10(omega) ~ N(0, sigma_db^2), one independent draw per anchor.
// samples_per_estimate > 1 averages that many dB draws per anchor before
// the RSS is inverted back to a distance.
struct ShadowingSpec {
  double sigma_db = 0.0;
  std::uint64_t seed = 0;
  int samples_per_estimate = 1;
};

double rss_at(const RssModel& m, double dist);            // A / d^eta
double distance_from_rss(const RssModel& m, double signal);  // (A / s)^(1/eta)

// One reported distance per anchor: the true distance is pushed through the
// RSS model, shadowing noise is applied to the signal, and the noisy signal
// is inverted back. sigma_db = 0 returns the exact distances and consumes no
// randomness. Deterministic given spec.seed.
std::vector<double> noisy_ranges(const RssModel& m, const ShadowingSpec& spec, Point2 source,
                                 std::span<const Point2> anchors);

}  // namespace radloc
