#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "radloc/errors.hpp"
#include "radloc/geometry.hpp"
#include "radloc/measurement.hpp"
#include "radloc/rng.hpp"

#include "oracles.hpp"

using namespace radloc;

TEST_CASE("signal strength follows the power law") {
  const RssModel m{1.0, 3.0};
  CHECK(rss_at(m, 2.0) == doctest::Approx(0.125));
  CHECK(rss_at(RssModel{1.0, 2.7}, 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(rss_at(m, 0.0), NonPositiveDistance);
  CHECK_THROWS_AS(rss_at(m, -1.0), NonPositiveDistance);
  CHECK_THROWS_AS(rss_at(RssModel{0.0, 3.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(rss_at(RssModel{1.0, -3.0}, 1.0), std::invalid_argument);
}

TEST_CASE("distance inversion") {
  const RssModel m{1.0, 3.0};
  CHECK(distance_from_rss(m, 0.125) == doctest::Approx(2.0));
  CHECK(distance_from_rss(RssModel{7.5, 4.2}, 7.5) == doctest::Approx(1.0));
  CHECK_THROWS_AS(distance_from_rss(m, 0.0), NonPositiveSignal);
  CHECK_THROWS_AS(distance_from_rss(m, -0.2), NonPositiveSignal);
}

TEST_CASE("round trip distance -> signal -> distance") {
  const RssModel m{2.5, 3.0};
  SplitMix64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const double d = rng.uniform(1e-3, 1e3);
    const double back = distance_from_rss(m, rss_at(m, d));
    CHECK(std::abs(back - d) <= 1e-12 * d);
  }
}

TEST_CASE("multiplicative signal noise maps to a power of itself on distances") {
  const RssModel m{1.0, 3.0};
  SplitMix64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const double d = rng.uniform(0.1, 50.0);
    const double omega = rng.uniform(0.05, 20.0);
    const double reported = distance_from_rss(m, omega * rss_at(m, d));
    const double expected = d * std::pow(omega, -1.0 / m.path_loss_exponent);
    CHECK(std::abs(reported - expected) <= 1e-12 * expected);
  }
}

TEST_CASE("zero shadowing reproduces exact distances") {
  const RssModel m{1.0, 3.0};
  const Point2 source{0.5, -0.25};
  const std::vector<Point2> anchors{{-2.0, -1.0}, {-1.0, -3.0}, {-1.0, 1.0}, {1.0, 0.0}};
  const std::vector<double> out = noisy_ranges(m, ShadowingSpec{0.0, 42, 1}, source, anchors);
  REQUIRE(out.size() == anchors.size());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    CHECK(out[i] == distance(source, anchors[i]));
  }
}

TEST_CASE("fixed seed reproduces the same noisy ranges") {
  const RssModel m{1.0, 3.0};
  const Point2 source{0.0, 0.0};
  const std::vector<Point2> anchors{{1.0, 0.0}, {0.0, 2.0}, {3.0, 3.0}};
  const ShadowingSpec spec{5.0, 1234, 1};
  const std::vector<double> a = noisy_ranges(m, spec, source, anchors);
  const std::vector<double> b = noisy_ranges(m, spec, source, anchors);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
  }
  // And a different seed gives different noise.
  const std::vector<double> c = noisy_ranges(m, ShadowingSpec{5.0, 99, 1}, source, anchors);
  CHECK(a[0] != c[0]);
}

TEST_CASE("shadowing spread on the log-distance scale") {
  // log10(reported/true) should have standard deviation sigma/(10*eta) = 1/6.
  const RssModel m{1.0, 3.0};
  const Point2 source{0.0, 0.0};
  const std::vector<Point2> anchors(100000, Point2{3.0, 4.0});
  const std::vector<double> out = noisy_ranges(m, ShadowingSpec{5.0, 7, 1}, source, anchors);
  std::vector<double> log_ratio;
  std::vector<double> ln_ratio;
  log_ratio.reserve(out.size());
  ln_ratio.reserve(out.size());
  for (double d : out) {
    log_ratio.push_back(std::log10(d / 5.0));
    ln_ratio.push_back(std::log(d / 5.0));
  }
  const double std10 = testutil::sample_std(log_ratio);
  CHECK(std::abs(std10 - 1.0 / 6.0) <= 0.05 / 6.0);
  // Log-domain mean is zero up to Monte-Carlo error.
  const double n = static_cast<double>(ln_ratio.size());
  CHECK(std::abs(testutil::mean(ln_ratio)) < 3.0 * testutil::sample_std(ln_ratio) / std::sqrt(n));
}

TEST_CASE("anchors receive independent draws") {
  const RssModel m{1.0, 3.0};
  const Point2 source{0.0, 0.0};
  const std::vector<Point2> anchors(200000, Point2{3.0, 4.0});
  const std::vector<double> out = noisy_ranges(m, ShadowingSpec{5.0, 11, 1}, source, anchors);
  std::vector<double> even;
  std::vector<double> odd;
  for (std::size_t i = 0; i + 1 < out.size(); i += 2) {
    even.push_back(std::log(out[i]));
    odd.push_back(std::log(out[i + 1]));
  }
  CHECK(std::abs(testutil::correlation(even, odd)) < 0.05);
}

TEST_CASE("averaging several readings tightens the estimate") {
  const RssModel m{1.0, 3.0};
  const Point2 source{0.0, 0.0};
  const std::vector<Point2> anchors(100000, Point2{3.0, 4.0});
  const std::vector<double> out = noisy_ranges(m, ShadowingSpec{5.0, 13, 4}, source, anchors);
  std::vector<double> log_ratio;
  log_ratio.reserve(out.size());
  for (double d : out) {
    log_ratio.push_back(std::log10(d / 5.0));
  }
  // Four dB-domain samples halve the dB spread.
  CHECK(std::abs(testutil::sample_std(log_ratio) - 1.0 / 12.0) <= 0.1 / 12.0);
}

TEST_CASE("source sitting on an anchor is rejected") {
  const RssModel m{1.0, 3.0};
  const std::vector<Point2> anchors{{1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(noisy_ranges(m, ShadowingSpec{1.0, 0, 1}, {0.0, 0.0}, anchors), SourceOnAnchor);
}

TEST_CASE("shadowing spec validation") {
  const RssModel m{1.0, 3.0};
  const std::vector<Point2> anchors{{1.0, 0.0}, {0.0, 2.0}, {2.0, 2.0}};
  CHECK_THROWS_AS(noisy_ranges(m, ShadowingSpec{-1.0, 0, 1}, {0.0, 0.0}, anchors),
                  std::invalid_argument);
  CHECK_THROWS_AS(noisy_ranges(m, ShadowingSpec{1.0, 0, 0}, {0.0, 0.0}, anchors),
                  std::invalid_argument);
}
