#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "knotgrid/geometry.hpp"
#include "knotgrid/metrics.hpp"
#include "support/test_util.hpp"

using knotgrid::PLCurve;
using knotgrid::segment_distance;
using knotgrid::Vec3;
namespace kt = knotgrid::testing;

namespace {

// reference implementations, deliberately naive

double naive_hausdorff(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  double worst = 0.0;
  for (const Vec3& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec3& q : b) best = std::min(best, distance(p, q));
    worst = std::max(worst, best);
  }
  for (const Vec3& q : b) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec3& p : a) best = std::min(best, distance(q, p));
    worst = std::max(worst, best);
  }
  return worst;
}

double naive_separation(const PLCurve& curve) {
  const std::size_t n = curve.vertices.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      best = std::min(best, segment_distance(curve.vertices[i], curve.vertices[(i + 1) % n],
                                             curve.vertices[j], curve.vertices[(j + 1) % n]));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("segment distance basics") {
  const Vec3 o{0, 0, 0};
  CHECK(segment_distance(o, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}) == doctest::Approx(1.0));
  CHECK(segment_distance(o, {1, 0, 0}, {0.5, 0, 0}, {0.5, 1, 0}) == doctest::Approx(0.0));
  // skew segments: closest points interior to both
  CHECK(segment_distance({-1, 0, 1}, {1, 0, 1}, {0, -1, -1}, {0, 1, -1}) == doctest::Approx(2.0));
  // parallel, offset
  CHECK(segment_distance(o, {1, 0, 0}, {0, 2, 0}, {1, 2, 0}) == doctest::Approx(2.0));
  // degenerate: both segments are points
  CHECK(segment_distance(o, o, {3, 4, 0}, {3, 4, 0}) == doctest::Approx(5.0));
}

TEST_CASE("pruned hausdorff agrees with the naive double loop") {
  std::mt19937_64 rng(0x5eed0100);
  for (int trial = 0; trial < 30; ++trial) {
    knotgrid::CompactSample a{kt::random_points(20 + trial, rng), 0.0};
    knotgrid::CompactSample b{kt::random_points(35 - trial % 7, rng), 0.0};
    const double fast = knotgrid::hausdorff_distance(a, b).distance;
    const double slow = naive_hausdorff(a.points, b.points);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
  }
  // identical index-aligned samples, the fast path's best case
  knotgrid::CompactSample c{kt::random_points(500, rng), 0.0};
  CHECK(knotgrid::hausdorff_distance(c, c).distance == 0.0);
}

TEST_CASE("grid separation scan matches brute force on knot polygons") {
  for (auto [q, s] : {std::pair<int, int>{3, 16}, {3, 32}, {5, 16}, {9, 16}}) {
    PLCurve curve;
    const int count = q * s;
    for (int i = 0; i < count; ++i) {
      const double u = 2.0 * kt::kPi * i / count;
      const double w = 0.5 + 0.25 * std::cos(q * u);
      curve.vertices.push_back({w * std::cos(2 * u), w * std::sin(2 * u), 0.25 * std::sin(q * u)});
    }
    const double brute = naive_separation(curve);
    const double grid = knotgrid::min_nonadjacent_separation(curve, 1e-6);
    // the scan may prune distant pairs, so it never reports less than the
    // true minimum and agrees exactly whenever it finds any candidate
    if (std::isinf(grid)) {
      CHECK(brute > 1e-6);
    } else {
      CHECK(grid == doctest::Approx(brute).epsilon(1e-12));
      CHECK(grid >= brute - 1e-15);
    }
    CHECK(knotgrid::curve_is_self_avoiding(curve, 1e-6));
  }
}

TEST_CASE("grid separation detects genuine near-contact") {
  // a flat rectangle pinched in the middle: the two long sides pass within
  // delta of each other away from their shared neighbors
  const double delta = 1e-8;
  PLCurve pinched;
  pinched.vertices = {{0, 0, 0},     {1, 0, 0},     {2, 0, 0},  {2, 1, 0},
                      {1, delta, 0}, {0.0, 1.0, 0}, {-0.5, 0.5, 0}};
  const double grid = knotgrid::min_nonadjacent_separation(pinched, 1e-6);
  CHECK(grid == doctest::Approx(delta).epsilon(1e-6));
  CHECK_FALSE(knotgrid::curve_is_self_avoiding(pinched, 1e-6));
  CHECK(knotgrid::curve_is_self_avoiding(pinched, 1e-10));
}

TEST_CASE("curve-to-curve minimum distance") {
  PLCurve a, b;
  for (int i = 0; i < 24; ++i) {
    const double u = 2.0 * kt::kPi * i / 24;
    a.vertices.push_back({std::cos(u), std::sin(u), 0.0});
    b.vertices.push_back({std::cos(u), std::sin(u), 2.0});
  }
  CHECK(knotgrid::min_curve_distance(a, b) == doctest::Approx(2.0));
}
