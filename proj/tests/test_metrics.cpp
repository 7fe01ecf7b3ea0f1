#include <doctest.h>

#include <cmath>
#include <random>

#include "knotgrid/metrics.hpp"
#include "support/test_util.hpp"

using knotgrid::CompactSample;
using knotgrid::hausdorff_distance;
using knotgrid::MetricCode;
using knotgrid::Vec3;
namespace kt = knotgrid::testing;

TEST_CASE("hausdorff basics") {
  CompactSample a{{{0, 0, 0}, {1, 0, 0}, {0, 2, 0}}, 0.0};
  CHECK(hausdorff_distance(a, a).distance == 0.0);

  CompactSample p{{{0, 0, 0}}, 0.0};
  CompactSample q{{{0.75, 0, 0}}, 0.0};
  const auto r = hausdorff_distance(p, q);
  CHECK(r.distance == doctest::Approx(0.75));
  CHECK(r.error_bound == 0.0);

  CompactSample with_res{{{0, 0, 0}}, 0.25};
  CHECK(hausdorff_distance(with_res, q).error_bound == doctest::Approx(0.25));

  CHECK_THROWS(hausdorff_distance(CompactSample{}, a));
}

TEST_CASE("two samplings of the same sphere stay within the error bound") {
  CompactSample a{kt::sphere_points(1000), 0.05};
  CompactSample b{kt::rotated_about_z(kt::sphere_points(1000), 0.03), 0.05};
  const auto r = hausdorff_distance(a, b);
  CHECK(r.error_bound == doctest::Approx(0.1));
  CHECK(r.distance <= 0.1);
  CHECK(r.distance > 0.0);
}

TEST_CASE("hausdorff is symmetric and triangular on samples") {
  std::mt19937_64 rng(0x5eed0001);
  for (int trial = 0; trial < 25; ++trial) {
    CompactSample a{kt::random_points(40, rng), 0.0};
    CompactSample b{kt::random_points(30, rng), 0.0};
    CompactSample c{kt::random_points(50, rng), 0.0};
    const double ab = hausdorff_distance(a, b).distance;
    const double ba = hausdorff_distance(b, a).distance;
    CHECK(ab == ba);
    const double ac = hausdorff_distance(a, c).distance;
    const double cb = hausdorff_distance(c, b).distance;
    CHECK(ab <= ac + cb + 1e-12);
  }
}

TEST_CASE("enlarging a sample moves the distance by at most the slack") {
  std::mt19937_64 rng(0x5eed0002);
  for (int trial = 0; trial < 10; ++trial) {
    CompactSample coarse{kt::sphere_points(200), 0.15};
    CompactSample fine{kt::sphere_points(200), 0.15};
    // superset: slight rotations of the same lattice, so every added point
    // stays within the stated resolution of an original one
    auto more = kt::rotated_about_z(kt::sphere_points(200), 0.05 + 0.01 * trial);
    fine.points.insert(fine.points.end(), more.begin(), more.end());
    CompactSample other{kt::random_points(60, rng), 0.0};
    const double d0 = hausdorff_distance(coarse, other).distance;
    const double d1 = hausdorff_distance(fine, other).distance;
    CHECK(d1 <= d0 + coarse.resolution + 1e-12);
    CHECK(d0 <= d1 + coarse.resolution + 1e-12);
  }
}

TEST_CASE("epsilon collar membership") {
  CompactSample c{{{0, 0, 0}}, 0.0};
  CHECK(knotgrid::epsilon_collar_contains(c, 1.0, Vec3{0.5, 0, 0}));
  CHECK_FALSE(knotgrid::epsilon_collar_contains(c, 1.0, Vec3{2, 0, 0}));
  CHECK_FALSE(knotgrid::epsilon_collar_contains(c, 1.0, Vec3{1, 0, 0}));  // open collar
  CHECK_THROWS(knotgrid::epsilon_collar_contains(c, 0.0, Vec3{0, 0, 0}));
}

TEST_CASE("convergence of shrinking balls") {
  const CompactSample limit{{{0, 0, 0}}, 0.0};

  SUBCASE("constant sequence") {
    std::vector<CompactSample> seq(6, limit);
    const auto report = knotgrid::check_convergence(seq, limit, 0.01);
    CHECK(report.pass);
    for (double d : report.distances) CHECK(d == 0.0);
  }

  SUBCASE("radius 2^-i spheres") {
    std::vector<CompactSample> seq;
    for (int i = 1; i <= 12; ++i) {
      CompactSample s;
      const double r = std::ldexp(1.0, -i);
      for (const Vec3& p : kt::sphere_points(64)) s.points.push_back(p * r);
      s.resolution = 0.0;
      seq.push_back(std::move(s));
    }
    const auto report = knotgrid::check_convergence(seq, limit, 0.01);
    CHECK(report.pass);
    for (int i = 1; i <= 12; ++i) {
      CHECK(report.distances[static_cast<std::size_t>(i - 1)] ==
            doctest::Approx(std::ldexp(1.0, -i)).epsilon(1e-9));
    }
  }

  SUBCASE("limit points are reachable from the final element") {
    std::vector<CompactSample> seq;
    for (int i = 1; i <= 8; ++i) {
      CompactSample s;
      const double r = std::ldexp(1.0, -i);
      for (const Vec3& p : kt::sphere_points(64)) s.points.push_back(p * r);
      s.resolution = 0.01;
      seq.push_back(std::move(s));
    }
    CompactSample target{kt::sphere_points(64), 0.01};
    for (auto& p : target.points) p = p * std::ldexp(1.0, -8);
    const double tol = 0.02;
    const auto report = knotgrid::check_convergence(seq, target, tol);
    REQUIRE(report.pass);
    // every limit point lies within tol + resolution of the last element
    const CompactSample& last = seq.back();
    for (const Vec3& p : target.points) {
      CHECK(knotgrid::epsilon_collar_contains(last, tol + last.resolution, p));
    }
  }

  SUBCASE("alternating singletons never converge") {
    CompactSample here{{{0, 0, 0}}, 0.0};
    CompactSample there{{{1, 0, 0}}, 0.0};
    std::vector<CompactSample> seq;
    for (int i = 0; i < 12; ++i) seq.push_back(i % 2 ? there : here);
    CHECK_FALSE(knotgrid::check_convergence(seq, here, 0.01).pass);
  }
}

TEST_CASE("metric codes from points") {
  const auto code = knotgrid::metric_code_of_points(2, [](std::size_t, std::size_t) { return 1.0; });
  CHECK(code.distances == std::vector<std::vector<double>>{{0, 1}, {1, 0}});
  CHECK(knotgrid::validate_metric_code(code).pass);

  const auto single = knotgrid::metric_code_of_points(1, [](std::size_t, std::size_t) { return 9.0; });
  CHECK(single.distances == std::vector<std::vector<double>>{{0}});
  CHECK(knotgrid::validate_metric_code(single).pass);

  // three collinear points at 0, 1, 2: triangle equality holds
  const double xs[] = {0.0, 1.0, 2.0};
  const auto line = knotgrid::metric_code_of_points(
      3, [&xs](std::size_t i, std::size_t j) { return std::abs(xs[i] - xs[j]); });
  CHECK(line.distances[0][2] == 2.0);
  CHECK(knotgrid::validate_metric_code(line).pass);
}

TEST_CASE("metric axiom violations are localized") {
  MetricCode asym{2, {{0, 1}, {2, 0}}};
  const auto d1 = knotgrid::validate_metric_code(asym);
  CHECK_FALSE(d1.pass);
  CHECK(d1.violation.find("symmetry") != std::string::npos);

  MetricCode wide{3, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}};
  const auto d2 = knotgrid::validate_metric_code(wide);
  CHECK_FALSE(d2.pass);
  CHECK(d2.violation.find("triangle inequality at (0,2)") != std::string::npos);

  MetricCode diag{2, {{0.5, 1}, {1, 0}}};
  CHECK_FALSE(knotgrid::validate_metric_code(diag).pass);

  MetricCode neg{2, {{0, -1}, {-1, 0}}};
  CHECK_FALSE(knotgrid::validate_metric_code(neg).pass);
}

TEST_CASE("random euclidean codes validate; mutated ones do not") {
  std::mt19937_64 rng(0x5eed0003);
  std::uniform_int_distribution<std::size_t> size_dist(3, 14);
  for (int trial = 0; trial < 60; ++trial) {
    const auto pts = kt::random_points(size_dist(rng), rng);
    auto code = knotgrid::metric_code_of_points(
        pts.size(), [&pts](std::size_t i, std::size_t j) { return distance(pts[i], pts[j]); });
    CHECK(knotgrid::validate_metric_code(code).pass);

    auto broken = code;
    if (trial % 2 == 0) {
      broken.distances[0][1] += 0.125;  // symmetry fault
    } else {
      // triangle fault: stretch one leg far beyond the detour bound
      broken.distances[0][2] = broken.distances[2][0] =
          broken.distances[0][1] + broken.distances[1][2] + 1.0;
    }
    CHECK_FALSE(knotgrid::validate_metric_code(broken).pass);
  }
}
