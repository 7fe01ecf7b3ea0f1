#include "knotgrid/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace knotgrid {

namespace {

double sq(double v) { return v * v; }

double dist2(const Vec3& a, const Vec3& b) {
  return sq(a.x - b.x) + sq(a.y - b.y) + sq(a.z - b.z);
}

void check_sample(const CompactSample& s, const char* who) {
  if (s.points.empty()) throw std::invalid_argument(std::string(who) + ": empty sample");
  if (!(s.resolution >= 0.0) || !std::isfinite(s.resolution)) {
    throw std::invalid_argument(std::string(who) + ": bad resolution");
  }
  for (const Vec3& p : s.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw std::invalid_argument(std::string(who) + ": non-finite coordinate");
    }
  }
}

// max over a of min over b, squared. Scanning b starting at the index of a
// makes identically-generated samples hit their twin immediately, and any
// b below the running max prunes the inner loop.
double directed_sq(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  double worst = 0.0;
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t off = 0; off < nb; ++off) {
      const std::size_t j = (i + off) % nb;
      best = std::min(best, dist2(a[i], b[j]));
      if (best <= worst) break;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

HausdorffResult hausdorff_distance(const CompactSample& a, const CompactSample& b) {
  check_sample(a, "hausdorff_distance(a)");
  check_sample(b, "hausdorff_distance(b)");
  const double d2 = std::max(directed_sq(a.points, b.points), directed_sq(b.points, a.points));
  return HausdorffResult{std::sqrt(d2), a.resolution + b.resolution};
}

bool epsilon_collar_contains(const CompactSample& sample, double eps, const Vec3& x) {
  check_sample(sample, "epsilon_collar_contains");
  if (!(eps > 0.0)) throw std::invalid_argument("epsilon_collar_contains: eps must be positive");
  const double e2 = eps * eps;
  for (const Vec3& p : sample.points) {
    if (dist2(p, x) < e2) return true;
  }
  return false;
}

ConvergenceReport check_convergence(const std::vector<CompactSample>& seq,
                                    const CompactSample& limit, double tol) {
  if (seq.empty()) throw std::invalid_argument("check_convergence: empty sequence");
  if (!(tol > 0.0)) throw std::invalid_argument("check_convergence: tol must be positive");

  ConvergenceReport report;
  report.distances.reserve(seq.size());
  for (const CompactSample& s : seq) {
    report.distances.push_back(hausdorff_distance(s, limit).distance);
  }

  const std::size_t n = seq.size();
  const std::size_t window_start = n - std::max<std::size_t>(1, n / 4);
  report.pass = true;
  for (std::size_t i = window_start; i < n; ++i) {
    if (!(report.distances[i] < tol)) {
      report.pass = false;
      report.reason = "distance " + std::to_string(report.distances[i]) + " at index " +
                      std::to_string(i) + " is not below tol";
      return report;
    }
    if (i + 1 < n && report.distances[i + 1] > report.distances[i] + tol) {
      report.pass = false;
      report.reason = "distances increase beyond tol slack at index " + std::to_string(i);
      return report;
    }
  }
  return report;
}

MetricCode metric_code_of_points(std::size_t count,
                                 const std::function<double(std::size_t, std::size_t)>& dist) {
  MetricCode code;
  code.size = count;
  code.distances.assign(count, std::vector<double>(count, 0.0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const double d = dist(i, j);
      code.distances[i][j] = d;
      code.distances[j][i] = d;
    }
  }
  return code;
}

MetricDiagnostics validate_metric_code(const MetricCode& code) {
  MetricDiagnostics diag;
  auto fail = [&diag](std::string why) {
    diag.pass = false;
    diag.violation = std::move(why);
  };

  const std::size_t n = code.size;
  if (code.distances.size() != n) {
    fail("shape: row count " + std::to_string(code.distances.size()) + " != size");
    return diag;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (code.distances[i].size() != n) {
      fail("shape: row " + std::to_string(i) + " has wrong length");
      return diag;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (code.distances[i][i] != 0.0) {
      fail("zero diagonal at " + std::to_string(i));
      return diag;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double d = code.distances[i][j];
      if (!std::isfinite(d) || d < 0.0) {
        fail("non-negativity at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        return diag;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (code.distances[i][j] != code.distances[j][i]) {
        fail("symmetry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        return diag;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (code.distances[i][k] > code.distances[i][j] + code.distances[j][k]) {
          fail("triangle inequality at (" + std::to_string(i) + "," + std::to_string(k) +
               ") via " + std::to_string(j));
          return diag;
        }
      }
    }
  }
  return diag;
}

}  // namespace knotgrid
