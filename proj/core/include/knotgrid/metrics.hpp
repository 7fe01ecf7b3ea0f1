#pragma once

#include <functional>
#include <string>
#include <vector>

#include "knotgrid/geometry.hpp"

namespace knotgrid {

/// Finite point sample of a compact subset of R^3. `resolution` is the
/// stated covering radius: every point of the intended set lies within
/// resolution of some sample point.
struct CompactSample {
  std::vector<Vec3> points;
  double resolution = 0.0;
};

struct HausdorffResult {
  double distance = 0.0;
  double error_bound = 0.0;  // sum of the two sample resolutions
};

/// Hausdorff distance between the two samples, brute force with early
/// pruning. The Hausdorff distance of the underlying compact sets lies
/// within +-error_bound of the returned value.
HausdorffResult hausdorff_distance(const CompactSample& a, const CompactSample& b);

/// Whether x lies in the open eps-collar of the sampled set.
bool epsilon_collar_contains(const CompactSample& sample, double eps, const Vec3& x);

struct ConvergenceReport {
  bool pass = false;
  std::vector<double> distances;
  std::string reason;
};

/// Convergence check against a limit sample: over the last quarter of the
/// sequence all distances must fall below tol and be non-increasing up to
/// tol slack.
ConvergenceReport check_convergence(const std::vector<CompactSample>& seq,
                                    const CompactSample& limit, double tol);

/// Finite metric code: a symmetric N x N distance matrix with zero
/// diagonal satisfying the triangle inequality.
struct MetricCode {
  std::size_t size = 0;
  std::vector<std::vector<double>> distances;
};

/// Fills the matrix from a distance callback over point indices.
MetricCode metric_code_of_points(std::size_t count,
                                 const std::function<double(std::size_t, std::size_t)>& dist);

struct MetricDiagnostics {
  bool pass = true;
  std::string violation;  // names the first violated axiom and indices
};

/// Checks shape, non-negativity, zero diagonal, symmetry and all triangle
/// inequalities; the first violation is reported with its indices.
MetricDiagnostics validate_metric_code(const MetricCode& code);

}  // namespace knotgrid
