#include "knotgrid/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace knotgrid {

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1) {
  // Clamped closest-point iteration on the two parameters (Ericson-style).
  const Vec3 d1 = p1 - p0;
  const Vec3 d2 = q1 - q0;
  const Vec3 r = p0 - q0;
  const double a = dot(d1, d1);
  const double e = dot(d2, d2);
  const double f = dot(d2, r);
  const double c = dot(d1, r);
  const double b = dot(d1, d2);
  const double denom = a * e - b * b;

  double s = 0.0;
  if (denom > 0.0) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
  double t = e > 0.0 ? std::clamp((b * s + f) / e, 0.0, 1.0) : 0.0;
  if (a > 0.0) s = std::clamp((b * t - c) / a, 0.0, 1.0);

  const Vec3 cp = p0 + d1 * s;
  const Vec3 cq = q0 + d2 * t;
  return distance(cp, cq);
}

double PLCurve::max_segment_length() const {
  double m = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    m = std::max(m, distance(vertices[i], vertices[(i + 1) % vertices.size()]));
  }
  return m;
}

namespace {

struct CellKey {
  std::int64_t x, y, z;
  bool operator==(const CellKey&) const = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : {k.x, k.y, k.z}) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

bool adjacent_segments(std::size_t i, std::size_t j, std::size_t n) {
  std::size_t d = i < j ? j - i : i - j;
  return d <= 1 || d == n - 1;
}

}  // namespace

double min_nonadjacent_separation(const PLCurve& curve, double floor_hint) {
  const std::size_t n = curve.vertices.size();
  if (n < 4) return std::numeric_limits<double>::infinity();

  const double cell = std::max(curve.max_segment_length(), floor_hint) * 1.0001;
  if (cell <= 0.0) return 0.0;  // degenerate: all vertices coincide

  // Bucket each segment by the cells its endpoints fall into.
  std::unordered_map<CellKey, std::vector<std::uint32_t>, CellHash> grid;
  grid.reserve(2 * n);
  auto key_of = [cell](const Vec3& v) {
    return CellKey{static_cast<std::int64_t>(std::floor(v.x / cell)),
                   static_cast<std::int64_t>(std::floor(v.y / cell)),
                   static_cast<std::int64_t>(std::floor(v.z / cell))};
  };
  for (std::size_t i = 0; i < n; ++i) {
    CellKey a = key_of(curve.vertices[i]);
    CellKey b = key_of(curve.vertices[(i + 1) % n]);
    // register the segment in every cell its bounding box overlaps
    // (at most 2 per axis since the cell is at least one segment long)
    for (std::int64_t cx = std::min(a.x, b.x); cx <= std::max(a.x, b.x); ++cx)
      for (std::int64_t cy = std::min(a.y, b.y); cy <= std::max(a.y, b.y); ++cy)
        for (std::int64_t cz = std::min(a.z, b.z); cz <= std::max(a.z, b.z); ++cz)
          grid[CellKey{cx, cy, cz}].push_back(static_cast<std::uint32_t>(i));
  }

  // Any pair closer than floor_hint occupies same or touching cells, because
  // every point of a segment lies in one of its registered cells and the
  // cell edge is at least floor_hint.
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [key, segs] : grid) {
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          CellKey nb{key.x + dx, key.y + dy, key.z + dz};
          auto it = grid.find(nb);
          if (it == grid.end()) continue;
          for (std::uint32_t i : segs)
            for (std::uint32_t j : it->second) {
              if (j <= i || adjacent_segments(i, j, n)) continue;
              best = std::min(best, segment_distance(curve.vertices[i],
                                                     curve.vertices[(i + 1) % n],
                                                     curve.vertices[j],
                                                     curve.vertices[(j + 1) % n]));
            }
        }
  }
  return best;
}

bool curve_is_self_avoiding(const PLCurve& curve, double tol) {
  return min_nonadjacent_separation(curve, tol) > tol;
}

double min_curve_distance(const PLCurve& a, const PLCurve& b) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t na = a.vertices.size(), nb = b.vertices.size();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      best = std::min(best, segment_distance(a.vertices[i], a.vertices[(i + 1) % na],
                                             b.vertices[j], b.vertices[(j + 1) % nb]));
  return best;
}

}  // namespace knotgrid
