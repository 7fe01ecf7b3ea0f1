#pragma once

#include <cstddef>
#include <vector>

namespace knotgrid {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
double distance(const Vec3& a, const Vec3& b);

/// Minimal distance between the segments [p0,p1] and [q0,q1].
double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1);

/// Closed polygonal loop; consecutive vertices are joined and the last
/// vertex closes back to the first.
struct PLCurve {
  std::vector<Vec3> vertices;

  std::size_t segment_count() const { return vertices.size(); }
  double max_segment_length() const;
};

/// Minimal distance between non-adjacent segment pairs of a closed curve.
/// Uses a uniform grid so only nearby pairs are evaluated; `floor_hint`
/// prunes pairs once it is established that no pair comes closer than the
/// hint (the exact minimum is then irrelevant for a threshold test).
double min_nonadjacent_separation(const PLCurve& curve, double floor_hint);

/// True when all non-adjacent segment pairs stay further apart than tol.
bool curve_is_self_avoiding(const PLCurve& curve, double tol);

/// Minimal distance between segments of two disjoint closed curves.
double min_curve_distance(const PLCurve& a, const PLCurve& b);

}  // namespace knotgrid
