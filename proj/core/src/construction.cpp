#include "knotgrid/construction.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace knotgrid {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSelfIntersectTolerance = 1e-6;  // relative to the ball radius
constexpr std::int64_t kMaxRadiusExponent = 1'000'000;

std::int64_t radius_exponent(std::uint32_t n, std::uint32_t k) {
  const std::int64_t e = 4ll * (static_cast<std::int64_t>(n) + 1) * (static_cast<std::int64_t>(k) + 1);
  if (e > kMaxRadiusExponent) {
    throw std::invalid_argument("ball_spec: grid indices too deep");
  }
  return e;
}

const Dyadic kOne = Dyadic(1);
const Dyadic kHalf = Dyadic::pow2(-1);

// Unit-scale torus-knot polygons are shared across balls: the embedded
// curve is the unit polygon scaled by the radius (a power of two, so the
// scaling is exact in doubles).
struct UnitCurveKey {
  std::uint64_t q;
  int segments;
  bool operator<(const UnitCurveKey& o) const {
    return q != o.q ? q < o.q : segments < o.segments;
  }
};

std::mutex unit_curve_mutex;
std::map<UnitCurveKey, PLCurve> unit_curve_cache;

PLCurve unit_torus_curve(std::uint64_t q, int segments_per_crossing) {
  const UnitCurveKey key{q, segments_per_crossing};
  {
    std::lock_guard<std::mutex> lock(unit_curve_mutex);
    auto it = unit_curve_cache.find(key);
    if (it != unit_curve_cache.end()) return it->second;
  }

  const std::size_t count = static_cast<std::size_t>(q) * static_cast<std::size_t>(segments_per_crossing);
  if (count > 2'000'000) {
    throw std::invalid_argument("embed_knot_in_ball: vertex budget exceeded");
  }
  PLCurve curve;
  curve.vertices.reserve(count);
  const double major = 0.5, minor = 0.25;
  for (std::size_t i = 0; i < count; ++i) {
    const double u = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(count);
    const double w = major + minor * std::cos(static_cast<double>(q) * u);
    curve.vertices.push_back({w * std::cos(2.0 * u), w * std::sin(2.0 * u),
                              minor * std::sin(static_cast<double>(q) * u)});
  }
  if (!curve_is_self_avoiding(curve, kSelfIntersectTolerance)) {
    throw std::invalid_argument(
        "embed_knot_in_ball: insufficient sampling: polygon self-intersects at tolerance");
  }

  std::lock_guard<std::mutex> lock(unit_curve_mutex);
  return unit_curve_cache.emplace(key, std::move(curve)).first->second;
}

}  // namespace

Ball ball_spec(std::uint32_t n, std::uint32_t k, int l) {
  if (l != 0 && l != 1) throw std::invalid_argument("ball_spec: l must be 0 or 1");
  Ball b;
  b.n = n;
  b.k = k;
  b.l = l;
  b.center = DyadicVec3{kOne - Dyadic::pow2(-static_cast<std::int64_t>(n)),
                        kOne - Dyadic::pow2(-static_cast<std::int64_t>(k)),
                        Dyadic(l)};
  b.radius = Dyadic::pow2(-radius_exponent(n, k));
  return b;
}

Capsule capsule(std::uint32_t n, std::uint32_t k) {
  return Capsule{n, k, ball_spec(n, k, 0), ball_spec(n, k, 1)};
}

bool capsule_contains_ball(const Capsule& c, const Ball& b) {
  // The hull of two equal-radius balls with centers differing only in z is
  // {p : dist(p, segment) <= r}. A ball lies inside iff its center is
  // within r - r_b of the segment.
  if (b.radius > c.bottom.radius) return false;
  const Dyadic slack = c.bottom.radius - b.radius;
  const Dyadic d2 = distance_squared_to_vertical_segment(
      b.center, c.bottom.center.x, c.bottom.center.y, Dyadic(0), Dyadic(1));
  return d2 <= sqr(slack);
}

bool capsule_disjoint_from_ball(const Capsule& c, const Ball& b) {
  const Dyadic d2 = distance_squared_to_vertical_segment(
      b.center, c.bottom.center.x, c.bottom.center.y, Dyadic(0), Dyadic(1));
  return d2 > sqr(c.bottom.radius + b.radius);
}

CapsuleCertificate capsule_certificate(std::uint32_t n, std::uint32_t k,
                                       std::uint32_t rows_m, std::uint32_t cols_k) {
  const Capsule c = capsule(n, k);
  CapsuleCertificate cert;
  for (std::uint32_t bn = 0; bn < 2 * rows_m; ++bn) {
    for (std::uint32_t bk = 0; bk < cols_k; ++bk) {
      if (bn == n && bk == k) continue;
      for (int l = 0; l <= 1; ++l) {
        const Ball b = ball_spec(bn, bk, l);
        ++cert.checked;
        if (!capsule_disjoint_from_ball(c, b)) {
          cert.disjoint = false;
          cert.witness = "ball (" + std::to_string(bn) + "," + std::to_string(bk) + "," +
                         std::to_string(l) + ")";
          return cert;
        }
      }
    }
  }
  // clearance from P: both the capsule and every piece of P extend over
  // z in [0,1], so the gap reduces to a planar distance against the
  // capsule axis (cx, cy)
  const Dyadic cx = c.bottom.center.x;
  const Dyadic cy = c.bottom.center.y;
  const Dyadic r2 = sqr(c.bottom.radius);
  const PQDescriptor pq = pq_sets(rows_m, cols_k);
  auto planar_clear = [&](const Dyadic& px, const Dyadic& py) {
    return sqr(px - cx) + sqr(py - cy) > r2;
  };
  for (const auto& stick : pq.sticks) {
    ++cert.checked;
    if (!planar_clear(stick.x, kOne)) {
      cert.disjoint = false;
      cert.witness = "stick at x=" + stick.x.to_decimal();
      return cert;
    }
  }
  ++cert.checked;
  if (!planar_clear(kOne, kOne)) {  // punctured axis
    cert.disjoint = false;
    cert.witness = "axis segment";
    return cert;
  }
  for (const DyadicVec3& qp : pq.q_points) {
    ++cert.checked;
    if (distance_squared_to_vertical_segment(qp, cx, cy, Dyadic(0), Dyadic(1)) <= r2) {
      cert.disjoint = false;
      cert.witness = "q-point (" + qp.x.to_decimal() + "," + qp.y.to_decimal() + "," +
                     qp.z.to_decimal() + ")";
      return cert;
    }
  }
  return cert;
}

bool PQDescriptor::contains_q_point(const DyadicVec3& p) const {
  return std::find(q_points.begin(), q_points.end(), p) != q_points.end();
}

PQDescriptor pq_sets(std::uint32_t rows_m, std::uint32_t cols_k) {
  if (rows_m < 1 || cols_k < 1) throw std::invalid_argument("pq_sets: window must be at least 1x1");
  PQDescriptor pq;
  for (std::uint32_t n = 0; n < 2 * rows_m; ++n) {
    const Dyadic x = kOne - Dyadic::pow2(-static_cast<std::int64_t>(n));
    for (int l = 0; l <= 1; ++l) {
      pq.q_points.push_back(DyadicVec3{x, kOne, Dyadic(l)});
    }
    pq.sticks.push_back(PQDescriptor::Stick{x});
  }
  for (std::uint32_t k = 0; k < cols_k; ++k) {
    const Dyadic y = kOne - Dyadic::pow2(-static_cast<std::int64_t>(k));
    for (int l = 0; l <= 1; ++l) {
      pq.q_points.push_back(DyadicVec3{kOne, y, Dyadic(l)});
    }
  }
  pq.puncture = DyadicVec3{kOne, kOne, kHalf};
  return pq;
}

PLCurve embed_knot_in_ball(const KnotTypeId& id, const Ball& ball, int segments_per_crossing) {
  if (segments_per_crossing < 16) {
    throw std::invalid_argument("embed_knot_in_ball: insufficient sampling: need at least 16 segments per crossing");
  }
  const PLCurve& unit = unit_torus_curve(id.braid_parameter, segments_per_crossing);

  const double r = ball.radius.to_double();
  if (!(r > 0.0)) {
    throw std::invalid_argument("embed_knot_in_ball: ball radius underflows double precision");
  }
  PLCurve curve;
  curve.vertices.reserve(unit.vertices.size());
  for (const Vec3& v : unit.vertices) curve.vertices.push_back(v * r);
  // scaled vertices must stay distinct (deep balls can denormalize)
  for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
    const Vec3& a = curve.vertices[i];
    const Vec3& b = curve.vertices[(i + 1) % curve.vertices.size()];
    if (a.x == b.x && a.y == b.y && a.z == b.z) {
      throw std::invalid_argument("embed_knot_in_ball: ball radius underflows double precision");
    }
  }
  return curve;
}

const Ball& Configuration::ball_at(std::uint32_t n, std::uint32_t k, int l) const {
  for (const Ball& b : balls) {
    if (b.n == n && b.k == k && b.l == l) return b;
  }
  throw std::out_of_range("Configuration::ball_at: index outside truncation window");
}

const KnotSlot& Configuration::knot_at(std::uint32_t n, std::uint32_t k, int l) const {
  auto it = knots.find(GridIndex{n, k, l});
  if (it == knots.end()) {
    throw std::out_of_range("Configuration::knot_at: index outside truncation window");
  }
  return it->second;
}

bool PropertyReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
}

const PropertyReport::Entry& PropertyReport::entry(const std::string& name) const {
  for (const Entry& e : entries) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("PropertyReport: no entry " + name);
}

namespace {

// Squared distance from a ball center to every piece of P; used by the B3
// clearance check. All pieces are vertical segments or points with dyadic
// coordinates, so the comparison against the squared radius is exact.
bool ball_clear_of_p(const Ball& ball, const PQDescriptor& pq, std::string& witness) {
  const Dyadic r2 = sqr(ball.radius);
  for (const auto& stick : pq.sticks) {
    const Dyadic d2 = distance_squared_to_vertical_segment(ball.center, stick.x, kOne,
                                                           Dyadic(0), Dyadic(1));
    if (d2 <= r2) {
      witness = "stick at x=" + stick.x.to_decimal();
      return false;
    }
  }
  // both half-segments lie on the axis {1} x {1} x [0,1]; the puncture does
  // not change the infimum distance
  const Dyadic axis2 = distance_squared_to_vertical_segment(ball.center, kOne, kOne,
                                                            Dyadic(0), Dyadic(1));
  if (axis2 <= r2) {
    witness = "axis segment";
    return false;
  }
  for (const DyadicVec3& qp : pq.q_points) {
    if (distance_squared(ball.center, qp) <= r2) {
      witness = "q-point (" + qp.x.to_decimal() + "," + qp.y.to_decimal() + "," +
                qp.z.to_decimal() + ")";
      return false;
    }
  }
  return true;
}

std::string ball_name(const Ball& b) {
  return "(" + std::to_string(b.n) + "," + std::to_string(b.k) + "," + std::to_string(b.l) + ")";
}

}  // namespace

PropertyReport verify_properties(const Configuration& config) {
  PropertyReport report;
  const Dyadic two(2);

  // B1: pairwise disjoint, all inside B(0,2)
  {
    PropertyReport::Entry e{"B1", true, ""};
    for (std::size_t i = 0; i < config.balls.size() && e.pass; ++i) {
      for (std::size_t j = i + 1; j < config.balls.size(); ++j) {
        const Ball& a = config.balls[i];
        const Ball& b = config.balls[j];
        if (distance_squared(a.center, b.center) <= sqr(a.radius + b.radius)) {
          e.pass = false;
          e.witness = "balls " + ball_name(a) + " and " + ball_name(b) + " intersect";
          break;
        }
      }
    }
    if (e.pass) {
      for (const Ball& b : config.balls) {
        if (!(distance_squared(b.center, DyadicVec3{Dyadic(0), Dyadic(0), Dyadic(0)}) <
              sqr(two - b.radius))) {
          e.pass = false;
          e.witness = "ball " + ball_name(b) + " leaves B(0,2)";
          break;
        }
      }
    }
    if (e.pass) e.witness = std::to_string(config.balls.size()) + " balls pairwise disjoint in B(0,2)";
    report.entries.push_back(std::move(e));
  }

  // B2: limit points of center sequences with distinct indices. With one
  // index frozen the limits are the q-points (1, 1-2^-k, l) and
  // (1-2^-n, 1, l); with both indices unbounded they are the corner points
  // (1,1,l), which close up Q on the axis pieces. All must avoid every ball.
  {
    PropertyReport::Entry e{"B2", true, ""};
    std::vector<DyadicVec3> limits;
    for (std::uint32_t k = 0; k < config.cols && e.pass; ++k) {
      for (int l = 0; l <= 1; ++l) {
        const DyadicVec3 p{kOne, kOne - Dyadic::pow2(-static_cast<std::int64_t>(k)), Dyadic(l)};
        if (!config.pq.contains_q_point(p)) {
          e.pass = false;
          e.witness = "row limit for k=" + std::to_string(k) + " missing from Q";
          break;
        }
        limits.push_back(p);
      }
    }
    for (std::uint32_t n = 0; n < 2 * config.rows && e.pass; ++n) {
      for (int l = 0; l <= 1; ++l) {
        const DyadicVec3 p{kOne - Dyadic::pow2(-static_cast<std::int64_t>(n)), kOne, Dyadic(l)};
        if (!config.pq.contains_q_point(p)) {
          e.pass = false;
          e.witness = "column limit for n=" + std::to_string(n) + " missing from Q";
          break;
        }
        limits.push_back(p);
      }
    }
    for (int l = 0; l <= 1 && e.pass; ++l) {
      limits.push_back(DyadicVec3{kOne, kOne, Dyadic(l)});  // double limit
    }
    if (e.pass) {
      for (const DyadicVec3& p : limits) {
        for (const Ball& b : config.balls) {
          if (distance_squared(p, b.center) <= sqr(b.radius)) {
            e.pass = false;
            e.witness = "limit point inside ball " + ball_name(b);
            break;
          }
        }
        if (!e.pass) break;
      }
    }
    if (e.pass) e.witness = std::to_string(limits.size()) + " limit points, all in Q-closure and outside every ball";
    report.entries.push_back(std::move(e));
  }

  // B3: every component of P meets the closure of Q; positive clearance
  // between each ball and P.
  {
    PropertyReport::Entry e{"B3", true, ""};
    for (const auto& stick : config.pq.sticks) {
      const DyadicVec3 lo{stick.x, kOne, Dyadic(0)};
      const DyadicVec3 hi{stick.x, kOne, Dyadic(1)};
      if (!config.pq.contains_q_point(lo) || !config.pq.contains_q_point(hi)) {
        e.pass = false;
        e.witness = "stick at x=" + stick.x.to_decimal() + " has an endpoint outside Q";
        break;
      }
    }
    // Half-segment components contain the corner accumulation points
    // (1,1,0) and (1,1,1) of the grid, the closure of Q on the axis.
    if (e.pass) {
      for (const Ball& b : config.balls) {
        std::string w;
        if (!ball_clear_of_p(b, config.pq, w)) {
          e.pass = false;
          e.witness = "ball " + ball_name(b) + " touches P: " + w;
          break;
        }
      }
    }
    if (e.pass) e.witness = "all P components anchored in Q-closure; every ball has positive clearance";
    report.entries.push_back(std::move(e));
  }

  // B4: every curve inside the open ball, with sane polygon structure.
  {
    PropertyReport::Entry e{"B4", true, ""};
    for (const auto& [idx, slot] : config.knots) {
      const auto [n, k, l] = idx;
      const Ball& b = config.ball_at(n, k, l);
      const double r = b.radius.to_double();
      if (slot.curve.vertices.size() < 3) {
        e.pass = false;
        e.witness = "curve " + ball_name(b) + " has fewer than 3 vertices";
        break;
      }
      bool inside = true;
      for (const Vec3& v : slot.curve.vertices) {
        if (!(norm(v) < r)) {  // vertices are center-relative
          inside = false;
          break;
        }
      }
      if (!inside) {
        e.pass = false;
        e.witness = "curve " + ball_name(b) + " touches or leaves the open ball";
        break;
      }
      for (std::size_t i = 0; i < slot.curve.vertices.size(); ++i) {
        const Vec3& a = slot.curve.vertices[i];
        const Vec3& c = slot.curve.vertices[(i + 1) % slot.curve.vertices.size()];
        if (a.x == c.x && a.y == c.y && a.z == c.z) {
          e.pass = false;
          e.witness = "curve " + ball_name(b) + " has coincident consecutive vertices";
          break;
        }
      }
      if (!e.pass) break;
    }
    if (e.pass) e.witness = std::to_string(config.knots.size()) + " curves strictly inside their balls";
    report.entries.push_back(std::move(e));
  }

  // B5: structural path-metric certificate. The removed set is a finite
  // union of PL arcs (sticks, axis halves, knot polygons) and isolated
  // points, so it has dimension at most 1 < 2 and the complement of its
  // closure in the 3-sphere is path metric.
  {
    PropertyReport::Entry e{"B5", true, ""};
    const std::size_t arcs = config.pq.sticks.size() + 2 + config.knots.size();
    const std::size_t points = config.pq.q_points.size();
    e.witness = "removed set = " + std::to_string(arcs) + " PL arcs + " +
                std::to_string(points) + " points; dimension <= 1 < 2";
    report.entries.push_back(std::move(e));
  }

  return report;
}

std::string ComplementComponent::to_string() const {
  switch (tag) {
    case ComponentTag::Knot:
      return "KNOT(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
    case ComponentTag::Stick:
      return "STICK(" + std::to_string(n) + ")";
    case ComponentTag::Point:
      return "POINT(" + std::to_string(k) + "," + std::to_string(l) + ")";
    case ComponentTag::HalfLow:
      return "HALF_LOW";
    case ComponentTag::HalfHigh:
      return "HALF_HIGH";
  }
  return "?";
}

std::vector<ComplementComponent> complement_components(const Configuration& config) {
  const PropertyReport report = verify_properties(config);
  for (const auto& e : report.entries) {
    if (e.name != "B5" && !e.pass) {
      throw std::invalid_argument("complement_components: configuration fails " + e.name + ": " +
                                  e.witness);
    }
  }

  std::vector<ComplementComponent> out;
  for (std::uint32_t n = 0; n < 2 * config.rows; ++n) {
    for (std::uint32_t k = 0; k < config.cols; ++k) {
      for (int l = 0; l <= 1; ++l) {
        config.knot_at(n, k, l);  // must exist
        out.push_back(ComplementComponent{ComponentTag::Knot, n, k, l});
      }
    }
  }
  for (std::uint32_t n = 0; n < 2 * config.rows; ++n) {
    out.push_back(ComplementComponent{ComponentTag::Stick, n, 0, 0});
  }
  for (std::uint32_t k = 0; k < config.cols; ++k) {
    for (int l = 0; l <= 1; ++l) {
      out.push_back(ComplementComponent{ComponentTag::Point, 0, k, l});
    }
  }
  out.push_back(ComplementComponent{ComponentTag::HalfLow, 0, 0, 0});
  out.push_back(ComplementComponent{ComponentTag::HalfHigh, 0, 0, 0});
  return out;
}

CompactSample removed_set_sample(const Configuration& config, int axis_samples) {
  if (axis_samples < 4) throw std::invalid_argument("removed_set_sample: need at least 4 axis samples");
  CompactSample sample;
  double resolution = 0.0;

  for (const auto& [idx, slot] : config.knots) {
    const auto [n, k, l] = idx;
    const Ball& b = config.ball_at(n, k, l);
    const Vec3 center{b.center.x.to_double(), b.center.y.to_double(), b.center.z.to_double()};
    double max_seg = 0.0;
    for (std::size_t i = 0; i < slot.curve.vertices.size(); ++i) {
      const Vec3& v = slot.curve.vertices[i];
      const Vec3& w = slot.curve.vertices[(i + 1) % slot.curve.vertices.size()];
      max_seg = std::max(max_seg, distance(v, w));
      sample.points.push_back(center + v);
    }
    resolution = std::max(resolution, max_seg / 2.0 + 5e-16);
    // absolute coordinates absorb offsets below the double ulp at the
    // center; the collapsed sample still covers the curve within one radius
    const double r = b.radius.to_double();
    if (r < 1e-12) resolution = std::max(resolution, r);
  }

  const double step = 1.0 / axis_samples;
  for (const auto& stick : config.pq.sticks) {
    const double x = stick.x.to_double();
    for (int i = 0; i <= axis_samples; ++i) {
      sample.points.push_back({x, 1.0, i * step});
    }
  }
  for (int i = 0; i <= axis_samples; ++i) {
    const double z = i * step;
    if (z == 0.5) continue;  // the puncture is not part of the set
    sample.points.push_back({1.0, 1.0, z});
  }
  resolution = std::max(resolution, step);  // covers the gap at the puncture

  for (const DyadicVec3& qp : config.pq.q_points) {
    sample.points.push_back({qp.x.to_double(), qp.y.to_double(), qp.z.to_double()});
  }

  sample.resolution = resolution;
  return sample;
}

}  // namespace knotgrid
