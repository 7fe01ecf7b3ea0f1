#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "knotgrid/dyadic.hpp"
#include "knotgrid/geometry.hpp"
#include "knotgrid/metrics.hpp"
#include "knotgrid/pd_code.hpp"
#include "knotgrid/registry.hpp"

namespace knotgrid {

/// Closed ball of the grid: center (1-2^-n, 1-2^-k, l), radius
/// 2^(-4(n+1)(k+1)), all coordinates exact dyadics.
struct Ball {
  std::uint32_t n = 0, k = 0;
  int l = 0;
  DyadicVec3 center;
  Dyadic radius;
};

Ball ball_spec(std::uint32_t n, std::uint32_t k, int l);

/// Convex hull of the two balls of a column pair: a vertical capsule
/// spanning z in [0,1] around (1-2^-n, 1-2^-k).
struct Capsule {
  std::uint32_t n = 0, k = 0;
  Ball bottom;  // l = 0
  Ball top;     // l = 1
};

Capsule capsule(std::uint32_t n, std::uint32_t k);

/// Exact containment / separation predicates for capsules.
bool capsule_contains_ball(const Capsule& c, const Ball& b);
bool capsule_disjoint_from_ball(const Capsule& c, const Ball& b);

/// Certificate that capsule (n,k) is disjoint from every other ball of the
/// truncation window (rows < 2*rows_m, cols < cols_k).
struct CapsuleCertificate {
  bool disjoint = true;
  std::size_t checked = 0;
  std::string witness;  // offending ball when not disjoint
};

CapsuleCertificate capsule_certificate(std::uint32_t n, std::uint32_t k,
                                       std::uint32_t rows_m, std::uint32_t cols_k);

/// The non-ball part of the removed set at finite truncation: grid limit
/// points, vertical sticks, and the punctured axis segment.
struct PQDescriptor {
  struct Stick {
    Dyadic x;  // segment {x} x {1} x [0,1]
  };

  std::vector<DyadicVec3> q_points;
  std::vector<Stick> sticks;
  // The axis {1} x {1} x [0,1] minus the puncture splits into the two
  // half-open segments [0,1/2) and (1/2,1]; both are always present.
  DyadicVec3 puncture;

  bool contains_q_point(const DyadicVec3& p) const;
};

/// q_points for n < 2*rows_m and k < cols_k (both l values), sticks for
/// n < 2*rows_m, puncture at (1,1,1/2).
PQDescriptor pq_sets(std::uint32_t rows_m, std::uint32_t cols_k);

/// PL embedding of the (2,q) torus knot into the interior of a ball,
/// sampled on a torus with major radius radius/2 and minor radius radius/4
/// around the ball center. Vertices are stored relative to the center so
/// deep (tiny) balls keep full precision; there are
/// segments_per_crossing * q of them. Throws when the sampling is too
/// coarse (fewer than 16 segments per crossing or a self-intersecting
/// polygon at tolerance radius * 1e-6).
PLCurve embed_knot_in_ball(const KnotTypeId& id, const Ball& ball, int segments_per_crossing);

/// One knotted ball of a configuration.
struct KnotSlot {
  KnotTypeId type;
  PDCode pd;
  PLCurve curve;  // vertices relative to the ball center
};

using GridIndex = std::tuple<std::uint32_t, std::uint32_t, int>;  // (n, k, l)

/// Finite-truncation configuration: the ball grid for n < 2*rows, k < cols
/// with one embedded knot per ball, plus the PQ descriptor. Represents the
/// 3-sphere minus (sticks, axis, limit points and all knot curves), with
/// the distinguished puncture kept in the space.
struct Configuration {
  std::uint32_t rows = 0;  // M
  std::uint32_t cols = 0;  // K
  std::string registry_bijection = "2*cantor(n,k)+l";
  std::string registry_family = "T(2,2j+3)";
  std::vector<Ball> balls;            // ordered by (n, k, l)
  std::map<GridIndex, KnotSlot> knots;
  PQDescriptor pq;

  const Ball& ball_at(std::uint32_t n, std::uint32_t k, int l) const;
  const KnotSlot& knot_at(std::uint32_t n, std::uint32_t k, int l) const;
};

/// Report of the five structural properties of a configuration.
struct PropertyReport {
  struct Entry {
    std::string name;
    bool pass = false;
    std::string witness;
  };

  std::vector<Entry> entries;  // B1..B5 in order

  bool all_pass() const;
  const Entry& entry(const std::string& name) const;
};

/// B1: balls pairwise disjoint and inside B(0,2). B2: grid limit points
/// lie in Q and in no ball (decided symbolically from the exact formulas).
/// B3: every component of P meets the closure of Q and every ball has
/// strictly positive clearance from P. B4: every curve lies in the open
/// ball. B5: the removed set is a finite union of PL arcs and points
/// (dimension at most 1), so the complement is path metric.
PropertyReport verify_properties(const Configuration& config);

enum class ComponentTag { Knot, Stick, Point, HalfLow, HalfHigh };

/// One connected component of the removed set at truncation scale.
struct ComplementComponent {
  ComponentTag tag;
  std::uint32_t n = 0, k = 0;
  int l = 0;

  std::string to_string() const;
};

/// Enumerates the components: 4MK knots, 2M sticks, 2K singleton points
/// and the two half-segments. Refuses configurations failing B1-B4.
std::vector<ComplementComponent> complement_components(const Configuration& config);

/// Point sample of the full removed set (knots, sticks, axis halves and
/// q-points) with an honest covering resolution; axis pieces are sampled
/// with about axis_samples points each.
CompactSample removed_set_sample(const Configuration& config, int axis_samples = 64);

}  // namespace knotgrid
