#include "knotgrid/chain.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace knotgrid {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kCircleVerts = 48;
constexpr int kTrefoilVerts = 96;

// Circle of radius rho around (cx,0,0); its plane contains the x axis and
// alternates between the xy and xz planes so consecutive links interlock.
PLCurve chain_circle(double cx, double rho, bool xz_plane) {
  PLCurve c;
  c.vertices.reserve(kCircleVerts);
  for (int i = 0; i < kCircleVerts; ++i) {
    const double a = 2.0 * kPi * i / kCircleVerts;
    const double u = rho * std::cos(a), v = rho * std::sin(a);
    if (xz_plane) {
      c.vertices.push_back({cx + u, 0.0, v});
    } else {
      c.vertices.push_back({cx + u, v, 0.0});
    }
  }
  return c;
}

// Trefoil on a torus whose core circle lies in the xz plane around
// (cx,0,0): it takes the place of the final (odd-position) chain link,
// marking the end of the chain by its knot type. major + minor = rho keeps
// its extent equal to the plain links'.
PLCurve chain_trefoil(double cx, double rho) {
  PLCurve c;
  c.vertices.reserve(kTrefoilVerts);
  const double major = 0.8 * rho, minor = 0.2 * rho;
  for (int i = 0; i < kTrefoilVerts; ++i) {
    const double u = 2.0 * kPi * i / kTrefoilVerts;
    const double w = major + minor * std::cos(3.0 * u);
    c.vertices.push_back({cx + w * std::cos(2.0 * u), minor * std::sin(3.0 * u),
                          w * std::sin(2.0 * u)});
  }
  return c;
}

}  // namespace

ChainConfiguration build_order_configuration(const std::vector<int>& order) {
  const std::size_t n = order.size();
  if (n == 0) throw std::invalid_argument("build_order_configuration: empty order");
  std::vector<bool> seen(n, false);
  for (int e : order) {
    if (e < 0 || static_cast<std::size_t>(e) >= n || seen[static_cast<std::size_t>(e)]) {
      throw std::invalid_argument("build_order_configuration: order is not a permutation of 0..N-1");
    }
    seen[static_cast<std::size_t>(e)] = true;
  }

  ChainConfiguration cfg;
  cfg.size = n;
  cfg.order = order;
  cfg.intervals.resize(n);
  cfg.chains.resize(n);

  for (std::size_t pos = 0; pos < n; ++pos) {
    const int element = order[pos];
    Interval iv;
    iv.lo = static_cast<std::int64_t>(pos);
    iv.hi = static_cast<std::int64_t>(pos) + 1;
    iv.den = static_cast<std::int64_t>(n);
    cfg.intervals[static_cast<std::size_t>(element)] = iv;

    // chain laid out strictly inside the open interval: 5% margins, four
    // links at spacing d with radius 0.7*d (< d ensures consecutive links
    // interlock without touching, since adjacent planes are orthogonal)
    const double a = iv.lo_value(), b = iv.hi_value();
    const double w = b - a;
    const double usable = 0.9 * w;
    const double d = usable / static_cast<double>(kChainComponents);
    const double rho = 0.7 * d;
    const double x0 = a + 0.05 * w + d / 2.0;

    auto& parts = cfg.chains[static_cast<std::size_t>(element)];
    for (std::size_t j = 0; j < kChainComponents; ++j) {
      const double cx = x0 + d * static_cast<double>(j);
      if (j + 1 == kChainComponents) {
        parts.push_back(chain_trefoil(cx, rho));
      } else {
        parts.push_back(chain_circle(cx, rho, j % 2 == 1));
      }
    }
  }
  return cfg;
}

}  // namespace knotgrid
