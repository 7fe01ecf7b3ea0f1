#pragma once

#include <cstdint>
#include <vector>

#include "knotgrid/geometry.hpp"

namespace knotgrid {

/// Open interval (lo/den, hi/den) with exact integer endpoints.
struct Interval {
  std::int64_t lo = 0, hi = 0, den = 1;

  double lo_value() const { return static_cast<double>(lo) / static_cast<double>(den); }
  double hi_value() const { return static_cast<double>(hi) / static_cast<double>(den); }
};

/// Geometric realization of a finite strict linear order: one open interval
/// per element placed along [0,1] so that sup U_i <= inf U_j exactly when
/// i precedes j (equality exactly at immediate successors), each interval
/// carrying a chain of four consecutively linked closed curves whose
/// terminal component is a trefoil.
struct ChainConfiguration {
  std::size_t size = 0;
  std::vector<int> order;             // order[position] = element
  std::vector<Interval> intervals;    // indexed by element
  std::vector<std::vector<PLCurve>> chains;  // indexed by element; absolute coordinates
};

/// Builds the configuration for the order given as a permutation of
/// 0..N-1 listing the elements from least to greatest. All chain geometry
/// is pairwise disjoint. Throws for an empty or non-permutation input.
ChainConfiguration build_order_configuration(const std::vector<int>& order);

/// Number of curve components per interval.
inline constexpr std::size_t kChainComponents = 4;

}  // namespace knotgrid
