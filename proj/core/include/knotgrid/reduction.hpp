#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knotgrid/construction.hpp"
#include "knotgrid/invariants.hpp"
#include "knotgrid/registry.hpp"

namespace knotgrid {

/// Finite truncation of a sequence of binary sequences: M rows of K bits;
/// row m holds the first K bits of the m-th sequence.
struct BitArray {
  std::uint32_t rows = 0;  // M
  std::uint32_t cols = 0;  // K
  std::vector<std::uint8_t> bits;  // row-major, values 0/1

  static BitArray zeros(std::uint32_t rows, std::uint32_t cols);

  std::uint8_t at(std::uint32_t row, std::uint32_t col) const;
  void set(std::uint32_t row, std::uint32_t col, std::uint8_t value);

  bool operator==(const BitArray&) const = default;
};

/// Finite-truncation witness of the tail equivalence: rows m..M-1 agree.
/// Requires equal shapes and m <= M.
bool e1_equivalent_within(const BitArray& r, const BitArray& s, std::uint32_t m);

/// Index of the first row >= m where the arrays differ, if any.
std::optional<std::uint32_t> first_differing_row(const BitArray& r, const BitArray& s,
                                                 std::uint32_t m = 0);

/// Knot type of the ball (n,k,l): odd rows carry the calibration types
/// P(n,k,l) unconditionally; even rows carry P(n,k,l) when bit (n/2, k) is
/// clear and P(n,k,1-l) when set.
KnotTypeId assign_knot_type(std::uint32_t n, std::uint32_t k, int l, const BitArray& r);

/// Builds the geometric configuration for a bit array: the full ball grid
/// with n < 2M, k < K, one embedded knot per ball typed by
/// assign_knot_type, and the PQ descriptor. Deterministic in its inputs.
Configuration build_configuration(const BitArray& r, int segments_per_crossing = 32);

enum class DecodeMode { trusted, verified };

/// Recovers the bit array from a configuration. Bit (m, k) is 0 exactly
/// when ball (2m, k, 0) carries the type of index registry_type(2m,k,0).
/// Verified mode recomputes every stored diagram's determinant via
/// pd_determinant and cross-checks the capsule partner; it throws
/// "type corruption" on any mismatch with the stored index and
/// "unknown type" when a determinant matches neither candidate.
BitArray decode_configuration(const Configuration& config, DecodeMode mode = DecodeMode::trusted);

/// The forced capsule-preserving bijection between the ball indices of two
/// configurations matching equal knot types, with invariant certificates
/// per matched pair.
struct Matching {
  struct Pair {
    GridIndex from;
    GridIndex to;
  };

  std::vector<Pair> rho;
  std::vector<InvariantCertificate> certificates;
};

/// Throws "no matching" when shapes or registries differ or some knot type
/// of `c` is absent from `cp`.
Matching match_configurations(const Configuration& c, const Configuration& cp);

/// Shadow of the reduction at truncation: decodes both configurations and
/// compares tails from row m on.
bool configurations_equivalent_within(const Configuration& c, const Configuration& cp,
                                      std::uint32_t m);

/// 2^(1-4(2D+1)): if two arrays agree on all rows below D, every differing
/// knot lives in a ball of diameter at most this bound, so the Hausdorff
/// distance of the removed-set samples stays within bound + sampling error.
double continuity_bound(std::uint32_t d);

}  // namespace knotgrid
