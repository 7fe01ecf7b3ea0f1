#pragma once

#include <cstdint>

namespace knotgrid {

/// Identifier of one knot type in the fixed family: the j-th type is the
/// (2, 2j+3) torus knot, so braid_parameter is always odd and at least 3.
struct KnotTypeId {
  std::uint64_t index = 0;            // j
  std::uint64_t braid_parameter = 3;  // q = 2j + 3

  bool operator==(const KnotTypeId&) const = default;
};

/// Cantor pairing (n+k)(n+k+1)/2 + k.
std::uint64_t cantor_pair(std::uint64_t n, std::uint64_t k);

/// The (n,k,l) |-> knot type bijection: j = 2*cantor(n,k) + l. Distinct
/// triples yield distinct braid parameters. l must be 0 or 1.
KnotTypeId registry_type(std::uint64_t n, std::uint64_t k, int l);

/// Type with the given index j.
KnotTypeId registry_type_by_index(std::uint64_t j);

}  // namespace knotgrid
