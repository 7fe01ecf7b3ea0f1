#include "knotgrid/registry.hpp"

#include <stdexcept>

namespace knotgrid {

std::uint64_t cantor_pair(std::uint64_t n, std::uint64_t k) {
  std::uint64_t s = n + k;
  return s * (s + 1) / 2 + k;
}

KnotTypeId registry_type(std::uint64_t n, std::uint64_t k, int l) {
  if (l != 0 && l != 1) throw std::invalid_argument("registry_type: l must be 0 or 1");
  return registry_type_by_index(2 * cantor_pair(n, k) + static_cast<std::uint64_t>(l));
}

KnotTypeId registry_type_by_index(std::uint64_t j) {
  return KnotTypeId{j, 2 * j + 3};
}

}  // namespace knotgrid
