#pragma once

#include <string>

#include "knotgrid/chain.hpp"
#include "knotgrid/construction.hpp"
#include "knotgrid/laurent.hpp"
#include "knotgrid/metrics.hpp"
#include "knotgrid/reduction.hpp"

namespace knotgrid {

/// Configuration JSON. Dyadic centers and radii are exact decimal strings;
/// curve vertices are doubles relative to the ball center. Key order and
/// number formatting are deterministic, so equal configurations serialize
/// to identical bytes.
std::string configuration_to_json(const Configuration& config);
Configuration configuration_from_json(const std::string& text);

/// Chain configurations serialize to their own JSON document (intervals as
/// exact integer fractions plus the chain polylines).
std::string chain_to_json(const ChainConfiguration& chain);
ChainConfiguration chain_from_json(const std::string& text);

/// Laurent polynomial as a JSON object mapping decimal exponent strings to
/// integer coefficients.
std::string laurent_to_json(const LaurentPolynomial& poly);

/// Matching as {"rho":[[[n,k,l],[n,k,l]],...],"certificates":[...]}.
std::string matching_to_json(const Matching& matching);

/// Bit array text format: one line of 0/1 characters per row; blank lines
/// and '#' comments are ignored; the shape is inferred.
BitArray bit_array_from_text(const std::string& text);
std::string bit_array_to_text(const BitArray& bits);

/// Point cloud file: one "x y z" triple per line, '#' comments. The stated
/// resolution of the returned sample is 0.
CompactSample point_cloud_from_text(const std::string& text);

/// Wavefront OBJ polylines: one object per knot curve (absolute
/// coordinates) or one per chain component.
std::string configuration_to_obj(const Configuration& config);
std::string chain_to_obj(const ChainConfiguration& chain);

}  // namespace knotgrid
