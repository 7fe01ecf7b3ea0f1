#pragma once

#include <cstdint>
#include <string>

#include "knotgrid/laurent.hpp"
#include "knotgrid/pd_code.hpp"
#include "knotgrid/registry.hpp"

namespace knotgrid {

/// Hard cap on the state-sum size: 2^24 smoothing states.
inline constexpr std::size_t kMaxStateSumCrossings = 24;

/// Kauffman bracket in the variable A.
///
/// Sum over all 2^c smoothing states of A^(a-b) * delta^(loops-1) with
/// delta = -A^2 - A^-2, where a and b count the two smoothing choices.
/// The A-smoothing of a crossing (t0,t1,t2,t3) joins t0-t1 and t2-t3; the
/// B-smoothing joins t0-t3 and t1-t2. (This pairing is forced, given the
/// sign convention of crossing_signs, by the requirement that a single
/// Reidemeister-I kink cancel against the writhe normalization.)
/// The crossingless unknot evaluates to 1.
///
/// Throws std::invalid_argument for invalid codes and for diagrams above
/// the crossing cap (state-space overflow).
LaurentPolynomial kauffman_bracket(const PDCode& pd);

/// Jones polynomial (-A)^(-3w) * <pd> under A = t^(-1/4), in the variable
/// t with exponents stored times 4 (quarter-exponent storage). Same
/// preconditions as kauffman_bracket.
LaurentPolynomial jones_polynomial(const PDCode& pd);

/// Alexander polynomial of the (2,q) torus knot, q odd >= 3: det(V - tV^T)
/// for the Seifert matrix V of the genus-(q-1)/2 surface (size q-1, with
/// -1 on the diagonal and +1 on the first superdiagonal), normalized so
/// that coeff(e) == coeff(-e).
LaurentPolynomial alexander_of_two_braid(int q);

/// |Delta(-1)| of the knot type; equals the braid parameter for this
/// family. Evaluated by the integer recurrence for det(V + V^T) minors.
std::uint64_t knot_determinant(const KnotTypeId& id);

/// Knot determinant computed from a diagram via the Goeritz matrix of a
/// checkerboard coloring. Polynomial in the crossing count, so it stays
/// feasible where the state sum does not. Diagram must be a valid single
/// component code.
std::uint64_t pd_determinant(const PDCode& pd);

/// Evidence that two registry types are distinct (or not), witnessed by a
/// computable invariant value on both sides.
struct InvariantCertificate {
  enum class Verdict { distinct, indistinguishable };

  KnotTypeId left_id;
  KnotTypeId right_id;
  std::string witness_invariant;
  std::string left_value;
  std::string right_value;
  Verdict verdict = Verdict::indistinguishable;
};

/// Distinct whenever the braid parameters (and hence the determinants)
/// differ; indistinguishable exactly for identical ids.
InvariantCertificate certify_distinct(const KnotTypeId& a, const KnotTypeId& b);

}  // namespace knotgrid
