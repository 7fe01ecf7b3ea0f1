#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace knotgrid {

/// Planar-diagram encoding of a knot diagram.
///
/// Each crossing lists the four edge labels around it counterclockwise,
/// starting from the incoming under-strand. Edges are labeled 1..2c
/// consecutively along the knot's traversal, so the under-strand entering a
/// crossing at label e leaves it at label e+1 (cyclically). The over-strand
/// direction is recovered from the same consecutive-labeling rule.
///
/// An empty crossing list encodes the crossingless unknot diagram.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  std::size_t crossing_count() const { return crossings.size(); }
  int edge_count() const { return static_cast<int>(2 * crossings.size()); }
};

struct PDDiagnostics {
  bool pass = true;
  std::vector<std::string> violations;
};

/// PD code of the closure of the 2-strand braid sigma_1^q, the (2,q) torus
/// knot, with exactly q crossings. Throws std::invalid_argument for even q
/// (the closure would be a 2-component link) and for q < 3.
PDCode torus_knot_pd(int q);

/// Checks the PDCode invariants: label multiplicity (each of 1..2c exactly
/// twice), under-strand successor consistency, and closure into a single
/// component. Diagnostics name the first violated invariant.
PDDiagnostics validate_pd(const PDCode& pd);

/// Sign of each crossing (+1 when the over-strand enters at tuple position
/// 3, -1 at position 1, with the under-strand entering at position 0).
/// Requires a valid code.
std::vector<int> crossing_signs(const PDCode& pd);

/// Sum of crossing signs.
int writhe(const PDCode& pd);

/// Faces of the underlying 4-valent plane graph together with a
/// checkerboard 2-coloring.
///
/// Darts are the 4c slots (crossing, position); a face is traced by
/// crossing an edge to its other slot and turning to the next position.
/// face_at(c, p) is the face touching the corner between positions p and
/// p+1 of crossing c. Adjacent corners around a crossing get opposite
/// colors.
struct DiagramFaces {
  std::vector<std::vector<std::pair<int, int>>> faces;
  std::vector<int> face_of_dart;  // indexed by 4*crossing + position
  std::vector<int> color;         // per face, 0 or 1

  int face_at(int crossing, int position) const {
    return face_of_dart[static_cast<std::size_t>(4 * crossing + position)];
  }
};

/// Traces faces and 2-colors them. Throws std::invalid_argument when the
/// code does not describe a planar knot diagram (wrong face count or no
/// checkerboard coloring).
DiagramFaces trace_faces(const PDCode& pd);

}  // namespace knotgrid
