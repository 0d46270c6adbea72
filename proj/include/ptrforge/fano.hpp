#pragma once

#include <array>
#include <optional>

#include "ptrforge/coordinatiser.hpp"
#include "ptrforge/plane.hpp"

namespace ptrforge {

/// Seven points and seven lines, three points per line and three lines per
/// point, found as a quadrangle whose diagonal points are collinear.
struct FanoWitness {
  std::array<PointIndex, 7> points;  // ascending
  std::array<LineIndex, 7> lines;    // ascending
  std::array<PointIndex, 4> quadrangle;
  std::array<PointIndex, 3> diagonal;
};

// Lexicographically least quadrangle (as a sorted 4-set) with collinear
// diagonal points, assembled into a witness.
std::optional<FanoWitness> find_fano_direct(const IncidencePlane& plane, unsigned threads = 0);

// Checks the 7/7 incidence counts and that the quadrangle and diagonal are
// consistent with the listed points. Throws InvalidWitness.
void validate_witness(const IncidencePlane& plane, const FanoWitness& w);

/// Coordinatises from a witness so that t (+) t = 0. The triangle O, X, Y is
/// the first non-collinear triple of witness points; the third points on OX,
/// OY and XY become (t,0), (0,t) and J, and the last point is (t,t).
Coordinatisation fano_to_involutive_coordinatisation(const IncidencePlane& plane, const FanoWitness& w, Elem t);

// Builds the witness O, X, Y, (t,0), (0,t), J, (t,t) from an involution t of
// the additive loop. Throws InvalidWitness when t (+) t != 0.
FanoWitness fano_from_involution(const Coordinatisation& coord, Elem t);

}  // namespace ptrforge
