#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ptrforge/field.hpp"
#include "ptrforge/ternary.hpp"

namespace ptrforge {

using PointIndex = std::uint32_t;
using LineIndex = std::uint32_t;

inline constexpr std::uint32_t kNone = 0xFFFFFFFFu;

using LineSets = std::vector<std::vector<PointIndex>>;

/// Checks the projective plane axioms on raw incidence data and returns the
/// order. Throws Error(AxiomViolation) naming the first violated axiom; the
/// witness holds the offending point or line indices.
std::size_t validate_plane(std::size_t num_points, const LineSets& lines);

/// A validated finite projective plane of order n.
///
/// Lines are stored sorted and in lexicographic order, so two planes built
/// from the same line sets have identical line indices. Join and meet are
/// precomputed; the handle is cheap to copy and immutable.
class IncidencePlane {
 public:
  static IncidencePlane from_lines(std::size_t num_points, LineSets lines);

  std::size_t order() const noexcept;
  std::size_t num_points() const noexcept;
  std::size_t num_lines() const noexcept;

  std::span<const PointIndex> points_on(LineIndex line) const noexcept;
  std::span<const LineIndex> lines_through(PointIndex point) const noexcept;
  const LineSets& lines() const noexcept;

  bool incident(PointIndex point, LineIndex line) const noexcept;
  // kNone when the arguments coincide.
  LineIndex join(PointIndex a, PointIndex b) const noexcept;
  PointIndex meet(LineIndex a, LineIndex b) const noexcept;
  bool collinear(PointIndex a, PointIndex b, PointIndex c) const noexcept;
  bool is_quadrangle(PointIndex a, PointIndex b, PointIndex c, PointIndex d) const noexcept;

  // The line index of an exact point set, if it is a line of the plane.
  std::optional<LineIndex> find_line(std::span<const PointIndex> sorted_points) const;

  // Points and lines swap roles; point i of the dual is line i here.
  IncidencePlane dual() const;

  friend bool operator==(const IncidencePlane& a, const IncidencePlane& b) {
    return a.num_points() == b.num_points() && a.lines() == b.lines();
  }

 private:
  struct Data;
  explicit IncidencePlane(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// PG(2,q): points are normalised nonzero vectors of F_q^3 (first nonzero
/// coordinate 1) indexed in lexicographic order of their encodings.
IncidencePlane desarguesian_plane(const Field& field);

// Index in desarguesian_plane(field) of the point with homogeneous
// coordinates v (any nonzero scalar multiple is accepted).
PointIndex pg_point_index(const Field& field, const std::array<Elem, 3>& v);

/// The frame O=(0:0:1), X=(1:0:0), Y=(0:1:0), I=(1:1:1) of PG(2,q) together
/// with the vertical labelling a -> (0:a:1) for a = 2..q-1. Coordinatising
/// with it reproduces field addition and multiplication.
struct PgStandardFrame {
  PointIndex O, X, Y, I;
  std::vector<PointIndex> vertical;  // entry i labels element i+2
};
PgStandardFrame pg_standard_frame(const Field& field);

// Lexicographically least quadrangle as an ascending 4-set.
std::array<PointIndex, 4> least_quadrangle(const IncidencePlane& plane);

/// Point and line indices used by plane_from_ptr: affine (x,y) is x*q+y,
/// slope point (m) is q^2+m, (inf) is q^2+q.
struct PtrPlaneIndex {
  std::uint32_t q;
  PointIndex affine(Elem x, Elem y) const noexcept { return x * q + y; }
  PointIndex slope(Elem m) const noexcept { return q * q + m; }
  PointIndex infinity() const noexcept { return q * q + q; }
};

/// Builds the projective completion of the affine plane defined by a weak
/// PTR: lines [m,k] = {(x,y) : T(m,x,y) = k} + (m), [c] = {(c,y)} + (inf),
/// and [inf]. Throws Error(NotWeakPTR) when (c), (d) or (e) fails.
IncidencePlane plane_from_ptr(const TernaryTable& table);

struct QuasifieldPlane {
  TernaryTable table;
  IncidencePlane plane;
  bool right_distributive;  // (x+y)*z = x*z + y*z
  bool left_distributive;   // z*(x+y) = z*x + z*y
};

/// Linear PTR T(m,x,y) = (m*x) + y from an additive group and a quasifield
/// multiplication (full q x q table including zero). Throws NotQuasifield.
QuasifieldPlane plane_from_quasifield(const Field& field, const LoopTable& add, const LoopTable& mul);

/// Exhaustive Desargues-configuration search over every center P and every
/// pair of triangles ABC, A'B'C' in perspective from P. Returns the first
/// violating configuration (P, A, A', B, B', C, C') in canonical order: least
/// center, then line triples through P in index order, then point indices.
std::optional<std::vector<PointIndex>> desargues_violation(const IncidencePlane& plane, unsigned threads = 0);
bool is_desarguesian(const IncidencePlane& plane, unsigned threads = 0);

}  // namespace ptrforge
