#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptrforge/field.hpp"
#include "ptrforge/plane.hpp"
#include "ptrforge/ternary.hpp"

namespace ptrforge {

struct PointLabel {
  enum class Kind { Affine, Slope, Infinity } kind;
  Elem a = 0;  // x for (x,y), m for (m)
  Elem b = 0;  // y for (x,y)
  friend bool operator==(const PointLabel&, const PointLabel&) = default;
};

struct LineLabel {
  enum class Kind { Line, Vertical, Infinity } kind;
  Elem a = 0;  // m for [m,k], c for [c]
  Elem b = 0;  // k for [m,k]
  friend bool operator==(const LineLabel&, const LineLabel&) = default;
};

std::string to_string(const PointLabel& label);
std::string to_string(const LineLabel& label);

/// A complete labelling of a plane of order q by F_q, following the frame
/// O = (0,0), X = (0), Y = (inf), I = (1,1) and J = (1):
///
///   [inf] = XY, [0] = OY, [0,0] = OX,
///   (0,1) = XI . [0],  (1,0) = YI . [0,0],  J = (1,0)(0,1) . [inf],
///   (a,0) = (0,a)J . [0,0],  (a) = (0,a)(1,0) . [inf],
///   (a,b) = (a,0)Y . (0,b)X,  [m,k] = (m)(0,k),  [c] = (c,0)Y,
///
/// and T(m,x,y) = k iff (x,y) lies on [m,k].
class Coordinatisation {
 public:
  const IncidencePlane& plane() const noexcept { return plane_; }
  const Field& field() const noexcept { return field_; }
  const TernaryTable& table() const noexcept { return table_; }

  PointIndex O() const noexcept { return affine(0, 0); }
  PointIndex X() const noexcept { return slope(0); }
  PointIndex Y() const noexcept { return infinity_; }
  PointIndex I() const noexcept { return affine(1, 1); }
  PointIndex J() const noexcept { return slope(1); }

  PointIndex affine(Elem x, Elem y) const noexcept { return affine_[x * q_ + y]; }
  PointIndex slope(Elem m) const noexcept { return slope_[m]; }
  PointIndex infinity() const noexcept { return infinity_; }
  LineIndex line(Elem m, Elem k) const noexcept { return line_[m * q_ + k]; }
  LineIndex vertical(Elem c) const noexcept { return vertical_[c]; }
  LineIndex line_at_infinity() const noexcept { return line_inf_; }

  const PointLabel& point_label(PointIndex p) const noexcept { return point_label_[p]; }
  const LineLabel& line_label(LineIndex l) const noexcept { return line_label_[l]; }

  // Points (0,a) of [0] in label order; entries 2.. are the vertical labelling.
  std::vector<PointIndex> vertical_points() const;

 private:
  friend Coordinatisation build_coordinatisation(const IncidencePlane&, const Field&, PointIndex, PointIndex,
                                                 PointIndex, PointIndex, const std::vector<PointIndex>&);
  Coordinatisation(IncidencePlane plane, Field field, TernaryTable table)
      : plane_(std::move(plane)), field_(std::move(field)), table_(std::move(table)), q_(field_.q()) {}

  IncidencePlane plane_;
  Field field_;
  TernaryTable table_;
  std::size_t q_;
  std::vector<PointIndex> affine_, slope_;
  PointIndex infinity_ = kNone;
  std::vector<LineIndex> line_, vertical_;
  LineIndex line_inf_ = kNone;
  std::vector<PointLabel> point_label_;
  std::vector<LineLabel> line_label_;
};

/// Coordinatises `plane` at the quadrangle O, X, Y, I.
///
/// `vertical` (optional) lists the points of [0] receiving labels 2..q-1, in
/// that order; by default the remaining points of [0] are labelled in index
/// order. The table is checked against all five coordinatisation properties.
/// Errors: NotQuadrangle, OrderNotPrimePower, FieldMismatch, LabellingInvalid.
Coordinatisation coordinatise(const IncidencePlane& plane, PointIndex O, PointIndex X, PointIndex Y, PointIndex I,
                              const std::optional<std::vector<PointIndex>>& vertical = std::nullopt);
Coordinatisation coordinatise(const IncidencePlane& plane, const Field& field, PointIndex O, PointIndex X,
                              PointIndex Y, PointIndex I,
                              const std::optional<std::vector<PointIndex>>& vertical = std::nullopt);

enum class LoopOp { Add, Mul };

struct TraceStep {
  std::string what;  // e.g. "(a,0)" or "line(J,(a,b))"
  bool is_line = false;
  std::uint32_t index = 0;
};

struct VerticalAction {
  Elem result = 0;
  std::vector<TraceStep> trace;
};

/// Recomputes a (+) b or a (.) b geometrically on the vertical line [0]:
///   add: (0,k) = line(J,(a,b)) . [0];  mul: (0,k) = line((a),(b,0)) . [0].
/// The answer is cross-checked against the table (InternalContradiction).
VerticalAction trace_vertical_action(const Coordinatisation& coord, LoopOp op, Elem a, Elem b);

/// Labels [0] through the elation group with center Y and axis XY so that
/// (+) is field addition. Errors: NotTransitive, GroupNotElementaryAbelian.
Coordinatisation coordinatise_additive_optimal(const IncidencePlane& plane, PointIndex O, PointIndex X, PointIndex Y);

/// Labels [0,0] through the homology group with center X and axis OY so that
/// (.) is field multiplication. Errors: NotTransitive, GroupNotCyclic.
Coordinatisation coordinatise_multiplicative_optimal(const IncidencePlane& plane, PointIndex O, PointIndex X,
                                                     PointIndex Y);

struct SubplaneRestriction {
  std::vector<Elem> labels;  // S = {x : (x,0) in the subplane}, ascending
  TernaryTable table;        // T on S, relabelled by rank in S
};

/// Restricts the ternary ring to a subplane given by its point set. The
/// subplane's incidence is checked, closure of T on S is asserted, and the
/// restricted table must satisfy all five properties.
/// Errors: QuadrangleNotInSubplane, AxiomViolation, OrderNotPrimePower.
SubplaneRestriction restrict_to_subplane(const Coordinatisation& coord, std::vector<PointIndex> sub_points);

}  // namespace ptrforge
