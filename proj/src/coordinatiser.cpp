#include "ptrforge/coordinatiser.hpp"

#include <algorithm>
#include <map>

#include "ptrforge/collineation.hpp"
#include "ptrforge/error.hpp"
#include "ptrforge/properties.hpp"

namespace ptrforge {

std::string to_string(const PointLabel& label) {
  switch (label.kind) {
    case PointLabel::Kind::Affine: return "(" + std::to_string(label.a) + "," + std::to_string(label.b) + ")";
    case PointLabel::Kind::Slope: return "(" + std::to_string(label.a) + ")";
    case PointLabel::Kind::Infinity: return "(inf)";
  }
  return {};
}

std::string to_string(const LineLabel& label) {
  switch (label.kind) {
    case LineLabel::Kind::Line: return "[" + std::to_string(label.a) + "," + std::to_string(label.b) + "]";
    case LineLabel::Kind::Vertical: return "[" + std::to_string(label.a) + "]";
    case LineLabel::Kind::Infinity: return "[inf]";
  }
  return {};
}

std::vector<PointIndex> Coordinatisation::vertical_points() const {
  std::vector<PointIndex> v(q_);
  for (Elem a = 0; a < q_; ++a) v[a] = affine(0, a);
  return v;
}

Coordinatisation build_coordinatisation(const IncidencePlane& plane, const Field& field, PointIndex O, PointIndex X,
                                        PointIndex Y, PointIndex I, const std::vector<PointIndex>& vertical) {
  const Elem q = field.q();
  const auto meet_of = [&](PointIndex a, PointIndex b, LineIndex l) { return plane.meet(plane.join(a, b), l); };
  const LineIndex l_inf = plane.join(X, Y), l_0 = plane.join(O, Y), l_00 = plane.join(O, X);

  std::vector<PointIndex> vert(q);
  vert[0] = O;
  vert[1] = meet_of(X, I, l_0);
  for (Elem a = 2; a < q; ++a) vert[a] = vertical[a - 2];
  const PointIndex p10 = meet_of(Y, I, l_00);
  const PointIndex J = meet_of(p10, vert[1], l_inf);

  std::vector<PointIndex> horiz(q), slope(q);
  for (Elem a = 0; a < q; ++a) {
    horiz[a] = meet_of(vert[a], J, l_00);
    slope[a] = meet_of(vert[a], p10, l_inf);
  }

  std::vector<PointIndex> affine(std::size_t{q} * q);
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y) affine[x * q + y] = plane.meet(plane.join(horiz[x], Y), plane.join(vert[y], X));

  std::vector<std::int64_t> vertical_label(plane.num_points(), -1);
  for (Elem a = 0; a < q; ++a) vertical_label[vert[a]] = a;

  std::vector<Elem> values(std::size_t{q} * q * q);
  for (Elem m = 0; m < q; ++m)
    for (Elem x = 0; x < q; ++x)
      for (Elem y = 0; y < q; ++y) {
        const auto k = vertical_label[meet_of(slope[m], affine[x * q + y], l_0)];
        if (k < 0) throw Error(Errc::InternalContradiction, "line of slope m misses the affine part of [0]", {m, x, y});
        values[(m * q + x) * q + y] = static_cast<Elem>(k);
      }

  Coordinatisation c(plane, field, TernaryTable(field, std::move(values)));
  c.affine_ = std::move(affine);
  c.slope_ = std::move(slope);
  c.infinity_ = Y;
  c.line_inf_ = l_inf;
  c.line_.resize(std::size_t{q} * q);
  c.vertical_.resize(q);
  for (Elem m = 0; m < q; ++m)
    for (Elem k = 0; k < q; ++k) c.line_[m * q + k] = plane.join(c.slope_[m], vert[k]);
  for (Elem x = 0; x < q; ++x) c.vertical_[x] = plane.join(horiz[x], Y);

  // Every point and line must receive exactly one label.
  c.point_label_.assign(plane.num_points(), PointLabel{PointLabel::Kind::Infinity});
  c.line_label_.assign(plane.num_lines(), LineLabel{LineLabel::Kind::Infinity});
  std::vector<char> seen_p(plane.num_points(), 0), seen_l(plane.num_lines(), 0);
  const auto mark = [](std::vector<char>& seen, std::uint32_t i) {
    if (i == kNone || seen[i]) throw Error(Errc::InternalContradiction, "labelling is not a bijection", {i});
    seen[i] = 1;
  };
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y) {
      const auto p = c.affine(x, y);
      mark(seen_p, p);
      c.point_label_[p] = {PointLabel::Kind::Affine, x, y};
      const auto l = c.line(x, y);
      mark(seen_l, l);
      c.line_label_[l] = {LineLabel::Kind::Line, x, y};
    }
  for (Elem m = 0; m < q; ++m) {
    mark(seen_p, c.slope(m));
    c.point_label_[c.slope(m)] = {PointLabel::Kind::Slope, m, 0};
    mark(seen_l, c.vertical(m));
    c.line_label_[c.vertical(m)] = {LineLabel::Kind::Vertical, m, 0};
  }
  mark(seen_p, Y);
  mark(seen_l, l_inf);

  if (!check_ptr_properties(c.table()).ptr()) {
    throw Error(Errc::InternalContradiction, "extracted table violates the coordinatisation properties");
  }
  return c;
}

Coordinatisation coordinatise(const IncidencePlane& plane, const Field& field, PointIndex O, PointIndex X,
                              PointIndex Y, PointIndex I, const std::optional<std::vector<PointIndex>>& vertical) {
  if (field.q() != plane.order()) {
    throw Error(Errc::FieldMismatch, "field order differs from plane order",
                {field.q(), static_cast<std::int64_t>(plane.order())});
  }
  if (!plane.is_quadrangle(O, X, Y, I)) throw Error(Errc::NotQuadrangle, "O, X, Y, I is not a quadrangle", {O, X, Y, I});

  const Elem q = field.q();
  const LineIndex l_0 = plane.join(O, Y);
  const PointIndex p01 = plane.meet(plane.join(X, I), l_0);
  std::vector<PointIndex> labels;
  if (vertical) {
    labels = *vertical;
    if (labels.size() != q - 2) {
      throw Error(Errc::LabellingInvalid, "vertical labelling must list q-2 points",
                  {static_cast<std::int64_t>(labels.size())});
    }
    std::vector<PointIndex> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const auto p = sorted[i];
      if (p >= plane.num_points() || !plane.incident(p, l_0) || p == O || p == Y || p == p01 ||
          (i > 0 && sorted[i - 1] == p)) {
        throw Error(Errc::LabellingInvalid, "vertical labelling is not a bijection onto [0] minus O, (0,1), Y", {p});
      }
    }
  } else {
    for (auto p : plane.points_on(l_0))
      if (p != O && p != Y && p != p01) labels.push_back(p);
  }
  return build_coordinatisation(plane, field, O, X, Y, I, labels);
}

Coordinatisation coordinatise(const IncidencePlane& plane, PointIndex O, PointIndex X, PointIndex Y, PointIndex I,
                              const std::optional<std::vector<PointIndex>>& vertical) {
  return coordinatise(plane, Field::for_order(plane.order()), O, X, Y, I, vertical);
}

VerticalAction trace_vertical_action(const Coordinatisation& coord, LoopOp op, Elem a, Elem b) {
  const auto& plane = coord.plane();
  const auto& f = coord.field();
  if (!f.contains(a) || !f.contains(b)) throw Error(Errc::InvalidElement, "operand out of range", {a, b});
  const LineIndex l_0 = plane.join(coord.O(), coord.Y());
  const LineIndex l_00 = plane.join(coord.O(), coord.X());
  const LineIndex l_inf = plane.join(coord.X(), coord.Y());
  const PointIndex p10 = coord.affine(1, 0);
  const auto vert = coord.vertical_points();
  // Lines through two equal points degenerate to the point itself.
  const auto meet_of = [&](PointIndex p, PointIndex r, LineIndex l) {
    if (p == r) return p;
    return plane.meet(plane.join(p, r), l);
  };

  VerticalAction out;
  PointIndex end;
  if (op == LoopOp::Add) {
    const PointIndex a0 = meet_of(vert[a], coord.J(), l_00);
    out.trace.push_back({"(a,0)", false, a0});
    const PointIndex ab = plane.meet(plane.join(a0, coord.Y()), plane.join(vert[b], coord.X()));
    out.trace.push_back({"(a,b)", false, ab});
    const LineIndex l = plane.join(coord.J(), ab);
    out.trace.push_back({"line(J,(a,b))", true, l});
    end = plane.meet(l, l_0);
  } else {
    const PointIndex sa = meet_of(vert[a], p10, l_inf);
    out.trace.push_back({"(a)", false, sa});
    const PointIndex b0 = meet_of(vert[b], coord.J(), l_00);
    out.trace.push_back({"(b,0)", false, b0});
    const LineIndex l = plane.join(sa, b0);
    out.trace.push_back({"line((a),(b,0))", true, l});
    end = plane.meet(l, l_0);
  }
  out.trace.push_back({"(0,k)", false, end});
  const auto& label = coord.point_label(end);
  if (label.kind != PointLabel::Kind::Affine || label.a != 0) {
    throw Error(Errc::InternalContradiction, "construction left the vertical line", {end});
  }
  out.result = label.b;
  const Elem expected = op == LoopOp::Add ? coord.table()(1, a, b) : coord.table()(a, b, 0);
  if (out.result != expected) {
    throw Error(Errc::InternalContradiction, "geometric loop action disagrees with the table", {a, b, out.result, expected});
  }
  return out;
}

namespace {

void require_triangle(const IncidencePlane& plane, PointIndex O, PointIndex X, PointIndex Y) {
  const auto n = plane.num_points();
  if (O >= n || X >= n || Y >= n || O == X || O == Y || X == Y || plane.collinear(O, X, Y)) {
    throw Error(Errc::NotQuadrangle, "O, X, Y is not a triangle", {O, X, Y});
  }
}

PointIndex first_point_on(const IncidencePlane& plane, LineIndex l, std::initializer_list<PointIndex> avoid) {
  for (auto p : plane.points_on(l))
    if (std::find(avoid.begin(), avoid.end(), p) == avoid.end()) return p;
  throw Error(Errc::InternalContradiction, "line has too few points", {l});
}

}  // namespace

Coordinatisation coordinatise_additive_optimal(const IncidencePlane& plane, PointIndex O, PointIndex X, PointIndex Y) {
  require_triangle(plane, O, X, Y);
  const Field field = Field::for_order(plane.order());
  const Elem q = field.q();
  const LineIndex l_inf = plane.join(X, Y), l_0 = plane.join(O, Y);

  const auto group = group_at(plane, Y, l_inf);
  if (!group.transitive || !group.closed) throw Error(Errc::NotTransitive, "plane is not (Y, XY)-transitive", {Y, l_inf});
  if (!group.structure.elementary_abelian) {
    throw Error(Errc::GroupNotElementaryAbelian, "elation group with center Y and axis XY is not elementary abelian");
  }

  // Images of O under every element, keyed by element index.
  const std::size_t k = group.elements.size();
  std::vector<PointIndex> image(k);
  for (std::size_t i = 0; i < k; ++i) image[i] = group.elements[i].points[O];
  std::vector<std::size_t> by_image(k);
  for (std::size_t i = 0; i < k; ++i) by_image[i] = i;
  std::sort(by_image.begin(), by_image.end(), [&](auto x, auto y) { return image[x] < image[y]; });

  // Greedy basis: walk elements by image of O, keep any outside the span.
  const auto& comp = group.composition;
  const Elem id = comp.identity();
  std::vector<std::size_t> gens;
  std::vector<char> in_span(k, 0);
  std::vector<std::size_t> span{id};
  in_span[id] = 1;
  for (auto g : by_image) {
    if (in_span[g]) continue;
    gens.push_back(g);
    std::vector<std::size_t> next;
    for (auto s : span) {
      std::size_t x = s;
      do {
        if (!in_span[x]) in_span[x] = 1;
        next.push_back(x);
        x = comp.op(static_cast<Elem>(g), static_cast<Elem>(x));
      } while (x != s);
    }
    span = std::move(next);
  }
  if (gens.size() != field.e()) {
    throw Error(Errc::GroupNotElementaryAbelian, "elation group does not have rank e", {static_cast<std::int64_t>(gens.size())});
  }

  // label(g_1^c_1 ... g_e^c_e (O)) = element with digits c_1..c_e.
  std::vector<PointIndex> vert(q, kNone);
  for (Elem label = 0; label < q; ++label) {
    std::size_t g = id;
    for (std::uint32_t i = 0; i < field.e(); ++i)
      for (Elem c = 0; c < field.digit(label, i); ++c) g = comp.op(static_cast<Elem>(gens[i]), static_cast<Elem>(g));
    vert[label] = image[g];
  }
  for (auto p : vert)
    if (p == kNone || !plane.incident(p, l_0) || p == Y) {
      throw Error(Errc::InternalContradiction, "elation orbit of O is not [0] minus Y");
    }

  const PointIndex I = first_point_on(plane, plane.join(X, vert[1]), {X, vert[1]});
  auto coord = coordinatise(plane, field, O, X, Y, I, std::vector<PointIndex>(vert.begin() + 2, vert.end()));
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      if (coord.table()(1, a, b) != field.add(a, b)) {
        throw Error(Errc::InternalContradiction, "additive-optimal labelling did not give field addition", {a, b});
      }
  return coord;
}

Coordinatisation coordinatise_multiplicative_optimal(const IncidencePlane& plane, PointIndex O, PointIndex X,
                                                     PointIndex Y) {
  require_triangle(plane, O, X, Y);
  const Field field = Field::for_order(plane.order());
  const Elem q = field.q();
  const LineIndex l_inf = plane.join(X, Y), l_0 = plane.join(O, Y), l_00 = plane.join(O, X);

  const auto group = group_at(plane, X, l_0);
  if (!group.transitive || !group.closed) throw Error(Errc::NotTransitive, "plane is not (X, OY)-transitive", {X, l_0});
  if (!group.structure.cyclic) throw Error(Errc::GroupNotCyclic, "homology group with center X and axis OY is not cyclic");

  const PointIndex p10 = first_point_on(plane, l_00, {O, X});
  const PointIndex I = first_point_on(plane, plane.join(Y, p10), {Y, p10});
  const PointIndex p01 = plane.meet(plane.join(X, I), l_0);
  const PointIndex J = plane.meet(plane.join(p10, p01), l_inf);

  // Generator: least element (by image of (1,0)) of order q-1.
  const std::size_t k = group.elements.size();
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return group.elements[a].points[p10] < group.elements[b].points[p10]; });
  const auto& comp = group.composition;
  std::size_t gen = k;
  for (auto g : order) {
    std::size_t len = 1;
    for (std::size_t x = g; x != comp.identity(); x = comp.op(static_cast<Elem>(g), static_cast<Elem>(x))) ++len;
    if (len == q - 1) {
      gen = g;
      break;
    }
  }
  if (gen == k) throw Error(Errc::GroupNotCyclic, "no generator of order q-1");

  const Elem theta = field.primitive();
  std::vector<PointIndex> horiz(q, kNone);
  horiz[0] = O;
  PointIndex p = p10;
  for (Elem i = 0; i + 1 < q; ++i) {
    horiz[field.pow(theta, i)] = p;
    p = group.elements[gen].points[p];
  }
  std::vector<PointIndex> vert;
  for (Elem a = 2; a < q; ++a) vert.push_back(plane.meet(plane.join(horiz[a], J), l_0));

  auto coord = coordinatise(plane, field, O, X, Y, I, vert);
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      if (coord.table()(a, b, 0) != field.mul(a, b)) {
        throw Error(Errc::InternalContradiction, "multiplicative-optimal labelling did not give field multiplication",
                    {a, b});
      }
  return coord;
}

SubplaneRestriction restrict_to_subplane(const Coordinatisation& coord, std::vector<PointIndex> sub_points) {
  const auto& plane = coord.plane();
  std::sort(sub_points.begin(), sub_points.end());
  sub_points.erase(std::unique(sub_points.begin(), sub_points.end()), sub_points.end());
  const auto in_sub = [&](PointIndex p) { return std::binary_search(sub_points.begin(), sub_points.end(), p); };
  for (auto p : {coord.O(), coord.X(), coord.Y(), coord.I()})
    if (!in_sub(p)) throw Error(Errc::QuadrangleNotInSubplane, "frame point outside the subplane", {p});

  // Induced incidence: every line meeting the set in at least two points.
  std::map<PointIndex, PointIndex> local;
  for (PointIndex i = 0; i < sub_points.size(); ++i) local[sub_points[i]] = i;
  LineSets lines;
  for (LineIndex l = 0; l < plane.num_lines(); ++l) {
    std::vector<PointIndex> pts;
    for (auto p : plane.points_on(l))
      if (in_sub(p)) pts.push_back(local[p]);
    if (pts.size() >= 2) lines.push_back(std::move(pts));
  }
  const std::size_t m = validate_plane(sub_points.size(), lines);

  std::vector<Elem> labels;
  for (Elem x = 0; x < coord.field().q(); ++x)
    if (in_sub(coord.affine(x, 0))) labels.push_back(x);
  if (labels.size() != m) throw Error(Errc::InternalContradiction, "label set size differs from subplane order");
  const Field sub_field = Field::for_order(m);

  std::vector<std::int64_t> rank(coord.field().q(), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) rank[labels[i]] = static_cast<std::int64_t>(i);
  std::vector<Elem> values;
  values.reserve(m * m * m);
  for (auto a : labels)
    for (auto b : labels)
      for (auto c : labels) {
        const Elem v = coord.table()(a, b, c);
        if (rank[v] < 0) throw Error(Errc::InternalContradiction, "label set is not closed under T", {a, b, c, v});
        values.push_back(static_cast<Elem>(rank[v]));
      }
  SubplaneRestriction out{std::move(labels), TernaryTable(sub_field, std::move(values))};
  if (!check_ptr_properties(out.table).ptr()) {
    throw Error(Errc::InternalContradiction, "restricted table violates the coordinatisation properties");
  }
  return out;
}

}  // namespace ptrforge
