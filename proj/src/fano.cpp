#include "ptrforge/fano.hpp"

#include <algorithm>
#include <mutex>

#include "ptrforge/error.hpp"
#include "ptrforge/parallel.hpp"

namespace ptrforge {

namespace {

std::array<PointIndex, 3> diagonal_points(const IncidencePlane& plane, const std::array<PointIndex, 4>& q) {
  std::array<PointIndex, 3> d{plane.meet(plane.join(q[0], q[1]), plane.join(q[2], q[3])),
                              plane.meet(plane.join(q[0], q[2]), plane.join(q[1], q[3])),
                              plane.meet(plane.join(q[0], q[3]), plane.join(q[1], q[2]))};
  std::sort(d.begin(), d.end());
  return d;
}

// Assembles the 7/7 configuration spanned by a quadrangle with collinear
// diagonal points: the six sides plus the diagonal line.
FanoWitness assemble(const IncidencePlane& plane, const std::array<PointIndex, 4>& quad,
                     const std::array<PointIndex, 3>& diag) {
  FanoWitness w;
  w.quadrangle = quad;
  std::sort(w.quadrangle.begin(), w.quadrangle.end());
  w.diagonal = diag;
  std::copy(quad.begin(), quad.end(), w.points.begin());
  std::copy(diag.begin(), diag.end(), w.points.begin() + 4);
  std::sort(w.points.begin(), w.points.end());
  std::size_t k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) w.lines[k++] = plane.join(quad[i], quad[j]);
  w.lines[k] = plane.join(diag[0], diag[1]);
  std::sort(w.lines.begin(), w.lines.end());
  return w;
}

}  // namespace

std::optional<FanoWitness> find_fano_direct(const IncidencePlane& plane, unsigned threads) {
  const std::size_t v = plane.num_points();
  std::mutex mu;
  std::optional<std::array<PointIndex, 4>> best;
  parallel_for(v, threads, [&](std::size_t first) {
    {
      std::lock_guard lock(mu);
      if (best && (*best)[0] < first) return;
    }
    const PointIndex a = static_cast<PointIndex>(first);
    for (PointIndex b = a + 1; b < v; ++b)
      for (PointIndex c = b + 1; c < v; ++c) {
        if (plane.collinear(a, b, c)) continue;
        for (PointIndex d = c + 1; d < v; ++d) {
          if (!plane.is_quadrangle(a, b, c, d)) continue;
          const auto diag = diagonal_points(plane, {a, b, c, d});
          if (!plane.collinear(diag[0], diag[1], diag[2])) continue;
          std::lock_guard lock(mu);
          const std::array<PointIndex, 4> cand{a, b, c, d};
          if (!best || cand < *best) best = cand;
          return;
        }
      }
  });
  if (!best) return std::nullopt;
  return assemble(plane, *best, diagonal_points(plane, *best));
}

void validate_witness(const IncidencePlane& plane, const FanoWitness& w) {
  const auto bad = [](const std::string& what, std::vector<std::int64_t> wit = {}) {
    throw Error(Errc::InvalidWitness, what, std::move(wit));
  };
  const std::size_t v = plane.num_points();
  auto pts = w.points;
  auto lns = w.lines;
  std::sort(pts.begin(), pts.end());
  std::sort(lns.begin(), lns.end());
  for (std::size_t i = 0; i < 7; ++i) {
    if (pts[i] >= v || lns[i] >= v) bad("index out of range");
    if (i > 0 && (pts[i] == pts[i - 1] || lns[i] == lns[i - 1])) bad("repeated point or line");
  }
  for (auto l : lns) {
    int count = 0;
    for (auto p : pts) count += plane.incident(p, l);
    if (count != 3) bad("listed line does not carry exactly 3 listed points", {l, count});
  }
  for (auto p : pts) {
    int count = 0;
    for (auto l : lns) count += plane.incident(p, l);
    if (count != 3) bad("listed point is not on exactly 3 listed lines", {p, count});
  }
  if (!plane.is_quadrangle(w.quadrangle[0], w.quadrangle[1], w.quadrangle[2], w.quadrangle[3])) {
    bad("quadrangle is degenerate");
  }
  auto diag = w.diagonal;
  std::sort(diag.begin(), diag.end());
  if (diagonal_points(plane, w.quadrangle) != diag) bad("diagonal points do not match the quadrangle");
  for (auto p : w.quadrangle)
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) bad("quadrangle point not listed", {p});
  for (auto p : w.diagonal)
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) bad("diagonal point not listed", {p});
}

Coordinatisation fano_to_involutive_coordinatisation(const IncidencePlane& plane, const FanoWitness& w, Elem t) {
  validate_witness(plane, w);
  const Field field = Field::for_order(plane.order());
  if (t == 0 || !field.contains(t)) throw Error(Errc::LabellingInvalid, "t must be a nonzero element", {t});

  auto pts = w.points;
  std::sort(pts.begin(), pts.end());
  PointIndex O = kNone, X = kNone, Y = kNone;
  for (int i = 0; i < 7 && O == kNone; ++i)
    for (int j = i + 1; j < 7 && O == kNone; ++j)
      for (int k = j + 1; k < 7 && O == kNone; ++k)
        if (!plane.collinear(pts[i], pts[j], pts[k])) {
          O = pts[i];
          X = pts[j];
          Y = pts[k];
        }
  const auto third_on = [&](LineIndex l, PointIndex u, PointIndex v) {
    for (auto p : pts)
      if (p != u && p != v && plane.incident(p, l)) return p;
    throw Error(Errc::InvalidWitness, "triangle side carries no third witness point", {l});
  };
  const LineIndex l_00 = plane.join(O, X), l_0 = plane.join(O, Y), l_inf = plane.join(X, Y);
  const PointIndex A = third_on(l_00, O, X);  // (t,0)
  const PointIndex B = third_on(l_0, O, Y);   // (0,t)
  const PointIndex C = third_on(l_inf, X, Y); // J
  PointIndex D = kNone;                       // (t,t)
  for (auto p : pts)
    if (p != O && p != X && p != Y && p != A && p != B && p != C) D = p;

  if (t == 1) return coordinatise(plane, field, O, X, Y, D);

  // Choose (0,1) on [0], then force J = C by taking (1,0) on the line through
  // (0,1) and C, and I = (1,0)Y . (0,1)X. The point B receives label t.
  PointIndex p01 = kNone;
  for (auto p : plane.points_on(l_0))
    if (p != O && p != Y && p != B) {
      p01 = p;
      break;
    }
  const PointIndex p10 = plane.meet(plane.join(p01, C), l_00);
  const PointIndex I = plane.meet(plane.join(Y, p10), plane.join(X, p01));

  std::vector<PointIndex> rest;
  for (auto p : plane.points_on(l_0))
    if (p != O && p != Y && p != p01 && p != B) rest.push_back(p);
  std::vector<PointIndex> vertical;
  for (Elem a = 2, r = 0; a < field.q(); ++a) vertical.push_back(a == t ? B : rest[r++]);

  auto coord = coordinatise(plane, field, O, X, Y, I, vertical);
  if (coord.J() != C || coord.affine(t, 0) != A || coord.affine(0, t) != B || coord.affine(t, t) != D) {
    throw Error(Errc::InternalContradiction, "witness points did not receive the intended labels");
  }
  return coord;
}

FanoWitness fano_from_involution(const Coordinatisation& coord, Elem t) {
  const auto& plane = coord.plane();
  if (t == 0 || !coord.field().contains(t) || coord.table()(1, t, t) != 0) {
    throw Error(Errc::InvalidWitness, "t is not an involution of the additive loop", {t});
  }
  const PointIndex O = coord.O(), X = coord.X(), Y = coord.Y(), J = coord.J();
  const PointIndex t0 = coord.affine(t, 0), ot = coord.affine(0, t), tt = coord.affine(t, t);
  if (!plane.collinear(O, tt, J)) throw Error(Errc::InternalContradiction, "O, (t,t), J are not collinear", {t});
  auto w = assemble(plane, {X, Y, t0, ot}, diagonal_points(plane, {X, Y, t0, ot}));
  validate_witness(plane, w);
  return w;
}

}  // namespace ptrforge
