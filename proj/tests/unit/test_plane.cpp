#include <gtest/gtest.h>

#include <set>

#include "ptrforge/error.hpp"
#include "ptrforge/plane.hpp"
#include "ptrforge/ternary.hpp"

using namespace ptrforge;

namespace {

// Normalised vectors (first nonzero coordinate 1) in lexicographic order.
std::vector<std::array<Elem, 3>> normalised_vectors(const Field& f) {
  std::vector<std::array<Elem, 3>> out;
  for (Elem a = 0; a < f.q(); ++a)
    for (Elem b = 0; b < f.q(); ++b)
      for (Elem c = 0; c < f.q(); ++c) {
        const std::array<Elem, 3> v{a, b, c};
        const auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
        if (lead != v.end() && *lead == 1) out.push_back(v);
      }
  return out;
}

// PG(2,q) from orthogonality: point v lies on line u iff u.v = 0.
IncidencePlane pg_oracle(const Field& f) {
  const auto pts = normalised_vectors(f);
  LineSets lines;
  for (const auto& u : pts) {
    std::vector<PointIndex> line;
    for (PointIndex i = 0; i < pts.size(); ++i) {
      const auto& v = pts[i];
      if (f.add(f.add(f.mul(u[0], v[0]), f.mul(u[1], v[1])), f.mul(u[2], v[2])) == 0) line.push_back(i);
    }
    lines.push_back(line);
  }
  return IncidencePlane::from_lines(pts.size(), lines);
}

LoopTable nearfield9(const Field& f) {
  std::vector<Elem> carrier(9), table(81);
  for (Elem m = 0; m < 9; ++m) {
    carrier[m] = m;
    for (Elem x = 0; x < 9; ++x)
      table[m * 9 + x] = (m == 0 || f.log(m) % 2 == 0) ? f.mul(m, x) : f.mul(m, f.pow(x, 3));
  }
  return LoopTable(carrier, 1, 9, table);
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no throw";
  return Errc::VerificationFailed;
}

bool collinear3(const IncidencePlane& p, PointIndex a, PointIndex b, PointIndex c) {
  return a == b || a == c || b == c || p.incident(c, p.join(a, b));
}

}  // namespace

TEST(PlaneTest, DesarguesianPlaneMatchesOrthogonalityOracle) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = Field::for_order(q);
    const auto plane = desarguesian_plane(f);
    EXPECT_EQ(plane.order(), q);
    EXPECT_EQ(plane.num_points(), q * q + q + 1);
    EXPECT_EQ(plane.num_lines(), q * q + q + 1);
    EXPECT_EQ(plane, pg_oracle(f)) << q;
    EXPECT_EQ(validate_plane(plane.num_points(), plane.lines()), q);
  }
}

TEST(PlaneTest, SmallOrders) {
  const auto fano = desarguesian_plane(Field::make(2, 1));
  EXPECT_EQ(fano.num_points(), 7u);
  for (LineIndex l = 0; l < 7; ++l) EXPECT_EQ(fano.points_on(l).size(), 3u);
  EXPECT_EQ(desarguesian_plane(Field::make(3, 1)).num_lines(), 13u);
  EXPECT_EQ(desarguesian_plane(Field::make(3, 2)).num_points(), 91u);
}

TEST(PlaneTest, PointIndexAcceptsScalarMultiples) {
  const auto f = Field::make(5, 1);
  const auto pts = normalised_vectors(f);
  for (PointIndex i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(pg_point_index(f, pts[i]), i);
    const std::array<Elem, 3> scaled{f.mul(3, pts[i][0]), f.mul(3, pts[i][1]), f.mul(3, pts[i][2])};
    EXPECT_EQ(pg_point_index(f, scaled), i);
  }
  EXPECT_THROW(pg_point_index(f, {0, 0, 0}), Error);
}

TEST(PlaneTest, JoinMeetConsistency) {
  const auto plane = desarguesian_plane(Field::make(2, 2));
  for (PointIndex a = 0; a < plane.num_points(); ++a) {
    EXPECT_EQ(plane.lines_through(a).size(), 5u);
    EXPECT_EQ(plane.join(a, a), kNone);
    for (PointIndex b = a + 1; b < plane.num_points(); ++b) {
      const auto l = plane.join(a, b);
      EXPECT_TRUE(plane.incident(a, l) && plane.incident(b, l));
      EXPECT_EQ(plane.join(b, a), l);
    }
  }
  for (LineIndex l = 0; l < plane.num_lines(); ++l)
    for (LineIndex m = l + 1; m < plane.num_lines(); ++m) {
      const auto p = plane.meet(l, m);
      EXPECT_TRUE(plane.incident(p, l) && plane.incident(p, m));
    }
}

TEST(PlaneTest, DualIsAPlaneAndInvolutive) {
  const auto plane = desarguesian_plane(Field::make(3, 1));
  const auto d = plane.dual();
  EXPECT_EQ(d.order(), 3u);
  for (PointIndex p = 0; p < plane.num_points(); ++p)
    for (LineIndex l = 0; l < plane.num_lines(); ++l) EXPECT_EQ(d.incident(l, p), plane.incident(p, l));
  EXPECT_EQ(d.dual(), plane);
}

TEST(PlaneTest, LeastQuadrangle) {
  const auto plane = desarguesian_plane(Field::make(3, 1));
  const auto q = least_quadrangle(plane);
  EXPECT_TRUE(plane.is_quadrangle(q[0], q[1], q[2], q[3]));
  // No lexicographically smaller 4-set is a quadrangle.
  const auto v = static_cast<PointIndex>(plane.num_points());
  for (PointIndex a = 0; a < v; ++a)
    for (PointIndex b = a + 1; b < v; ++b)
      for (PointIndex c = b + 1; c < v; ++c)
        for (PointIndex d = c + 1; d < v; ++d) {
          if (std::array<PointIndex, 4>{a, b, c, d} >= q) continue;
          EXPECT_FALSE(!collinear3(plane, a, b, c) && !collinear3(plane, a, b, d) && !collinear3(plane, a, c, d) &&
                       !collinear3(plane, b, c, d));
        }
}

TEST(PlaneTest, ValidateRejectsBrokenPlanes) {
  const auto plane = desarguesian_plane(Field::make(2, 2));
  EXPECT_EQ(validate_plane(plane.num_points(), plane.lines()), 4u);

  auto missing = plane.lines();
  missing.pop_back();
  EXPECT_EQ(code_of([&] { validate_plane(plane.num_points(), missing); }), Errc::AxiomViolation);
  EXPECT_EQ(code_of([&] { IncidencePlane::from_lines(plane.num_points(), missing); }), Errc::AxiomViolation);

  EXPECT_EQ(code_of([&] { validate_plane(20, plane.lines()); }), Errc::AxiomViolation);

  auto out_of_range = plane.lines();
  out_of_range[0].back() = 99;
  EXPECT_EQ(code_of([&] { validate_plane(plane.num_points(), out_of_range); }), Errc::AxiomViolation);

  // Swap one point between two lines: sizes stay right but incidence breaks.
  auto swapped = plane.lines();
  const auto a = swapped[0][0];
  auto it = std::find_if(swapped.begin() + 1, swapped.end(),
                         [&](const auto& l) { return std::find(l.begin(), l.end(), a) == l.end(); });
  std::swap(swapped[0][0], (*it)[0]);
  std::sort(swapped[0].begin(), swapped[0].end());
  std::sort(it->begin(), it->end());
  EXPECT_EQ(code_of([&] { validate_plane(plane.num_points(), swapped); }), Errc::AxiomViolation);

  // A triangle: three points, three lines, no quadrangle.
  EXPECT_EQ(code_of([] { validate_plane(3, {{0, 1}, {0, 2}, {1, 2}}); }), Errc::AxiomViolation);
}

TEST(PlaneTest, ValidationWitnessNamesTheDefect) {
  const auto plane = desarguesian_plane(Field::make(2, 1));
  auto lines = plane.lines();
  lines[3] = lines[2];
  try {
    validate_plane(7, lines);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AxiomViolation);
    EXPECT_FALSE(e.witness().empty());
  }
}

TEST(PlaneFromPtrTest, LinearTablesGiveDesarguesianPlanes) {
  for (std::uint32_t q : {2u, 3u, 8u}) {
    const auto f = Field::for_order(q);
    const auto plane = plane_from_ptr(linear_field_table(f));
    EXPECT_EQ(plane.order(), q);
    EXPECT_EQ(plane.num_points(), q * q + q + 1);
    EXPECT_TRUE(is_desarguesian(plane));
  }
}

TEST(PlaneFromPtrTest, IndexLayout) {
  const auto f = Field::make(3, 1);
  const auto plane = plane_from_ptr(linear_field_table(f));
  const PtrPlaneIndex idx{3};
  // (x,y) lies on the line through (m) and (0,k) exactly when T(m,x,y) = k.
  for (Elem m = 0; m < 3; ++m)
    for (Elem k = 0; k < 3; ++k) {
      const auto l = plane.join(idx.slope(m), idx.affine(0, k));
      for (Elem x = 0; x < 3; ++x)
        for (Elem y = 0; y < 3; ++y) EXPECT_EQ(plane.incident(idx.affine(x, y), l), f.add(f.mul(m, x), y) == k);
    }
  EXPECT_EQ(idx.infinity(), 12u);
}

TEST(PlaneFromPtrTest, RejectsNonWeakPtr) {
  const auto f = Field::make(3, 1);
  const auto zero = TernaryTable::from_function(f, [](Elem, Elem, Elem) { return Elem{0}; });
  try {
    plane_from_ptr(zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotWeakPTR);
    EXPECT_NE(std::string(e.what()).find("property ("), std::string::npos) << e.what();
    EXPECT_FALSE(e.witness().empty());
  }
}

TEST(QuasifieldTest, FieldGivesPG) {
  const auto f = Field::make(2, 2);
  const auto qp = plane_from_quasifield(f, field_addition(f), field_multiplication_with_zero(f));
  EXPECT_EQ(qp.table, linear_field_table(f));
  EXPECT_TRUE(qp.left_distributive);
  EXPECT_TRUE(qp.right_distributive);
  EXPECT_EQ(qp.plane.order(), 4u);
  EXPECT_TRUE(is_desarguesian(qp.plane));
}

TEST(QuasifieldTest, NearfieldOfOrderNineIsNotDesarguesian) {
  const auto f = Field::make(3, 2);
  const auto qp = plane_from_quasifield(f, field_addition(f), nearfield9(f));
  EXPECT_EQ(qp.plane.order(), 9u);
  EXPECT_TRUE(qp.left_distributive);
  EXPECT_FALSE(qp.right_distributive);

  const auto w = desargues_violation(qp.plane);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->size(), 7u);
  const auto& p = qp.plane;
  const auto [P, A, A2, B, B2, C, C2] = std::tie((*w)[0], (*w)[1], (*w)[2], (*w)[3], (*w)[4], (*w)[5], (*w)[6]);
  // In perspective from P, and the two triangles are genuine.
  EXPECT_TRUE(collinear3(p, P, A, A2));
  EXPECT_TRUE(collinear3(p, P, B, B2));
  EXPECT_TRUE(collinear3(p, P, C, C2));
  EXPECT_FALSE(collinear3(p, A, B, C));
  EXPECT_FALSE(collinear3(p, A2, B2, C2));
  const auto ab = p.meet(p.join(A, B), p.join(A2, B2));
  const auto bc = p.meet(p.join(B, C), p.join(B2, C2));
  const auto ca = p.meet(p.join(C, A), p.join(C2, A2));
  EXPECT_FALSE(collinear3(p, ab, bc, ca));
  EXPECT_FALSE(is_desarguesian(qp.plane));
}

TEST(QuasifieldTest, RejectsNonDistributiveTable) {
  const auto f = Field::make(5, 1);
  auto t = field_multiplication_with_zero(f);
  std::vector<Elem> table(t.table().begin(), t.table().end());
  std::swap(table[2 * 5 + 1], table[2 * 5 + 2]);
  const LoopTable bad(t.carrier(), 1, 5, table);
  EXPECT_EQ(code_of([&] { plane_from_quasifield(f, field_addition(f), bad); }), Errc::NotQuasifield);
}

TEST(DesarguesTest, PGPlanesAreDesarguesian) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) EXPECT_TRUE(is_desarguesian(desarguesian_plane(Field::for_order(q))));
}

TEST(DesarguesTest, ThreadCountDoesNotChangeWitness) {
  const auto f = Field::make(3, 2);
  const auto plane = plane_from_quasifield(f, field_addition(f), nearfield9(f)).plane;
  EXPECT_EQ(desargues_violation(plane, 1), desargues_violation(plane, 3));
}
