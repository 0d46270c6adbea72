#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptrforge/field.hpp"
#include "ptrforge/poly.hpp"
#include "ptrforge/properties.hpp"
#include "ptrforge/ternary.hpp"

namespace ptrforge {

/// T(X,Y,Z) = Z + X*Y*Z*M1(X,Y,Z) + M2(X,Y).
struct Decomposition {
  ReducedPoly T;
  ReducedPoly M1;  // arity 3
  ReducedPoly M2;  // arity 2, every term divisible by X*Y
};

// Throws NotPropertyAForm with the offending exponent triple.
Decomposition decompose(const ReducedPoly& T);
ReducedPoly recompose(const Field& field, const ReducedPoly& M1, const ReducedPoly& M2);

struct FiberProfile {
  std::vector<std::uint64_t> counts;  // counts[a] = #preimages of a
  bool pp = false;
  std::optional<std::uint64_t> kappa;  // common count of the nonzero values
  std::string classification() const;  // "PP", "kappa(k)" or "neither"
};

FiberProfile fiber_profile(const Field& field, std::size_t arity, std::span<const Elem> values);
FiberProfile fiber_profile(const ReducedPoly& poly);

struct SliceCheck {
  std::string name;
  bool applicable = false;
  std::string requires_properties;  // e.g. "a,c"
  std::uint64_t slices = 0;
  std::uint64_t passed = 0;
};

/// Checks, where the needed properties hold:
///   x_slices   T(X,y,z) is a PP for y != 0          (needs a, c)
///   y_slices   T(x,Y,z) is a PP for x != 0          (needs a, e)
///   z_slices   T(x,y,Z) is a PP                     (needs d)
///   kappa      T(X,Y,z) - z has fibers {0: 2q-1, else q-1}   (needs a and c or e)
///   full_pp    T(X,Y,Z) has every fiber q^2          (needs d, or a and c or e)
/// A failing applicable check throws InternalContradiction; AssumptionsUnmet
/// is thrown when no check applies.
struct SliceReport {
  PropertyReport properties;
  std::vector<SliceCheck> checks;
};

SliceReport verify_slice_theorems(const TernaryTable& table);

struct DegreeSumReport {
  bool degree_checked = false;  // false when q = 2
  std::array<std::uint32_t, 3> degrees{};
  bool degree_ok = true;        // every per-variable degree <= q-2
  bool m1_bound_ok = true;      // M1 exponents <= q-3
  bool m2_bound_ok = true;      // M2 exponents <= q-2
  std::vector<Elem> sums_fixed_y;  // sum_i c_ij, j = 1..q-1
  std::vector<Elem> sums_fixed_x;  // sum_i c_ji, j = 1..q-1
  bool sums_ok = true;             // 1 at j = 1, 0 otherwise
  bool linear_sums_checked = false;
  bool linear_sums_ok = true;      // sum_i b_ijk = sum_i b_jik, 0<=j<=q-3, 1<=k<=q-3
};

DegreeSumReport degree_and_sum_report(const Decomposition& dec);

struct LinearityIdentityReport {
  bool holds = true;
  std::optional<std::array<Elem, 3>> witness;
  std::optional<bool> table_linear;  // table-level verdict when T passes (a)-(e)
};

/// xy M1(x,y,z) = M2(x,y) M1(1, M2(x,y), z) for all x, y and z != 0. When
/// the table satisfies (a)-(e) the verdict is cross-checked against
/// is_linear (disagreement throws InternalContradiction).
LinearityIdentityReport linearity_identity_check(const Decomposition& dec);

/// F_{q^2} = F_q(beta) with beta a root of the lexicographically smallest
/// monic irreducible quadratic X^2 + c1 X + c0. y + beta z is encoded y + q z.
class QuadraticExtension {
 public:
  explicit QuadraticExtension(Field base);

  const Field& base() const noexcept { return base_; }
  std::uint64_t order() const noexcept { return std::uint64_t{base_.q()} * base_.q(); }
  std::array<Elem, 2> modulus() const noexcept { return {c1_, c0_}; }

  std::uint64_t make(Elem y, Elem z) const noexcept { return y + std::uint64_t{base_.q()} * z; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t beta() const noexcept { return make(0, 1); }

 private:
  Field base_;
  Elem c1_ = 0, c0_ = 0;
};

struct SabReport {
  std::uint64_t pairs_checked = 0;
  std::vector<std::array<Elem, 2>> failures;  // (a,b), a != b, not a bijection
  std::vector<Elem> diagonal_bijective;       // a with S_{a,a} a bijection (recorded only)
  bool holds() const noexcept { return failures.empty(); }
};

// Requires property (e) (AssumptionsUnmet otherwise).
SabReport s_ab_check(const TernaryTable& table, const QuadraticExtension& ext);

struct CompleteMappingReport {
  struct Entry {
    Elem a;
    bool f_pp;
    bool f_plus_x_pp;
  };
  std::vector<Entry> entries;  // a = 2..q-1 in encoding order
  bool holds = true;
  bool a1_is_zero_map = false;  // f_1 = M2(X,1) - X, excluded from the claim
};

/// f_a(X) = M2(X,a) - X is a complete mapping for every a outside {0,1}.
/// The claim assumes (+) is field addition; pass that fact explicitly.
CompleteMappingReport complete_mapping_check(const Decomposition& dec, bool additive_is_field_addition);

struct FormFlags {
  bool basicform = false;  // M1 = 0
  bool lbiv = false;       // basicform, X-exponents of M2 are powers of p
  bool lbivd = false;      // basicform, Y-exponents of M2 are powers of p
  bool lbv = false;        // both
  bool lbi2eq = false;     // M2 = XY, M1 = sum b_ij (XY)^i Z^j with i, j <= q-3
  bool lbi4form = false;   // lbi2eq and every M1 term has i + j = q-2
  bool additive_associativity_identity = false;        // basicform, M2 associative
  bool multiplicative_associativity_identity = false;  // lbi2eq, y+z+yz M1(1,y,z) associative
};

// Shape detectors only; none of these certifies a classification type.
FormFlags form_classify(const Decomposition& dec);

struct KappaConstruction {
  ReducedPoly M;  // interpolant of f(X) - f(Y)
  FiberProfile profile;
  bool kappa_q_minus_1 = false;
};

// f given as its q values with f(0) = 0 and two preimages per nonzero image.
// Throws NotTwoToOne.
KappaConstruction kappa_from_two_to_one(const Field& field, std::span<const Elem> f);

}  // namespace ptrforge
