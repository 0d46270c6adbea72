#include "ptrforge/poly_analysis.hpp"

#include <algorithm>

#include "ptrforge/error.hpp"

namespace ptrforge {

Decomposition decompose(const ReducedPoly& T) {
  if (T.arity() != 3) throw Error(Errc::ArityMismatch, "decomposition needs a trivariate polynomial");
  const Field& f = T.field();
  const auto offend = [](const Exponents& e, const std::string& why) {
    throw Error(Errc::NotPropertyAForm, why, {e[0], e[1], e[2]});
  };
  if (T.coefficient({0, 0, 1}) != 1) offend({0, 0, 1}, "coefficient of Z must be 1");
  ReducedPoly M1(f, 3), M2(f, 2);
  for (const auto& [e, c] : T.terms()) {
    if (e[0] == 0 && e[1] == 0) {
      if (e[2] != 1) offend(e, "pure Z-power other than Z");
      continue;
    }
    if (e[0] == 0 || e[1] == 0) offend(e, "monomial lacks X or Y");
    if (e[2] == 0) {
      M2.set_term({e[0], e[1]}, c);
    } else {
      M1.set_term({e[0] - 1, e[1] - 1, e[2] - 1}, c);
    }
  }
  return {T, std::move(M1), std::move(M2)};
}

ReducedPoly recompose(const Field& field, const ReducedPoly& M1, const ReducedPoly& M2) {
  ReducedPoly T(field, 3);
  T.set_term({0, 0, 1}, 1);
  for (const auto& [e, c] : M2.terms()) T.add_term({e[0], e[1], 0}, c);
  const Elem q = field.q();
  for (const auto& [e, c] : M1.terms()) {
    // Multiplying by XYZ may push an exponent to q, which reduces to 1.
    Exponents s{e[0] + 1, e[1] + 1, e[2] + 1};
    for (auto& x : s)
      if (x >= q) x -= q - 1;
    T.add_term(s, c);
  }
  return T;
}

std::string FiberProfile::classification() const {
  if (pp) return "PP";
  if (kappa) return "kappa(" + std::to_string(*kappa) + ")";
  return "neither";
}

FiberProfile fiber_profile(const Field& field, std::size_t arity, std::span<const Elem> values) {
  const Elem q = field.q();
  if (values.size() != table_size(field, arity)) throw Error(Errc::IncompleteTable, "value table has the wrong size");
  FiberProfile fp;
  fp.counts.assign(q, 0);
  for (auto v : values) {
    if (v >= q) throw Error(Errc::InvalidElement, "value out of range", {v});
    ++fp.counts[v];
  }
  const std::uint64_t each = values.size() / q;
  fp.pp = std::all_of(fp.counts.begin(), fp.counts.end(), [&](auto c) { return c == each; });
  if (q >= 2 && std::all_of(fp.counts.begin() + 1, fp.counts.end(), [&](auto c) { return c == fp.counts[1]; })) {
    fp.kappa = fp.counts[1];
  }
  return fp;
}

FiberProfile fiber_profile(const ReducedPoly& poly) {
  const auto values = poly.evaluate_all();
  return fiber_profile(poly.field(), poly.arity(), values);
}

namespace {

bool is_bijection(std::vector<char>& seen, auto&& value, Elem q) {
  std::fill(seen.begin(), seen.end(), 0);
  for (Elem i = 0; i < q; ++i) {
    const Elem v = value(i);
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

[[noreturn]] void contradiction(const std::string& what, std::vector<std::int64_t> w) {
  throw Error(Errc::InternalContradiction, what, std::move(w));
}

}  // namespace

SliceReport verify_slice_theorems(const TernaryTable& t) {
  SliceReport r;
  r.properties = check_ptr_properties(t);
  const auto& p = r.properties;
  const Elem q = t.q();
  std::vector<char> seen(q);
  const bool a = p.a.holds, c = p.c.holds, d = p.d.holds, e = p.e.holds;

  SliceCheck xs{"x_slices", a && c, "a,c"};
  if (xs.applicable)
    for (Elem y = 1; y < q; ++y)
      for (Elem z = 0; z < q; ++z, ++xs.slices) {
        if (!is_bijection(seen, [&](Elem x) { return t(x, y, z); }, q)) contradiction("T(X,y,z) is not a PP", {y, z});
        ++xs.passed;
      }
  SliceCheck ys{"y_slices", a && e, "a,e"};
  if (ys.applicable)
    for (Elem x = 1; x < q; ++x)
      for (Elem z = 0; z < q; ++z, ++ys.slices) {
        if (!is_bijection(seen, [&](Elem y) { return t(x, y, z); }, q)) contradiction("T(x,Y,z) is not a PP", {x, z});
        ++ys.passed;
      }
  SliceCheck zs{"z_slices", d, "d"};
  if (zs.applicable)
    for (Elem x = 0; x < q; ++x)
      for (Elem y = 0; y < q; ++y, ++zs.slices) {
        if (!is_bijection(seen, [&](Elem z) { return t(x, y, z); }, q)) contradiction("T(x,y,Z) is not a PP", {x, y});
        ++zs.passed;
      }
  SliceCheck ks{"kappa_slices", a && (c || e), "a,(c|e)"};
  if (ks.applicable) {
    std::vector<std::uint64_t> counts(q);
    for (Elem z = 0; z < q; ++z, ++ks.slices) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Elem x = 0; x < q; ++x)
        for (Elem y = 0; y < q; ++y) ++counts[t.field().sub(t(x, y, z), z)];
      for (Elem v = 0; v < q; ++v) {
        const std::uint64_t want = v == 0 ? 2 * q - 1 : q - 1;
        if (counts[v] != want) contradiction("T(X,Y,z) - z has an unexpected fiber", {z, v, static_cast<std::int64_t>(counts[v])});
      }
      ++ks.passed;
    }
  }
  SliceCheck fs{"full_pp", d || (a && (c || e)), "d|a,(c|e)"};
  if (fs.applicable) {
    fs.slices = 1;
    const auto prof = fiber_profile(t.field(), 3, t.values());
    if (!prof.pp) contradiction("T(X,Y,Z) is not a PP", {});
    fs.passed = 1;
  }
  r.checks = {xs, ys, zs, ks, fs};
  if (std::none_of(r.checks.begin(), r.checks.end(), [](const SliceCheck& s) { return s.applicable; })) {
    throw Error(Errc::AssumptionsUnmet, "no slice statement applies: the table fails (d) and (a) or both (c), (e)");
  }
  return r;
}

LinearityIdentityReport linearity_identity_check(const Decomposition& dec) {
  const Field& f = dec.T.field();
  const Elem q = f.q();
  const auto m1 = dec.M1.evaluate_all();
  const auto m2 = dec.M2.evaluate_all();
  const auto M1 = [&](Elem x, Elem y, Elem z) { return m1[(x * q + y) * q + z]; };
  LinearityIdentityReport r;
  for (Elem x = 0; x < q && r.holds; ++x)
    for (Elem y = 0; y < q && r.holds; ++y) {
      const Elem w = m2[x * q + y];
      for (Elem z = 1; z < q; ++z) {
        if (f.mul(f.mul(x, y), M1(x, y, z)) != f.mul(w, M1(1, w, z))) {
          r.holds = false;
          r.witness = std::array<Elem, 3>{x, y, z};
          break;
        }
      }
    }
  TernaryTable table(f, dec.T.evaluate_all());
  if (check_ptr_properties(table).ptr()) {
    r.table_linear = is_linear(table).linear;
    if (*r.table_linear != r.holds) contradiction("linearity identity disagrees with the table check", {});
  }
  return r;
}

DegreeSumReport degree_and_sum_report(const Decomposition& dec) {
  const Field& f = dec.T.field();
  const Elem q = f.q();
  DegreeSumReport r;
  for (std::size_t v = 0; v < 3; ++v) r.degrees[v] = dec.T.degree_in(v);
  r.degree_checked = q >= 3;
  if (r.degree_checked) {
    for (auto d : r.degrees) r.degree_ok = r.degree_ok && d <= q - 2;
    for (const auto& [e, c] : dec.M1.terms())
      for (auto x : e) r.m1_bound_ok = r.m1_bound_ok && x + 3 <= q;
    for (const auto& [e, c] : dec.M2.terms())
      for (auto x : e) r.m2_bound_ok = r.m2_bound_ok && x + 2 <= q;
  }
  r.sums_fixed_y.assign(q - 1, 0);
  r.sums_fixed_x.assign(q - 1, 0);
  for (const auto& [e, c] : dec.M2.terms()) {
    r.sums_fixed_y[e[1] - 1] = f.add(r.sums_fixed_y[e[1] - 1], c);
    r.sums_fixed_x[e[0] - 1] = f.add(r.sums_fixed_x[e[0] - 1], c);
  }
  for (Elem j = 1; j < q; ++j) {
    const Elem want = j == 1 ? 1 : 0;
    r.sums_ok = r.sums_ok && r.sums_fixed_y[j - 1] == want && r.sums_fixed_x[j - 1] == want;
  }
  r.linear_sums_checked = linearity_identity_check(dec).holds;
  if (r.linear_sums_checked && q >= 3) {
    for (Elem j = 0; j + 3 <= q; ++j)
      for (Elem k = 1; k + 3 <= q; ++k) {
        Elem lhs = 0, rhs = 0;
        for (Elem i = 0; i + 3 <= q; ++i) {
          lhs = f.add(lhs, dec.M1.coefficient({i, j, k}));
          rhs = f.add(rhs, dec.M1.coefficient({j, i, k}));
        }
        r.linear_sums_ok = r.linear_sums_ok && lhs == rhs;
      }
  }
  return r;
}

QuadraticExtension::QuadraticExtension(Field base) : base_(std::move(base)) {
  const Elem q = base_.q();
  for (Elem c1 = 0; c1 < q; ++c1)
    for (Elem c0 = 0; c0 < q; ++c0) {
      bool root = false;
      for (Elem x = 0; x < q && !root; ++x) root = base_.add(base_.add(base_.mul(x, x), base_.mul(c1, x)), c0) == 0;
      if (!root) {
        c1_ = c1;
        c0_ = c0;
        return;
      }
    }
  throw Error(Errc::InternalContradiction, "no irreducible quadratic found");
}

std::uint64_t QuadraticExtension::add(std::uint64_t a, std::uint64_t b) const noexcept {
  const Elem q = base_.q();
  return make(base_.add(a % q, b % q), base_.add(static_cast<Elem>(a / q), static_cast<Elem>(b / q)));
}

std::uint64_t QuadraticExtension::mul(std::uint64_t a, std::uint64_t b) const noexcept {
  const Elem q = base_.q();
  const Elem a0 = a % q, a1 = static_cast<Elem>(a / q), b0 = b % q, b1 = static_cast<Elem>(b / q);
  const auto& f = base_;
  const Elem hi = f.mul(a1, b1);  // coefficient of beta^2 = -c1 beta - c0
  const Elem c0 = f.sub(f.mul(a0, b0), f.mul(c0_, hi));
  const Elem c1 = f.sub(f.add(f.mul(a0, b1), f.mul(a1, b0)), f.mul(c1_, hi));
  return make(c0, c1);
}

SabReport s_ab_check(const TernaryTable& t, const QuadraticExtension& ext) {
  if (!(ext.base() == t.field())) throw Error(Errc::FieldMismatch, "extension base differs from the table field");
  if (!check_ptr_properties(t).e.holds) throw Error(Errc::AssumptionsUnmet, "property (e) fails");
  const Elem q = t.q();
  SabReport r;
  std::vector<char> seen(ext.order());
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      bool bij = true;
      for (Elem y = 0; y < q && bij; ++y)
        for (Elem z = 0; z < q; ++z) {
          const auto v = ext.add(ext.make(t(a, y, z), 0), ext.mul(ext.beta(), ext.make(t(b, y, z), 0)));
          if (seen[v]) {
            bij = false;
            break;
          }
          seen[v] = 1;
        }
      if (a == b) {
        if (bij) r.diagonal_bijective.push_back(a);
        continue;
      }
      ++r.pairs_checked;
      if (!bij) r.failures.push_back({a, b});
    }
  return r;
}

CompleteMappingReport complete_mapping_check(const Decomposition& dec, bool additive_is_field_addition) {
  if (!additive_is_field_addition) {
    throw Error(Errc::AssumptionsUnmet, "the additive loop is not known to be field addition");
  }
  const Field& f = dec.T.field();
  const Elem q = f.q();
  const auto m2 = dec.M2.evaluate_all();
  CompleteMappingReport r;
  std::vector<char> seen(q);
  if (q >= 2) {
    r.a1_is_zero_map = true;
    for (Elem x = 0; x < q; ++x) r.a1_is_zero_map = r.a1_is_zero_map && f.sub(m2[x * q + 1], x) == 0;
  }
  for (Elem a = 2; a < q; ++a) {
    CompleteMappingReport::Entry e{a, false, false};
    e.f_pp = is_bijection(seen, [&](Elem x) { return f.sub(m2[x * q + a], x); }, q);
    e.f_plus_x_pp = is_bijection(seen, [&](Elem x) { return m2[x * q + a]; }, q);
    r.holds = r.holds && e.f_pp && e.f_plus_x_pp;
    r.entries.push_back(e);
  }
  return r;
}

namespace {

bool power_of_p(std::uint32_t x, std::uint32_t p) {
  while (x > 1 && x % p == 0) x /= p;
  return x == 1;
}

}  // namespace

FormFlags form_classify(const Decomposition& dec) {
  const Field& f = dec.T.field();
  const Elem q = f.q();
  FormFlags r;
  r.basicform = dec.M1.is_zero();
  if (r.basicform) {
    bool xs = true, ys = true;
    for (const auto& [e, c] : dec.M2.terms()) {
      xs = xs && power_of_p(e[0], f.p());
      ys = ys && power_of_p(e[1], f.p());
    }
    r.lbiv = xs;
    r.lbivd = ys;
    r.lbv = xs && ys;
    const auto m2 = dec.M2.evaluate_all();
    const auto M2 = [&](Elem x, Elem y) { return m2[x * q + y]; };
    r.additive_associativity_identity = true;
    for (Elem x = 0; x < q && r.additive_associativity_identity; ++x)
      for (Elem y = 0; y < q && r.additive_associativity_identity; ++y)
        for (Elem z = 0; z < q; ++z)
          if (M2(x, M2(y, z)) != M2(M2(x, y), z)) {
            r.additive_associativity_identity = false;
            break;
          }
  }

  ReducedPoly xy(f, 2);
  xy.set_term({1, 1}, 1);
  r.lbi2eq = dec.M2 == xy;
  for (const auto& [e, c] : dec.M1.terms()) r.lbi2eq = r.lbi2eq && e[0] == e[1] && e[0] + 3 <= q && e[2] + 3 <= q;
  if (r.lbi2eq) {
    r.lbi4form = true;
    for (const auto& [e, c] : dec.M1.terms()) r.lbi4form = r.lbi4form && e[0] + e[2] + 2 == q;

    const auto m1 = dec.M1.evaluate_all();
    std::vector<Elem> plus(std::size_t{q} * q);
    for (Elem y = 0; y < q; ++y)
      for (Elem z = 0; z < q; ++z)
        plus[y * q + z] = f.add(f.add(y, z), f.mul(f.mul(y, z), m1[(1 * q + y) * q + z]));
    const auto P = [&](Elem y, Elem z) { return plus[y * q + z]; };
    r.multiplicative_associativity_identity = true;
    for (Elem x = 0; x < q && r.multiplicative_associativity_identity; ++x)
      for (Elem y = 0; y < q && r.multiplicative_associativity_identity; ++y)
        for (Elem z = 0; z < q; ++z)
          if (P(x, P(y, z)) != P(P(x, y), z)) {
            r.multiplicative_associativity_identity = false;
            break;
          }
  }
  return r;
}

KappaConstruction kappa_from_two_to_one(const Field& field, std::span<const Elem> f) {
  const Elem q = field.q();
  if (f.size() != q) throw Error(Errc::IncompleteTable, "map must list q values");
  for (Elem x = 0; x < q; ++x)
    if (f[x] >= q) throw Error(Errc::InvalidElement, "map value out of range", {x});
  if (f[0] != 0) throw Error(Errc::NotTwoToOne, "f(0) must be 0", {0});
  std::vector<unsigned> mult(q, 0);
  for (Elem x = 1; x < q; ++x) {
    if (f[x] == 0) throw Error(Errc::NotTwoToOne, "a nonzero element maps to 0", {x});
    ++mult[f[x]];
  }
  for (Elem v = 1; v < q; ++v)
    if (mult[v] != 0 && mult[v] != 2) throw Error(Errc::NotTwoToOne, "image with other than two preimages", {v, mult[v]});

  std::vector<Elem> table(std::size_t{q} * q);
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y) table[x * q + y] = field.sub(f[x], f[y]);
  KappaConstruction out{interpolate(field, 2, table), fiber_profile(field, 2, table), false};
  out.kappa_q_minus_1 = out.profile.kappa && *out.profile.kappa == q - 1;
  return out;
}

}  // namespace ptrforge
