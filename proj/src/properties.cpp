#include "ptrforge/properties.hpp"

#include <algorithm>

#include "ptrforge/error.hpp"

namespace ptrforge {
namespace {

PropertyVerdict fail(std::vector<Elem> w) { return {false, std::move(w)}; }

PropertyVerdict check_a(const TernaryTable& t) {
  const Elem q = t.q();
  for (Elem m = 0; m < q; ++m)
    for (Elem x = 0; x < q; ++x)
      for (Elem y = 0; y < q; ++y)
        if ((m == 0 || x == 0) && t(m, x, y) != y) return fail({m, x, y});
  return {};
}

PropertyVerdict check_b(const TernaryTable& t) {
  const Elem q = t.q();
  if (q < 2) return {};
  for (Elem m = 0; m < q; ++m)
    for (Elem x = 0; x < q; ++x) {
      if (x == 1 && t(m, 1, 0) != m) return fail({m, x, 0});
      if (m == 1 && t(1, x, 0) != x) return fail({m, x, 0});
    }
  return {};
}

PropertyVerdict check_c(const TernaryTable& t) {
  const Elem q = t.q();
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; ++c) {
        if (c == a) continue;
        for (Elem d = 0; d < q; ++d) {
          unsigned count = 0;
          for (Elem x = 0; x < q && count < 2; ++x) count += t(x, a, b) == t(x, c, d);
          if (count != 1) return fail({a, b, c, d});
        }
      }
  return {};
}

PropertyVerdict check_d(const TernaryTable& t) {
  const Elem q = t.q();
  std::vector<char> seen(q);
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem z = 0; z < q; ++z) seen[t(a, b, z)] = 1;
      for (Elem c = 0; c < q; ++c)
        if (!seen[c]) return fail({a, b, c});
    }
  return {};
}

// For each (a,c) the map (y,z) -> (T(a,y,z), T(c,y,z)) is tabulated once, so
// the whole check costs O(q^4) instead of counting pairs per tuple.
PropertyVerdict check_e(const TernaryTable& t) {
  const Elem q = t.q();
  std::vector<unsigned> counts(std::size_t{q} * q);
  for (Elem a = 0; a < q; ++a) {
    std::optional<std::array<Elem, 3>> best;  // (b,c,d)
    for (Elem c = 0; c < q; ++c) {
      if (c == a) continue;
      std::fill(counts.begin(), counts.end(), 0u);
      for (Elem y = 0; y < q; ++y)
        for (Elem z = 0; z < q; ++z) ++counts[t(a, y, z) * q + t(c, y, z)];
      for (Elem b = 0; b < q; ++b) {
        if (best && b > (*best)[0]) break;
        for (Elem d = 0; d < q; ++d) {
          if (counts[b * q + d] == 1) continue;
          std::array<Elem, 3> cand{b, c, d};
          if (!best || cand < *best) best = cand;
          break;
        }
      }
    }
    if (best) return fail({a, (*best)[0], (*best)[1], (*best)[2]});
  }
  return {};
}

void require_ptr(const TernaryTable& t) {
  const auto r = check_ptr_properties(t);
  if (!r.ptr()) {
    const PropertyVerdict* v[] = {&r.a, &r.b, &r.c, &r.d, &r.e};
    const char* names = "abcde";
    for (int i = 0; i < 5; ++i) {
      if (!v[i]->holds) {
        std::vector<std::int64_t> w(v[i]->witness.begin(), v[i]->witness.end());
        throw Error(Errc::NotPTR, std::string("property (") + names[i] + ") fails", std::move(w));
      }
    }
  }
}

}  // namespace

PropertyReport check_ptr_properties(const TernaryTable& table) {
  PropertyReport r;
  r.a = check_a(table);
  r.b = check_b(table);
  r.c = check_c(table);
  r.d = check_d(table);
  r.e = check_e(table);
  return r;
}

LoopReport loop_analysis(const LoopTable& loop) {
  LoopReport r;
  const auto& s = loop.carrier();
  const std::size_t n = s.size();
  r.order = n;
  const Elem e = loop.identity();
  std::vector<char> member(loop.width(), 0);
  for (auto a : s) member[a] = 1;

  r.closed = true;
  for (auto a : s)
    for (auto b : s)
      if (loop.op(a, b) >= loop.width() || !member[loop.op(a, b)]) r.closed = false;
  if (!r.closed) return r;

  r.identity_law = e < loop.width() && member[e];
  for (auto a : s)
    if (r.identity_law && (loop.op(e, a) != a || loop.op(a, e) != a)) r.identity_law = false;

  r.latin = true;
  std::vector<char> row(loop.width()), col(loop.width());
  for (auto a : s) {
    std::fill(row.begin(), row.end(), 0);
    std::fill(col.begin(), col.end(), 0);
    for (auto b : s) {
      row[loop.op(a, b)] = 1;
      col[loop.op(b, a)] = 1;
    }
    for (auto b : s)
      if (!row[b] || !col[b]) r.latin = false;
    if (!r.latin) break;
  }
  r.is_loop = r.identity_law && r.latin;

  r.commutative = true;
  for (auto a : s)
    for (auto b : s)
      if (loop.op(a, b) != loop.op(b, a)) r.commutative = false;

  r.associative = true;
  for (std::size_t i = 0; i < n && r.associative; ++i)
    for (auto b : s)
      for (auto c : s) {
        const Elem a = s[i];
        if (loop.op(loop.op(a, b), c) != loop.op(a, loop.op(b, c))) {
          r.associative = false;
          break;
        }
      }

  if (r.identity_law)
    for (auto t : s)
      if (t != e && loop.op(t, t) == e) r.involutions.push_back(t);

  r.group = r.is_loop && r.associative;
  if (r.group) {
    std::vector<std::size_t> orders;
    for (auto a : s) {
      std::size_t k = 1;
      for (Elem x = a; x != e; x = loop.op(x, a)) ++k;
      orders.push_back(k);
    }
    r.cyclic = std::find(orders.begin(), orders.end(), n) != orders.end();
    if (r.commutative) {
      std::size_t p = 0;
      bool ok = true;
      for (auto k : orders) {
        if (k == 1) continue;
        if (p == 0) p = k;
        if (k != p) ok = false;
      }
      r.elementary_abelian = ok && (p == 0 || is_prime(p));
    }
  }
  return r;
}

PtrLoops extract_loops(const TernaryTable& table) {
  require_ptr(table);
  const Elem q = table.q();
  std::vector<Elem> all(q), nonzero, plus(std::size_t{q} * q), times(std::size_t{q} * q);
  for (Elem x = 0; x < q; ++x) {
    all[x] = x;
    if (x != 0) nonzero.push_back(x);
    for (Elem y = 0; y < q; ++y) {
      plus[x * q + y] = table(1, x, y);
      times[x * q + y] = table(x, y, 0);
    }
  }
  PtrLoops loops{LoopTable(std::move(all), 0, q, std::move(plus)), LoopTable(std::move(nonzero), 1, q, std::move(times))};
  if (!loop_analysis(loops.plus).is_loop || (q > 1 && !loop_analysis(loops.times).is_loop)) {
    throw Error(Errc::InternalContradiction, "loops of a table satisfying (a)-(e) are not loops");
  }
  return loops;
}

LinearityReport is_linear(const TernaryTable& table) {
  require_ptr(table);
  const Elem q = table.q();
  LinearityReport r;
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y)
      for (Elem z = 0; z < q; ++z)
        if (table(x, y, z) != table(1, table(x, y, 0), z)) {
          r.linear = false;
          r.witness = std::array<Elem, 3>{x, y, z};
          return r;
        }
  return r;
}

}  // namespace ptrforge
