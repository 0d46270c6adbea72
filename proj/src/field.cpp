#include "ptrforge/field.hpp"

#include <algorithm>
#include <string>

#include "ptrforge/error.hpp"

namespace ptrforge {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n) noexcept {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::pair{static_cast<std::uint32_t>(n), 1u};
  std::uint32_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), e};
}

namespace {

using Poly = std::vector<Elem>;  // coefficients over F_p, constant term first

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Remainder of a modulo monic m, all over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  a = trim(std::move(a));
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const Elem lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<Elem>((a[shift + i] + (p - lead) * m[i]) % p);
    }
    a = trim(std::move(a));
  }
  return a;
}

bool has_proper_factor(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<Elem>(c % p);
        c /= p;
      }
      if (poly_mod(f, g, p).empty()) return true;
    }
  }
  return false;
}

}  // namespace

struct Field::Tables {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  std::vector<Elem> irreducible;  // leading first
  std::vector<Elem> negation;
  std::vector<std::uint32_t> logs;
  std::vector<Elem> exps;  // length 2(q-1)
  std::vector<Elem> add_table;  // q*q when small
  Elem primitive = 1;
};

Field Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime", {p});
  if (e < 1) throw Error(Errc::DegreeOutOfRange, "extension degree must be >= 1", {e});
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(Errc::DegreeOutOfRange, "field order exceeds the supported cap 2^16", {p, e});
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<std::uint32_t>(q);

  // Monic candidates in lexicographic order (leading first) correspond to
  // codes sum c_i p^i, so scanning codes in increasing order finds the
  // canonical modulus first.
  Poly modulus;
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly f(e + 1, 0);
    f[e] = 1;
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < e; ++i) {
      f[i] = static_cast<Elem>(c % p);
      c /= p;
    }
    if (!has_proper_factor(f, p)) {
      modulus = std::move(f);
      break;
    }
  }
  t->irreducible.assign(modulus.rbegin(), modulus.rend());

  auto to_poly = [&](Elem a) {
    Poly v(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      v[i] = a % p;
      a /= p;
    }
    return v;
  };
  auto from_poly = [&](const Poly& v) {
    Elem a = 0;
    for (std::size_t i = v.size(); i-- > 0;) a = a * p + v[i];
    return a;
  };
  auto slow_mul = [&](Elem a, Elem b) {
    const Poly pa = to_poly(a);
    const Poly pb = to_poly(b);
    Poly prod(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      for (std::uint32_t j = 0; j < e; ++j) {
        prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      }
    }
    Poly r = poly_mod(std::move(prod), modulus, p);
    r.resize(e, 0);
    return from_poly(r);
  };

  t->negation.resize(q);
  for (Elem a = 0; a < q; ++a) {
    Poly v = to_poly(a);
    for (auto& c : v) c = (p - c) % p;
    t->negation[a] = from_poly(v);
  }

  // Primitive element: least generator in encoding order.
  t->logs.assign(q, 0);
  t->exps.assign(2 * (q - 1), 0);
  for (Elem g = 1; g < q; ++g) {
    std::vector<Elem> powers;
    powers.reserve(q - 1);
    Elem x = 1;
    bool ok = true;
    for (std::uint64_t k = 0; k < q - 1; ++k) {
      if (k > 0 && x == 1) {
        ok = false;
        break;
      }
      powers.push_back(x);
      x = slow_mul(x, g);
    }
    if (!ok || x != 1) continue;
    t->primitive = g;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
      t->exps[k] = powers[k];
      t->exps[k + q - 1] = powers[k];
      t->logs[powers[k]] = k;
    }
    break;
  }

  if (q <= 1024) {
    t->add_table.resize(q * q);
    for (Elem a = 0; a < q; ++a) {
      const Poly pa = to_poly(a);
      for (Elem b = 0; b < q; ++b) {
        Poly pb = to_poly(b);
        for (std::uint32_t i = 0; i < e; ++i) pb[i] = (pb[i] + pa[i]) % p;
        t->add_table[a * q + b] = from_poly(pb);
      }
    }
  }
  return Field(std::move(t));
}

Field Field::for_order(std::uint64_t q) {
  const auto pe = prime_power(q);
  if (!pe) throw Error(Errc::OrderNotPrimePower, std::to_string(q) + " is not a prime power", {static_cast<std::int64_t>(q)});
  return make(pe->first, pe->second);
}

std::uint32_t Field::p() const noexcept { return t_->p; }
std::uint32_t Field::e() const noexcept { return t_->e; }
std::uint32_t Field::q() const noexcept { return t_->q; }
const std::vector<Elem>& Field::irreducible() const noexcept { return t_->irreducible; }

Elem Field::add(Elem a, Elem b) const noexcept {
  const auto& t = *t_;
  if (t.p == 2) return a ^ b;
  if (t.e == 1) {
    const Elem s = a + b;
    return s >= t.p ? s - t.p : s;
  }
  if (!t.add_table.empty()) return t.add_table[a * t.q + b];
  Elem out = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < t.e; ++i) {
    out += ((a % t.p + b % t.p) % t.p) * scale;
    a /= t.p;
    b /= t.p;
    scale *= t.p;
  }
  return out;
}

Elem Field::neg(Elem a) const noexcept { return t_->negation[a]; }
Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, t_->negation[b]); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return t_->exps[t_->logs[a] + t_->logs[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  const auto& t = *t_;
  return t.exps[(t.q - 1 - t.logs[a]) % (t.q - 1)];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t n) const noexcept {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const auto& t = *t_;
  return t.exps[(static_cast<std::uint64_t>(t.logs[a]) * (n % (t.q - 1))) % (t.q - 1)];
}

Elem Field::primitive() const noexcept { return t_->primitive; }
std::uint32_t Field::log(Elem a) const noexcept { return t_->logs[a]; }
Elem Field::exp(std::uint64_t k) const noexcept { return t_->exps[k % (t_->q - 1)]; }

Elem Field::digit(Elem a, std::uint32_t i) const noexcept {
  for (std::uint32_t k = 0; k < i; ++k) a /= t_->p;
  return a % t_->p;
}

Elem Field::from_digits(std::span<const Elem> digits) const noexcept {
  Elem a = 0;
  for (std::size_t i = digits.size(); i-- > 0;) a = a * t_->p + digits[i];
  return a;
}

Elem arith(const Field& field, ArithOp op, Elem a, std::uint64_t b) {
  auto check = [&](std::uint64_t v) {
    if (!field.contains(v)) {
      throw Error(Errc::InvalidElement, std::to_string(v) + " is not an element of F_" + std::to_string(field.q()),
                  {static_cast<std::int64_t>(v)});
    }
  };
  check(a);
  switch (op) {
    case ArithOp::Add: check(b); return field.add(a, static_cast<Elem>(b));
    case ArithOp::Sub: check(b); return field.sub(a, static_cast<Elem>(b));
    case ArithOp::Mul: check(b); return field.mul(a, static_cast<Elem>(b));
    case ArithOp::Inv: return field.inv(a);
    case ArithOp::Pow: return field.pow(a, b);
    case ArithOp::Neg: return field.neg(a);
  }
  return 0;
}

}  // namespace ptrforge
