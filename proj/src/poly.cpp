#include "ptrforge/poly.hpp"

#include <sstream>

#include "ptrforge/error.hpp"

namespace ptrforge {

ReducedPoly::ReducedPoly(Field field, std::size_t arity) : field_(std::move(field)), arity_(arity) {}

void ReducedPoly::check_exponents(const Exponents& exps) const {
  if (exps.size() != arity_) {
    throw Error(Errc::ArityMismatch, "monomial has " + std::to_string(exps.size()) + " exponents, polynomial arity is " +
                                         std::to_string(arity_));
  }
  for (auto i : exps) {
    if (i >= field_.q()) throw Error(Errc::NotReduced, "exponent " + std::to_string(i) + " is not below q", {i});
  }
}

Elem ReducedPoly::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? 0 : it->second;
}

void ReducedPoly::add_term(const Exponents& exps, Elem c) {
  check_exponents(exps);
  if (!field_.contains(c)) throw Error(Errc::InvalidElement, "coefficient out of range", {c});
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void ReducedPoly::set_term(const Exponents& exps, Elem c) {
  check_exponents(exps);
  if (!field_.contains(c)) throw Error(Errc::InvalidElement, "coefficient out of range", {c});
  if (c == 0) {
    terms_.erase(exps);
  } else {
    terms_[exps] = c;
  }
}

std::uint32_t ReducedPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [exps, c] : terms_) d = std::max(d, exps.at(var));
  return d;
}

Elem ReducedPoly::evaluate(std::span<const Elem> point) const {
  if (point.size() != arity_) {
    throw Error(Errc::ArityMismatch, "point has " + std::to_string(point.size()) + " coordinates, polynomial arity is " +
                                         std::to_string(arity_));
  }
  for (auto v : point) {
    if (!field_.contains(v)) throw Error(Errc::InvalidElement, "coordinate out of range", {v});
  }
  Elem acc = 0;
  for (const auto& [exps, c] : terms_) {
    Elem term = c;
    for (std::size_t k = 0; k < arity_; ++k) term = field_.mul(term, field_.pow(point[k], exps[k]));
    acc = field_.add(acc, term);
  }
  return acc;
}

std::size_t table_size(const Field& field, std::size_t arity) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < arity; ++k) n *= field.q();
  return n;
}

namespace {

// Applies out[.., j, ..] = sum_a in[.., a, ..] * kernel[a][j] along one axis.
std::vector<Elem> transform_axis(const Field& f, std::span<const Elem> in, std::size_t arity, std::size_t axis,
                                 const std::vector<std::vector<Elem>>& kernel) {
  const std::size_t q = f.q();
  std::size_t stride = 1;
  for (std::size_t k = axis + 1; k < arity; ++k) stride *= q;
  const std::size_t block = stride * q;
  std::vector<Elem> out(in.size(), 0);
  for (std::size_t base = 0; base < in.size(); base += block) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      for (std::size_t a = 0; a < q; ++a) {
        const Elem v = in[base + a * stride + inner];
        if (v == 0) continue;
        const auto& row = kernel[a];
        for (std::size_t j = 0; j < q; ++j) {
          if (row[j] == 0) continue;
          Elem& slot = out[base + j * stride + inner];
          slot = f.add(slot, f.mul(v, row[j]));
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Elem> ReducedPoly::evaluate_all() const {
  const std::size_t q = field_.q();
  std::vector<Elem> dense(table_size(field_, arity_), 0);
  for (const auto& [exps, c] : terms_) {
    std::size_t idx = 0;
    for (auto i : exps) idx = idx * q + i;
    dense[idx] = c;
  }
  // kernel[j][a] = a^j maps coefficient index j to evaluation point a.
  std::vector<std::vector<Elem>> kernel(q, std::vector<Elem>(q, 0));
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t a = 0; a < q; ++a) kernel[j][a] = field_.pow(static_cast<Elem>(a), j);
  }
  for (std::size_t axis = 0; axis < arity_; ++axis) dense = transform_axis(field_, dense, arity_, axis, kernel);
  return dense;
}

ReducedPoly operator+(const ReducedPoly& a, const ReducedPoly& b) {
  if (!(a.field() == b.field()) || a.arity() != b.arity()) throw Error(Errc::ArityMismatch, "incompatible polynomials");
  ReducedPoly out = a;
  for (const auto& [exps, c] : b.terms()) out.add_term(exps, c);
  return out;
}

ReducedPoly operator-(const ReducedPoly& a, const ReducedPoly& b) {
  if (!(a.field() == b.field()) || a.arity() != b.arity()) throw Error(Errc::ArityMismatch, "incompatible polynomials");
  ReducedPoly out = a;
  for (const auto& [exps, c] : b.terms()) out.add_term(exps, a.field().neg(c));
  return out;
}

ReducedPoly operator*(const ReducedPoly& a, const ReducedPoly& b) {
  if (!(a.field() == b.field()) || a.arity() != b.arity()) throw Error(Errc::ArityMismatch, "incompatible polynomials");
  const Field& f = a.field();
  const std::uint32_t q = f.q();
  ReducedPoly out(f, a.arity());
  Exponents e(a.arity());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t k = 0; k < e.size(); ++k) {
        std::uint32_t s = ea[k] + eb[k];
        // X^q = X on F_q, so exponents >= q fold back into [1, q-1].
        if (s >= q) s -= (q - 1);
        e[k] = s;
      }
      out.add_term(e, f.mul(ca, cb));
    }
  }
  return out;
}

ReducedPoly interpolate(const Field& field, std::size_t arity, std::span<const Elem> table) {
  const std::size_t expected = table_size(field, arity);
  if (table.size() != expected) {
    throw Error(Errc::IncompleteTable, "table has " + std::to_string(table.size()) + " entries, expected " +
                                           std::to_string(expected));
  }
  for (auto v : table) {
    if (!field.contains(v)) throw Error(Errc::InvalidElement, "table value out of range", {v});
  }
  const std::uint32_t q = field.q();

  // indicator[a][j]: coefficient of X^j in 1 - (X - a)^(q-1), expanded by
  // repeated multiplication by (X - a).
  std::vector<std::vector<Elem>> indicator(q, std::vector<Elem>(q, 0));
  for (Elem a = 0; a < q; ++a) {
    std::vector<Elem> power(q, 0);
    power[0] = 1;
    const Elem minus_a = field.neg(a);
    for (std::uint32_t step = 0; step + 1 < q; ++step) {
      std::vector<Elem> next(q, 0);
      for (std::uint32_t j = 0; j + 1 < q; ++j) {
        if (power[j] == 0) continue;
        next[j + 1] = field.add(next[j + 1], power[j]);
        next[j] = field.add(next[j], field.mul(power[j], minus_a));
      }
      power = std::move(next);
    }
    for (std::uint32_t j = 0; j < q; ++j) indicator[a][j] = field.neg(power[j]);
    indicator[a][0] = field.add(indicator[a][0], 1);
  }

  std::vector<Elem> dense(table.begin(), table.end());
  for (std::size_t axis = 0; axis < arity; ++axis) dense = transform_axis(field, dense, arity, axis, indicator);

  ReducedPoly out(field, arity);
  Exponents exps(arity);
  for (std::size_t idx = 0; idx < dense.size(); ++idx) {
    if (dense[idx] == 0) continue;
    std::size_t rest = idx;
    for (std::size_t k = arity; k-- > 0;) {
      exps[k] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    out.set_term(exps, dense[idx]);
  }
  return out;
}

std::string to_text(const ReducedPoly& poly) {
  const Field& f = poly.field();
  std::ostringstream os;
  os << "poly q=" << f.q() << " p=" << f.p() << " e=" << f.e() << " n=" << poly.arity() << '\n';
  for (const auto& [exps, c] : poly.terms()) {
    for (auto i : exps) os << i << ' ';
    os << c << '\n';
  }
  return os.str();
}

namespace {

std::uint64_t parse_key(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) throw Error(Errc::ParseError, "expected '" + prefix + "...', got '" + token + "'");
  try {
    std::size_t used = 0;
    const auto v = std::stoull(token.substr(prefix.size()), &used);
    if (used != token.size() - prefix.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "bad value in '" + token + "'");
  }
}

}  // namespace

ReducedPoly poly_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string magic, tq, tp, te, tn;
  if (!(in >> magic >> tq >> tp >> te >> tn) || magic != "poly") throw Error(Errc::ParseError, "missing poly header");
  const auto q = parse_key(tq, "q");
  const auto p = parse_key(tp, "p");
  const auto e = parse_key(te, "e");
  const auto n = parse_key(tn, "n");
  const Field f = Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
  if (f.q() != q) throw Error(Errc::ParseError, "header q does not equal p^e");
  ReducedPoly out(f, n);
  Exponents exps(n);
  Exponents previous;
  while (true) {
    std::uint64_t v = 0;
    if (!(in >> v)) break;
    exps[0] = static_cast<std::uint32_t>(v);
    for (std::size_t k = 1; k < n; ++k) {
      if (!(in >> v)) throw Error(Errc::ParseError, "truncated monomial line");
      exps[k] = static_cast<std::uint32_t>(v);
    }
    std::uint64_t c = 0;
    if (!(in >> c)) throw Error(Errc::ParseError, "missing coefficient");
    if (c == 0) throw Error(Errc::ParseError, "zero coefficients are not stored");
    if (!previous.empty() && !(previous < exps)) throw Error(Errc::ParseError, "monomials must be strictly sorted");
    out.set_term(exps, static_cast<Elem>(c));
    previous = exps;
  }
  if (!in.eof()) throw Error(Errc::ParseError, "unexpected token in polynomial body");
  return out;
}

std::string to_pretty(const ReducedPoly& poly) {
  if (poly.is_zero()) return "0";
  static const char* names[] = {"X", "Y", "Z", "W"};
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally; keep it deterministic.
  std::vector<std::pair<Exponents, Elem>> terms(poly.terms().begin(), poly.terms().end());
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [exps, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool constant = true;
    std::ostringstream mono;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      if (!constant) mono << '*';
      constant = false;
      if (k < 4) {
        mono << names[k];
      } else {
        mono << 'X' << (k + 1);
      }
      if (exps[k] > 1) mono << '^' << exps[k];
    }
    if (constant) {
      os << c;
    } else if (c == 1) {
      os << mono.str();
    } else {
      os << c << '*' << mono.str();
    }
  }
  return os.str();
}

}  // namespace ptrforge
