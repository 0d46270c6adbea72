#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ptrforge/field.hpp"

namespace ptrforge {

using Exponents = std::vector<std::uint32_t>;

/// Multivariate polynomial over F_q with every exponent below q.
///
/// Terms live in a map keyed by exponent tuples, so iteration is lexicographic
/// and zero coefficients are never stored. Dense value tables used by
/// evaluate_all() and interpolate() are indexed with the first variable most
/// significant: index = sum x_k * q^(n-1-k).
class ReducedPoly {
 public:
  ReducedPoly(Field field, std::size_t arity);

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::map<Exponents, Elem>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Elem coefficient(const Exponents& exps) const;
  // Adds c to the coefficient of the given monomial.
  void add_term(const Exponents& exps, Elem c);
  void set_term(const Exponents& exps, Elem c);

  std::uint32_t degree_in(std::size_t var) const;

  Elem evaluate(std::span<const Elem> point) const;
  std::vector<Elem> evaluate_all() const;

  friend bool operator==(const ReducedPoly& a, const ReducedPoly& b) {
    return a.field_ == b.field_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void check_exponents(const Exponents& exps) const;

  Field field_;
  std::size_t arity_;
  std::map<Exponents, Elem> terms_;
};

ReducedPoly operator+(const ReducedPoly& a, const ReducedPoly& b);
ReducedPoly operator-(const ReducedPoly& a, const ReducedPoly& b);
// Product reduced modulo X_k^q - X_k.
ReducedPoly operator*(const ReducedPoly& a, const ReducedPoly& b);

// Number of points in F_q^arity, i.e. the expected table length.
std::size_t table_size(const Field& field, std::size_t arity);

/// The unique reduced polynomial agreeing with table on F_q^arity.
///
/// Expands sum_a t(a) prod_k (1 - (X_k - a_k)^(q-1)) one variable at a time.
ReducedPoly interpolate(const Field& field, std::size_t arity, std::span<const Elem> table);

// Text format: "poly q=.. p=.. e=.. n=.." then "<i1> .. <in> <coeff>" per term.
std::string to_text(const ReducedPoly& poly);
ReducedPoly poly_from_text(const std::string& text);

// Human-readable rendering such as "X*Y + Z" (variables X, Y, Z, W, X5, ...).
std::string to_pretty(const ReducedPoly& poly);

}  // namespace ptrforge
