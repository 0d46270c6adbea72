#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ptrforge {

// A field element in canonical encoding: an integer in [0, q) whose base-p
// digits (least significant first) are the coefficients of 1, x, x^2, ...
using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 16;

enum class ArithOp { Add, Sub, Mul, Inv, Pow, Neg };

bool is_prime(std::uint64_t n) noexcept;

// Returns (p, e) with n = p^e, or nullopt when n is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n) noexcept;

/// Immutable arithmetic context for F_{p^e}.
///
/// The modulus is the lexicographically smallest monic irreducible of degree e
/// over F_p (coefficients compared leading-first, constant term last), so
/// element encodings are reproducible. Copies share the same tables.
class Field {
 public:
  static Field make(std::uint32_t p, std::uint32_t e);
  static Field for_order(std::uint64_t q);

  std::uint32_t p() const noexcept;
  std::uint32_t e() const noexcept;
  std::uint32_t q() const noexcept;

  // Monic modulus, leading coefficient first.
  const std::vector<Elem>& irreducible() const noexcept;

  bool contains(std::uint64_t a) const noexcept { return a < q(); }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t n) const noexcept;

  // Least element (in encoding order) generating the multiplicative group.
  Elem primitive() const noexcept;
  // Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const noexcept;
  Elem exp(std::uint64_t k) const noexcept;

  Elem digit(Elem a, std::uint32_t i) const noexcept;
  Elem from_digits(std::span<const Elem> digits) const noexcept;

  friend bool operator==(const Field& lhs, const Field& rhs) noexcept {
    return lhs.p() == rhs.p() && lhs.e() == rhs.e();
  }

 private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> tables) : t_(std::move(tables)) {}
  std::shared_ptr<const Tables> t_;
};

// Checked arithmetic entry point; validates encodings and throws on misuse.
// For Pow, b is the exponent; for Inv and Neg, b is ignored.
Elem arith(const Field& field, ArithOp op, Elem a, std::uint64_t b = 0);

}  // namespace ptrforge
