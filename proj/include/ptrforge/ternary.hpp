#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ptrforge/field.hpp"

namespace ptrforge {

/// A total map F_q^3 -> F_q stored as q^3 values in (m,x,y) encoding order.
class TernaryTable {
 public:
  TernaryTable(Field field, std::vector<Elem> values);

  template <class F>
  static TernaryTable from_function(const Field& field, F&& f) {
    const std::size_t q = field.q();
    std::vector<Elem> values(q * q * q);
    for (Elem m = 0; m < q; ++m)
      for (Elem x = 0; x < q; ++x)
        for (Elem y = 0; y < q; ++y) values[(m * q + x) * q + y] = f(m, x, y);
    return TernaryTable(field, std::move(values));
  }

  const Field& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.q(); }
  Elem operator()(Elem m, Elem x, Elem y) const noexcept { return values_[(m * q_ + x) * q_ + y]; }
  std::span<const Elem> values() const noexcept { return values_; }

  friend bool operator==(const TernaryTable& a, const TernaryTable& b) {
    return a.field_ == b.field_ && a.values_ == b.values_;
  }

 private:
  Field field_;
  std::size_t q_;
  std::vector<Elem> values_;
};

// T(m,x,y) = m*x + y in the field.
TernaryTable linear_field_table(const Field& field);

/// A binary operation restricted to a carrier set.
///
/// The operation table is width x width and indexed by raw element values;
/// only carrier rows and columns are meaningful (for the multiplicative loop
/// the carrier is F_q minus zero while width stays q).
class LoopTable {
 public:
  LoopTable() = default;
  LoopTable(std::vector<Elem> carrier, Elem identity, std::size_t width, std::vector<Elem> table);

  const std::vector<Elem>& carrier() const noexcept { return carrier_; }
  Elem identity() const noexcept { return identity_; }
  std::size_t width() const noexcept { return width_; }
  Elem op(Elem a, Elem b) const noexcept { return table_[a * width_ + b]; }
  std::span<const Elem> table() const noexcept { return table_; }

  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.carrier_ == b.carrier_ && a.identity_ == b.identity_ && a.width_ == b.width_ && a.table_ == b.table_;
  }

 private:
  std::vector<Elem> carrier_;
  Elem identity_ = 0;
  std::size_t width_ = 0;
  std::vector<Elem> table_;
};

LoopTable field_addition(const Field& field);
// Multiplicative loop on the nonzero elements.
LoopTable field_multiplication(const Field& field);
// Full q x q multiplication table with carrier F_q (used for quasifields).
LoopTable field_multiplication_with_zero(const Field& field);

}  // namespace ptrforge
