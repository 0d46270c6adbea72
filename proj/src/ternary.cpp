#include "ptrforge/ternary.hpp"

#include <string>

#include "ptrforge/error.hpp"

namespace ptrforge {

TernaryTable::TernaryTable(Field field, std::vector<Elem> values)
    : field_(std::move(field)), q_(field_.q()), values_(std::move(values)) {
  if (values_.size() != q_ * q_ * q_) {
    throw Error(Errc::IncompleteTable,
                "ternary table has " + std::to_string(values_.size()) + " values, expected " + std::to_string(q_ * q_ * q_));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= q_) throw Error(Errc::InvalidElement, "table value out of range", {static_cast<std::int64_t>(i)});
  }
}

TernaryTable linear_field_table(const Field& field) {
  return TernaryTable::from_function(field, [&](Elem m, Elem x, Elem y) { return field.add(field.mul(m, x), y); });
}

LoopTable::LoopTable(std::vector<Elem> carrier, Elem identity, std::size_t width, std::vector<Elem> table)
    : carrier_(std::move(carrier)), identity_(identity), width_(width), table_(std::move(table)) {
  if (table_.size() != width_ * width_) throw Error(Errc::IncompleteTable, "loop table must be width x width");
  for (auto c : carrier_) {
    if (c >= width_) throw Error(Errc::InvalidElement, "carrier element out of range", {c});
  }
}

LoopTable field_addition(const Field& field) {
  const std::size_t q = field.q();
  std::vector<Elem> carrier(q);
  std::vector<Elem> table(q * q);
  for (Elem a = 0; a < q; ++a) {
    carrier[a] = a;
    for (Elem b = 0; b < q; ++b) table[a * q + b] = field.add(a, b);
  }
  return LoopTable(std::move(carrier), 0, q, std::move(table));
}

LoopTable field_multiplication(const Field& field) {
  const std::size_t q = field.q();
  std::vector<Elem> carrier;
  std::vector<Elem> table(q * q);
  for (Elem a = 0; a < q; ++a) {
    if (a != 0) carrier.push_back(a);
    for (Elem b = 0; b < q; ++b) table[a * q + b] = field.mul(a, b);
  }
  return LoopTable(std::move(carrier), 1, q, std::move(table));
}

LoopTable field_multiplication_with_zero(const Field& field) {
  const std::size_t q = field.q();
  std::vector<Elem> carrier(q);
  std::vector<Elem> table(q * q);
  for (Elem a = 0; a < q; ++a) {
    carrier[a] = a;
    for (Elem b = 0; b < q; ++b) table[a * q + b] = field.mul(a, b);
  }
  return LoopTable(std::move(carrier), 1, q, std::move(table));
}

}  // namespace ptrforge
