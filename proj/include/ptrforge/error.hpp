#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptrforge {

enum class Errc {
  NotPrime,
  DegreeOutOfRange,
  DivisionByZero,
  InvalidElement,
  IncompleteTable,
  ArityMismatch,
  NotReduced,
  ParseError,
  AxiomViolation,
  NotWeakPTR,
  NotPTR,
  NotQuasifield,
  NotQuadrangle,
  OrderNotPrimePower,
  FieldMismatch,
  LabellingInvalid,
  InvalidWitness,
  QuadrangleNotInSubplane,
  NotTransitive,
  GroupNotElementaryAbelian,
  GroupNotCyclic,
  InvalidFlag,
  NotPropertyAForm,
  AssumptionsUnmet,
  InternalContradiction,
  NotTwoToOne,
  UnknownEntry,
  VerificationFailed,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library. The witness carries the offending
// indices or elements (meaning depends on the code) so callers can re-check it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail, std::vector<std::int64_t> witness = {});

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::string detail_;
  std::vector<std::int64_t> witness_;
};

}  // namespace ptrforge
