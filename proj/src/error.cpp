#include "ptrforge/error.hpp"

namespace ptrforge {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidElement: return "InvalidElement";
    case Errc::IncompleteTable: return "IncompleteTable";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotReduced: return "NotReduced";
    case Errc::ParseError: return "ParseError";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::NotWeakPTR: return "NotWeakPTR";
    case Errc::NotPTR: return "NotPTR";
    case Errc::NotQuasifield: return "NotQuasifield";
    case Errc::NotQuadrangle: return "NotQuadrangle";
    case Errc::OrderNotPrimePower: return "OrderNotPrimePower";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::LabellingInvalid: return "LabellingInvalid";
    case Errc::InvalidWitness: return "InvalidWitness";
    case Errc::QuadrangleNotInSubplane: return "QuadrangleNotInSubplane";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::GroupNotElementaryAbelian: return "GroupNotElementaryAbelian";
    case Errc::GroupNotCyclic: return "GroupNotCyclic";
    case Errc::InvalidFlag: return "InvalidFlag";
    case Errc::NotPropertyAForm: return "NotPropertyAForm";
    case Errc::AssumptionsUnmet: return "AssumptionsUnmet";
    case Errc::InternalContradiction: return "InternalContradiction";
    case Errc::NotTwoToOne: return "NotTwoToOne";
    case Errc::UnknownEntry: return "UnknownEntry";
    case Errc::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

namespace {

std::string compose(Errc code, const std::string& detail) {
  std::string out(to_string(code));
  if (!detail.empty()) {
    out += ": ";
    out += detail;
  }
  return out;
}

}  // namespace

Error::Error(Errc code, std::string detail, std::vector<std::int64_t> witness)
    : std::runtime_error(compose(code, detail)),
      code_(code),
      detail_(std::move(detail)),
      witness_(std::move(witness)) {}

}  // namespace ptrforge
