#include "burnside/error.hpp"

namespace burnside {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::InvalidLattice: return "InvalidLattice";
    case ErrorCode::InvalidFamily: return "InvalidFamily";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ActionNotByHomomorphisms: return "ActionNotByHomomorphisms";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::FunctorAxiomViolated: return "FunctorAxiomViolated";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::DenominatorNotPLocal: return "DenominatorNotPLocal";
    case ErrorCode::NotLatticeFunctor: return "NotLatticeFunctor";
    case ErrorCode::NotInWeylGroup: return "NotInWeylGroup";
    case ErrorCode::ConditionAViolated: return "ConditionAViolated";
    case ErrorCode::NotGClosed: return "NotGClosed";
    case ErrorCode::ClosureViolated: return "ClosureViolated";
    case ErrorCode::RankCapExceeded: return "RankCapExceeded";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

}  // namespace burnside
