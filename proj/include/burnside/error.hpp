#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace burnside {

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  NoInverse,
  OrderCapExceeded,
  InvalidPermutation,
  NotSubgroup,
  InvalidLattice,
  InvalidFamily,
  CapExceeded,
  ActionNotByHomomorphisms,
  NotAbelian,
  FunctorAxiomViolated,
  BasisMismatch,
  DenominatorNotPLocal,
  NotLatticeFunctor,
  NotInWeylGroup,
  ConditionAViolated,
  NotGClosed,
  ClosureViolated,
  RankCapExceeded,
  InvalidInput,
};

std::string_view error_code_name(ErrorCode code);

// Every library failure is reported through this type; the code is stable,
// the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace burnside
