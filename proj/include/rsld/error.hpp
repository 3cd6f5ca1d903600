#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsld {

enum class Errc {
  // gf
  NotPrime,
  DegreeZero,
  FieldTooLarge,
  DivisionByZero,
  MixedFields,
  NotPrimePower,
  // codes
  LengthMismatch,
  TooFewCodewords,
  RadiusOutOfRange,
  PlanMismatch,
  NTooLarge,
  // rs
  DuplicateEvalPoint,
  DegreeOutOfRange,
  WrongCoefficientCount,
  TooLargeToMaterialize,
  // listdec
  SearchSpaceTooLarge,
  BudgetExceeded,
  // badtuples
  DuplicateTupleEntry,
  DuplicateWord,
  HypothesisUnmet,
  RetriesExhausted,
  NotSubset,
  // bounds
  UncertifiedComparison,
  InvalidDistance,
  FieldSizeTooSmall,
  // harness / io
  ConfigInvalid,
  IoError,
  ParseError,
  SchemaVersionMismatch,
  // generic precondition violation
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Process exit code for the CLI: 2 precondition violation, 3 budget exhausted, 4 I/O.
int exit_code_for(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rsld
