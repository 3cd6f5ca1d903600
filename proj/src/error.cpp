#include "rsld/error.hpp"

namespace rsld {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooFewCodewords: return "TooFewCodewords";
    case Errc::RadiusOutOfRange: return "RadiusOutOfRange";
    case Errc::PlanMismatch: return "PlanMismatch";
    case Errc::NTooLarge: return "NTooLarge";
    case Errc::DuplicateEvalPoint: return "DuplicateEvalPoint";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::WrongCoefficientCount: return "WrongCoefficientCount";
    case Errc::TooLargeToMaterialize: return "TooLargeToMaterialize";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DuplicateTupleEntry: return "DuplicateTupleEntry";
    case Errc::DuplicateWord: return "DuplicateWord";
    case Errc::HypothesisUnmet: return "HypothesisUnmet";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::NotSubset: return "NotSubset";
    case Errc::UncertifiedComparison: return "UncertifiedComparison";
    case Errc::InvalidDistance: return "InvalidDistance";
    case Errc::FieldSizeTooSmall: return "FieldSizeTooSmall";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::IoError: return "IoError";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaVersionMismatch: return "SchemaVersionMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::BudgetExceeded:
    case Errc::SearchSpaceTooLarge:
    case Errc::RetriesExhausted:
    case Errc::TooLargeToMaterialize:
      return 3;
    case Errc::IoError:
    case Errc::ParseError:
    case Errc::SchemaVersionMismatch:
      return 4;
    default:
      return 2;
  }
}

}  // namespace rsld
