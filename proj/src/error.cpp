#include "atk/error.hpp"

namespace atk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::ComplexInvalid: return "ComplexInvalid";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Underdetermined: return "Underdetermined";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InvalidQuotient: return "InvalidQuotient";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::NoValidColumn: return "NoValidColumn";
    case ErrorKind::ZeroClass: return "ZeroClass";
    case ErrorKind::BudgetZero: return "BudgetZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSplitting: return "NotSplitting";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::MissingData: return "MissingData";
  }
  return "Unknown";
}

}  // namespace atk
