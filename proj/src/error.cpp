#include "ppav/error.hpp"

namespace ppav {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::IncompatibleForm: return "IncompatibleForm";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::DegeneratePairing: return "DegeneratePairing";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::IntegralityFailure: return "IntegralityFailure";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::GraphNotFixed: return "GraphNotFixed";
    case ErrorKind::GraphNotIsotropic: return "GraphNotIsotropic";
    case ErrorKind::NotReflectionGenerated: return "NotReflectionGenerated";
    case ErrorKind::FixedDimMismatch: return "FixedDimMismatch";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ppav
