#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppav {

enum class ErrorKind {
  InvalidArgument,
  NotAlternating,
  RankDeficient,
  OrderMismatch,
  Degenerate,
  IncompatibleForm,
  NotPositive,
  NotMember,
  NotStable,
  NotSaturated,
  BudgetExceeded,
  CapExceeded,
  DimensionMismatch,
  NotInvertible,
  NotInvariant,
  BadOrder,
  DegeneratePairing,
  TypeMismatch,
  IntegralityFailure,
  NotUnimodular,
  IndexMismatch,
  GraphNotFixed,
  GraphNotIsotropic,
  NotReflectionGenerated,
  FixedDimMismatch,
  UnknownCheck,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ppav
