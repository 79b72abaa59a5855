#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace folia {

enum class ErrorKind {
  InsufficientTruncation,
  NotSmoothHere,
  NotANode,
  IrrationalTangents,
  NotSingularHere,
  CurveIsInvariant,
  BranchNotInvariant,
  UnsupportedBranch,
  MismatchedPoints,
  DepthExceeded,
  TreeIncomplete,
  UnknownCurve,
  InsufficientData,
  MissingIndices,
  NotDecomposable,
  NotContractible,
  NotNef,
  InconsistentModel,
  SyntaxError,
  MixedSyntax,
  NonIntegerExponent,
  SchemaError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorKind::NotSmoothHere: return "NotSmoothHere";
    case ErrorKind::NotANode: return "NotANode";
    case ErrorKind::IrrationalTangents: return "IrrationalTangents";
    case ErrorKind::NotSingularHere: return "NotSingularHere";
    case ErrorKind::CurveIsInvariant: return "CurveIsInvariant";
    case ErrorKind::BranchNotInvariant: return "BranchNotInvariant";
    case ErrorKind::UnsupportedBranch: return "UnsupportedBranch";
    case ErrorKind::MismatchedPoints: return "MismatchedPoints";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::TreeIncomplete: return "TreeIncomplete";
    case ErrorKind::UnknownCurve: return "UnknownCurve";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::MissingIndices: return "MissingIndices";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::NotContractible: return "NotContractible";
    case ErrorKind::NotNef: return "NotNef";
    case ErrorKind::InconsistentModel: return "InconsistentModel";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::MixedSyntax: return "MixedSyntax";
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 protected:
  Error(ErrorKind kind, const std::string& full, const std::string& detail)
      : std::runtime_error(full), kind_(kind), detail_(detail) {}

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace folia
