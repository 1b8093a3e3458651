#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poset_endo {

enum class ErrorKind {
  CycleDetected,
  RedundantCover,
  IndexOutOfRange,
  DuplicateCover,
  NotGraded,
  EmptySelection,
  RankOutOfRange,
  SizeLimit,
  BudgetExceeded,
  NotUpSingle,
  NotOlderSibling,
  NotCentral,
  WrongCase,
  NotOrderPreserving,
  SizeMismatch,
  GlueMismatch,
  RetryExhausted,
  InvalidParameter,
  ParseError,
  UnknownSuite,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::RedundantCover: return "RedundantCover";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateCover: return "DuplicateCover";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotUpSingle: return "NotUpSingle";
    case ErrorKind::NotOlderSibling: return "NotOlderSibling";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::WrongCase: return "WrongCase";
    case ErrorKind::NotOrderPreserving: return "NotOrderPreserving";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::GlueMismatch: return "GlueMismatch";
    case ErrorKind::RetryExhausted: return "RetryExhausted";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace poset_endo
