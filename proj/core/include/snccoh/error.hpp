#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace snccoh {

/// Failure categories raised by the library. Each names the precondition or
/// invariant that was violated; the cli maps all of them to "input error".
enum class ErrorKind {
  ShapeMismatch,
  CompositionNonzero,
  BadTuple,
  FunctorialityViolation,
  BaseMismatch,
  IncompatibleSection,
  ZeroSection,
  NotSplit,
  InvalidBicomplex,
  NotSimplicial,
  NotClosed,
  MissingTable,
  UnderdeterminedRestrictions,
  HypothesisViolated,
  NotSmooth,
  InvalidFan,
  NecessaryConditionFailed,
  InvalidSpec,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace snccoh
