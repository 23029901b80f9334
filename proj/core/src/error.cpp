#include "snccoh/error.hpp"

namespace snccoh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::CompositionNonzero: return "CompositionNonzero";
    case ErrorKind::BadTuple: return "BadTuple";
    case ErrorKind::FunctorialityViolation: return "FunctorialityViolation";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::IncompatibleSection: return "IncompatibleSection";
    case ErrorKind::ZeroSection: return "ZeroSection";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::InvalidBicomplex: return "InvalidBicomplex";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::MissingTable: return "MissingTable";
    case ErrorKind::UnderdeterminedRestrictions: return "UnderdeterminedRestrictions";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::NecessaryConditionFailed: return "NecessaryConditionFailed";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace snccoh
