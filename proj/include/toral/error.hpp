#pragma once

#include <stdexcept>
#include <string>

namespace toral {

enum class ErrorKind {
  validation,
  parse,
  not_a_sublattice,
  degenerate_pairing,
  not_a_subgroup,
  not_normal,
  not_cyclic,
  budget_exceeded,
  unknown_preset,
  bad_params,
  not_invariant,
  invalid_arithmetic,
  internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::validation: return "ValidationError";
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::not_a_sublattice: return "NotASublattice";
    case ErrorKind::degenerate_pairing: return "DegeneratePairing";
    case ErrorKind::not_a_subgroup: return "NotASubgroup";
    case ErrorKind::not_normal: return "NotNormal";
    case ErrorKind::not_cyclic: return "NotCyclic";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::unknown_preset: return "UnknownPreset";
    case ErrorKind::bad_params: return "BadParams";
    case ErrorKind::not_invariant: return "NotInvariant";
    case ErrorKind::invalid_arithmetic: return "InvalidArithmeticData";
    case ErrorKind::internal: return "InternalError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace toral
