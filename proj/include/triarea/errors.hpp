#pragma once

#include <stdexcept>
#include <string>

namespace triarea {

enum class Err {
  too_few_points,
  duplicate_points,
  duplicate_lines,
  degenerate,
  no_nonzero_triangle,
  odd_n,
  bad_n,
  construction_failed,
  charging_invariant_violated,
  audit_failed,
  parallel_lines,
  parallel_axes,
  invariant_violated,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline const char* err_name(Err code) {
  switch (code) {
    case Err::too_few_points: return "TooFewPoints";
    case Err::duplicate_points: return "DuplicatePoints";
    case Err::duplicate_lines: return "DuplicateLines";
    case Err::degenerate: return "Degenerate";
    case Err::no_nonzero_triangle: return "NoNonzeroTriangle";
    case Err::odd_n: return "OddN";
    case Err::bad_n: return "BadN";
    case Err::construction_failed: return "ConstructionFailed";
    case Err::charging_invariant_violated: return "ChargingInvariantViolated";
    case Err::audit_failed: return "AuditFailed";
    case Err::parallel_lines: return "ParallelLines";
    case Err::parallel_axes: return "ParallelAxes";
    case Err::invariant_violated: return "InvariantViolated";
    case Err::parse_error: return "ParseError";
  }
  return "UnknownError";
}

// Process exit code for the CLI: 1 = a check/audit failed, 2 = bad input or
// bad usage, 3 = a construction could not be completed.
inline int err_exit_code(Err code) {
  switch (code) {
    case Err::audit_failed:
    case Err::charging_invariant_violated:
    case Err::invariant_violated:
      return 1;
    case Err::construction_failed:
      return 3;
    default:
      return 2;
  }
}

}  // namespace triarea
