#ifndef OPVFRAME_ERRORS_HPP
#define OPVFRAME_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opv {

// Failure categories raised by the library. Every throw site picks one of
// these so callers can match on the condition instead of parsing messages.
enum class Errc {
  // linalg
  NotSquare,
  NotHermitian,
  NoConvergence,
  NotIsometry,
  DegenerateComplement,
  SingularOrIndefinite,
  MajorizationViolated,
  LengthMismatch,
  InvalidDimension,
  // frames and duals
  NotAFrame,
  NotParseval,
  NotAProjection,
  InsufficientCodomain,
  TheoremViolation,
  SignatureMismatch,
  IllConditioned,
  // constructions
  InsufficientRows,
  TraceMismatch,
  Infeasible,
  // erasure
  KTooLarge,
  SubsetLimitExceeded,
  IndexOutOfRange,
  // serialization
  ParseError,
  VersionUnsupported,
  ShapeMismatch,
};

const char* errc_name(Errc code);

class OpvError : public std::runtime_error {
 public:
  OpvError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// MajorizationViolated carries the first prefix length k (1-based) whose
// partial sum fails; k == length means the total sums disagree.
class MajorizationError : public OpvError {
 public:
  MajorizationError(std::size_t violating_prefix, const std::string& what)
      : OpvError(Errc::MajorizationViolated, what),
        violating_prefix_(violating_prefix) {}

  std::size_t violating_prefix() const { return violating_prefix_; }

 private:
  std::size_t violating_prefix_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw OpvError(code, what);
}

}  // namespace opv

#endif
