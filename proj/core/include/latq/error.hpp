#pragma once

#include <stdexcept>
#include <string>

namespace latq {

/// Failure taxonomy for lattice construction, morphism validation,
/// enumeration guards, and text I/O.
enum class Errc {
  NotAPartialOrder,
  NoBottom,
  NoTop,
  NotALattice,
  TrivialLattice,
  ElementNotInLattice,
  ElementNotInCarrier,
  NotJoinPreserving,
  BottomNotPreserved,
  NotMonotone,
  CompositionMismatch,
  MixedClasses,
  ParallelismViolation,
  SizeGuardExceeded,
  ObjectNotInSubcategory,
  DegenerateHomSet,
  NoInteriorElement,
  TripleHypothesisViolated,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message, int line = 0);

  Errc code() const { return code_; }

  /// 1-based input line for ParseError, 0 otherwise.
  int line() const { return line_; }

private:
  Errc code_;
  int line_;
};

[[noreturn]] void raise(Errc code, const std::string& message);
[[noreturn]] void raise_parse(const std::string& message, int line);

}  // namespace latq
