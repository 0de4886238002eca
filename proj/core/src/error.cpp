#include "latq/error.hpp"

namespace latq {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotAPartialOrder: return "NotAPartialOrder";
    case Errc::NoBottom: return "NoBottom";
    case Errc::NoTop: return "NoTop";
    case Errc::NotALattice: return "NotALattice";
    case Errc::TrivialLattice: return "TrivialLattice";
    case Errc::ElementNotInLattice: return "ElementNotInLattice";
    case Errc::ElementNotInCarrier: return "ElementNotInCarrier";
    case Errc::NotJoinPreserving: return "NotJoinPreserving";
    case Errc::BottomNotPreserved: return "BottomNotPreserved";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::CompositionMismatch: return "CompositionMismatch";
    case Errc::MixedClasses: return "MixedClasses";
    case Errc::ParallelismViolation: return "ParallelismViolation";
    case Errc::SizeGuardExceeded: return "SizeGuardExceeded";
    case Errc::ObjectNotInSubcategory: return "ObjectNotInSubcategory";
    case Errc::DegenerateHomSet: return "DegenerateHomSet";
    case Errc::NoInteriorElement: return "NoInteriorElement";
    case Errc::TripleHypothesisViolated: return "TripleHypothesisViolated";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message, int line)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      line_(line) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

void raise_parse(const std::string& message, int line) {
  throw Error(Errc::ParseError, message + " (line " + std::to_string(line) + ")", line);
}

}  // namespace latq
