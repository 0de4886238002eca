#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latq/quantaloid.hpp"

namespace latq {

enum class CheckStatus { Pass, Fail, NotApplicable };

const char* check_status_name(CheckStatus status);

/// One executable check with its evidence. Failing checks always carry a
/// witness morphism in map text format; counterexample-driven checks carry
/// it on pass as well, so the classification can be replayed through the
/// CLI.
struct CheckRecord {
  std::string check;                  // e.g. "Prop4.2"
  std::vector<std::string> lattices;  // object names used
  CheckStatus status = CheckStatus::Fail;
  std::string details;
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  std::string witness;  // map text format, empty when none
  double elapsed_ms = 0.0;

  friend bool operator==(const CheckRecord&, const CheckRecord&);
};

struct VerificationReport {
  std::vector<CheckRecord> checks;  // sorted by (check, lattices)

  bool all_passed() const;  // no Fail entries
  std::size_t failed() const;
  std::size_t not_applicable() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&);
};

struct VerifyOptions {
  std::uint64_t guard = kDefaultEnumerationGuard;
  std::uint64_t seed = 42;  // for sampled law batteries
  int sample_budget = 500;
  /// Hom-sets up to this size are swept exhaustively, larger ones sampled.
  std::uint64_t exhaustive_limit = 100;
};

// Q⁻ = Q⁺ over the isotone-zero class exactly on 2-chains: equality of the
// tier counts there, otherwise the interior-element counterexample is not a
// hull fixed point.
CheckRecord verify_prop22(const LatticePtr& lattice, const VerifyOptions& opts = {});

// Exhaustive agreement of the property-transition test and the subset-pair
// oracle over all power maps source -> target.
CheckRecord verify_prop34(const LatticePtr& source, const LatticePtr& target,
                          const VerifyOptions& opts = {});

// Qst = Q⁺ exactly on 2-chains: equality of counts there, otherwise the
// interior-element counterexample fails the oracle with its equal-join
// witness pair.
CheckRecord verify_prop41(const LatticePtr& lattice, const VerifyOptions& opts = {});

// The triple counterexample is a state transition with identity property
// transition, lies strictly above its hull, and every dominated join endomap
// kills the triple's first element. Throws TripleHypothesisViolated when the
// lattice has no qualifying triple.
CheckRecord verify_prop42(const LatticePtr& lattice, const VerifyOptions& opts = {});

// Strictness of |Q⁻| < |Qst| < |Q⁺| on (L, L) under the full join-map
// category; reported as not-applicable (with measured counts and their
// relation) when the lattice has no qualifying triple.
CheckRecord verify_theorem51(const LatticePtr& lattice, const VerifyOptions& opts = {});

// Law batteries, exhaustive on hom-sets up to opts.exhaustive_limit and
// seeded-sampled beyond: two-sided distributivity of composition over joins
// ("QuantaloidLaws"), functoriality of the direct image and of the property
// transition ("FunctorLaws"), and the direct-image/property-transition
// round trip including pointwise joins ("Prop3.2").
std::vector<CheckRecord> verify_laws(const LatticePtr& lattice,
                                     const VerifyOptions& opts = {});

/// Runs every applicable check on each lattice. Checks whose hypotheses fail
/// or whose sweeps exceed the guard are recorded as not-applicable. Records
/// are sorted by (check, lattices).
VerificationReport run_paper_suite(std::span<const LatticePtr> lattices,
                                   const VerifyOptions& opts = {});

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& json_text);

}  // namespace latq
