#pragma once

#include <functional>

#include "latq/subcategory.hpp"

namespace latq {

/// Carrier-size bound for the subset-pair sweep of state_transition_oracle.
inline constexpr int kDefaultOracleCarrierBound = 12;

/// The table x -> ∨ g({x}) (bottom -> bottom) induced by a power map.
/// Always defined; whether it is join-preserving is a separate question.
std::vector<int> property_transition_table(const PowerMap& g);

/// The property transition of g with respect to `spec`, when g is a state
/// transition: the induced table must be a valid join map that `spec`
/// contains. Returns nullopt otherwise. Throws ObjectNotInSubcategory when
/// the endpoints are not spec objects.
std::optional<JoinMap> state_transition(const PowerMap& g, const SubcategorySpec& spec);

struct OracleOutcome {
  bool is_state_transition = false;
  /// When negative: an equal-join subset pair whose images have different
  /// joins, first such pair in ascending bitmask order.
  Subset witness_first = 0;
  Subset witness_second = 0;
};

/// Independent state-transition test against the full join-map category:
/// sweeps all carrier subsets grouped by join and requires equal-join
/// subsets to have equal-join images.
OracleOutcome state_transition_oracle(const PowerMap& g,
                                      int carrier_bound = kDefaultOracleCarrierBound);

/// Largest pointwise union of direct images of spec members that lies below
/// g. g belongs to the functorial enrichment iff the hull equals g.
PowerMap q_minus_hull(const PowerMap& g, const SubcategorySpec& spec,
                      std::uint64_t guard = kDefaultEnumerationGuard);

bool in_q_minus(const PowerMap& g, const SubcategorySpec& spec,
                std::uint64_t guard = kDefaultEnumerationGuard);

/// Hom-set tiers between two objects:
///   PA      direct images of spec members,
///   QMinus  pointwise-union closure of PA (tested via the hull),
///   QSt     state transitions with respect to the spec,
///   QPlus   all union-preserving maps.
enum class Tier { QMinus, QSt, QPlus, PA };

const char* tier_name(Tier tier);
std::optional<Tier> tier_from_name(std::string_view name);

std::uint64_t hom_set_count(const LatticePtr& source, const LatticePtr& target,
                            Tier tier, const SubcategorySpec& spec,
                            std::uint64_t guard = kDefaultEnumerationGuard);

/// Visit every member of a tier's hom-set in enumeration order.
void for_each_tier_member(const LatticePtr& source, const LatticePtr& target,
                          Tier tier, const SubcategorySpec& spec,
                          const std::function<void(const PowerMap&)>& fn,
                          std::uint64_t guard = kDefaultEnumerationGuard);

/// Placement of one power map in the enrichment hierarchy.
struct TierReport {
  bool in_q_plus = true;  // structural for a PowerMap
  bool is_state_transition = false;
  std::optional<JoinMap> property_transition;
  bool in_q_minus = false;
  PowerMap hull;

  explicit TierReport(PowerMap hull_map) : hull(std::move(hull_map)) {}
};

TierReport classify_power_map(const PowerMap& g, const SubcategorySpec& spec,
                              std::uint64_t guard = kDefaultEnumerationGuard);

/// The union-preserving endomap T -> {a} if a ∈ T, else ∅, for an element
/// strictly between bottom and top. Union-preserving but never a union of
/// direct images of isotone maps. Throws NoInteriorElement.
PowerMap counterexample_q_plus(const LatticePtr& lattice, int interior_element);

/// The union-preserving endomap fixing every singleton except b∨c, which is
/// sent to {a, b, c}; requires a < b∨c, a ≰ b, a ≰ c. A state transition
/// whose property transition is the identity, yet not in the functorial
/// enrichment. Throws TripleHypothesisViolated.
PowerMap counterexample_state(const LatticePtr& lattice, std::array<int, 3> triple);

}  // namespace latq
