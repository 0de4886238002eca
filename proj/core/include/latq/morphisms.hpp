#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "latq/lattice.hpp"

namespace latq {

enum class MorphismClass { Join, MonotoneZero, Partial, Power };

const char* morphism_class_name(MorphismClass cls);
std::optional<MorphismClass> morphism_class_from_name(std::string_view name);

/// Default cap on the raw size of an enumeration index space.
inline constexpr std::uint64_t kDefaultEnumerationGuard = std::uint64_t{1} << 24;

/// First pair (x, y) violating a validation law, by source element index.
struct PairViolation {
  int x = -1;
  int y = -1;
};

/// nullopt when `table` preserves bottom and binary joins (for finite
/// lattices this is equivalent to preserving all joins).
std::optional<PairViolation> find_join_violation(const FiniteLattice& src,
                                                 const FiniteLattice& tgt,
                                                 std::span<const int> table);

/// nullopt when `table` preserves bottom and is monotone.
std::optional<PairViolation> find_monotone_violation(const FiniteLattice& src,
                                                     const FiniteLattice& tgt,
                                                     std::span<const int> table);

/// Join-preserving map between lattices, stored as a total element table.
class JoinMap {
public:
  JoinMap(LatticePtr source, LatticePtr target, std::vector<int> table);
  static JoinMap identity(const LatticePtr& lattice);
  static JoinMap constant_bottom(LatticePtr source, LatticePtr target);

  const LatticePtr& source() const { return source_; }
  const LatticePtr& target() const { return target_; }
  int operator()(int element) const;
  std::span<const int> table() const { return table_; }
  bool is_identity() const;

  friend bool operator==(const JoinMap&, const JoinMap&) = default;

private:
  LatticePtr source_;
  LatticePtr target_;
  std::vector<int> table_;
};

/// Monotone map that sends bottom to bottom.
class MonotoneZeroMap {
public:
  MonotoneZeroMap(LatticePtr source, LatticePtr target, std::vector<int> table);
  static MonotoneZeroMap identity(const LatticePtr& lattice);

  const LatticePtr& source() const { return source_; }
  const LatticePtr& target() const { return target_; }
  int operator()(int element) const;
  std::span<const int> table() const { return table_; }

  friend bool operator==(const MonotoneZeroMap&, const MonotoneZeroMap&) = default;

private:
  LatticePtr source_;
  LatticePtr target_;
  std::vector<int> table_;
};

/// Partially defined function between the carriers (nonzero elements) of two
/// lattices. The kernel is the set of carrier elements it is undefined on.
class PartialFunction {
public:
  static constexpr int kUndefined = -1;

  /// `table` is indexed by source carrier position; entries are target
  /// elements (nonzero) or kUndefined.
  PartialFunction(LatticePtr source, LatticePtr target, std::vector<int> table);
  static PartialFunction identity(const LatticePtr& lattice);

  const LatticePtr& source() const { return source_; }
  const LatticePtr& target() const { return target_; }
  Subset kernel() const;
  bool defined_at(int element) const;
  int operator()(int element) const;  // requires defined_at(element)
  std::span<const int> table() const { return table_; }

  friend bool operator==(const PartialFunction&, const PartialFunction&) = default;

private:
  LatticePtr source_;
  LatticePtr target_;
  std::vector<int> table_;
};

/// Union-preserving map 2^{L0} -> 2^{M0}, stored by its singleton images.
/// Arbitrary images are unions of singleton images, so union preservation
/// holds by construction and the empty set maps to the empty set.
class PowerMap {
public:
  /// `singleton_images` is indexed by source carrier position; each entry is
  /// a subset of the target carrier.
  PowerMap(LatticePtr source, LatticePtr target, std::vector<Subset> singleton_images);
  static PowerMap identity(const LatticePtr& lattice);
  static PowerMap constant_empty(LatticePtr source, LatticePtr target);

  const LatticePtr& source() const { return source_; }
  const LatticePtr& target() const { return target_; }
  Subset singleton_image(int element) const;   // by source element index
  Subset singleton_image_at(int pos) const;    // by source carrier position
  std::span<const Subset> singleton_images() const { return images_; }

  /// Image of an arbitrary carrier subset.
  Subset apply(Subset subset) const;

  friend bool operator==(const PowerMap&, const PowerMap&) = default;

private:
  LatticePtr source_;
  LatticePtr target_;
  std::vector<Subset> images_;
};

using Morphism = std::variant<JoinMap, MonotoneZeroMap, PartialFunction, PowerMap>;

MorphismClass class_of(const Morphism& morphism);
const LatticePtr& source_of(const Morphism& morphism);
const LatticePtr& target_of(const Morphism& morphism);

/// Direct-image map of a partial function: t maps to {f(t)} off the kernel
/// and to the empty set on it.
PowerMap power_functor(const PartialFunction& f);

/// Forgetful direction: restrict a table map to the carriers; the kernel is
/// the preimage of bottom.
PartialFunction underlying_partial(const JoinMap& f);
PartialFunction underlying_partial(const MonotoneZeroMap& f);
PowerMap power_image(const JoinMap& f);  // power_functor(underlying_partial(f))

// Composition `after ∘ before`; throws CompositionMismatch.
JoinMap compose(const JoinMap& after, const JoinMap& before);
MonotoneZeroMap compose(const MonotoneZeroMap& after, const MonotoneZeroMap& before);
PartialFunction compose(const PartialFunction& after, const PartialFunction& before);
PowerMap compose(const PowerMap& after, const PowerMap& before);
Morphism compose_morphisms(const Morphism& after, const Morphism& before);

// Pointwise order on parallel maps; throws ParallelismViolation.
bool map_leq(const JoinMap& f, const JoinMap& g);
bool map_leq(const MonotoneZeroMap& f, const MonotoneZeroMap& g);
bool map_leq(const PowerMap& f, const PowerMap& g);
bool morphism_leq(const Morphism& f, const Morphism& g);

// Pointwise join of a nonempty family of parallel maps.
JoinMap pointwise_join(std::span<const JoinMap> maps);
MonotoneZeroMap pointwise_join(std::span<const MonotoneZeroMap> maps);
PowerMap pointwise_join(std::span<const PowerMap> maps);
Morphism join_morphisms(std::span<const Morphism> maps);

/// Strict ordering by table entries, for deterministic hom-set sorting.
bool table_less(const JoinMap& f, const JoinMap& g);

/// Exhaustive, duplicate-free enumeration of a morphism class between two
/// lattices, in lexicographic table order (entry for the lowest-index source
/// element most significant; table entries ordered by target element index,
/// by kernel-first target position, or by image bitmask, per class).
///
/// The raw index space ranges over all candidate tables; `at` returns nullopt
/// for candidates that fail the class validation (Join, MonotoneZero); for
/// Partial and Power every candidate is valid. Restartable and partitionable
/// by index range.
template <class MapT>
class Enumerator {
public:
  Enumerator(LatticePtr source, LatticePtr target,
             std::uint64_t guard = kDefaultEnumerationGuard);

  std::uint64_t raw_size() const { return raw_size_; }
  std::optional<MapT> at(std::uint64_t raw_index) const;
  std::uint64_t count() const;
  std::vector<MapT> all() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t i = 0; i < raw_size_; ++i) {
      if (auto m = at(i)) fn(*m);
    }
  }

private:
  LatticePtr source_;
  LatticePtr target_;
  std::uint64_t base_ = 1;
  std::uint64_t raw_size_ = 1;
};

using JoinMapEnumerator = Enumerator<JoinMap>;
using MonotoneZeroMapEnumerator = Enumerator<MonotoneZeroMap>;
using PartialFunctionEnumerator = Enumerator<PartialFunction>;
using PowerMapEnumerator = Enumerator<PowerMap>;

/// Number of valid morphisms of a class between two lattices.
std::uint64_t count_morphisms(const LatticePtr& source, const LatticePtr& target,
                              MorphismClass cls,
                              std::uint64_t guard = kDefaultEnumerationGuard);

}  // namespace latq
