#pragma once

#include <map>
#include <span>
#include <vector>

#include "latq/morphisms.hpp"

namespace latq {

enum class SubcategoryKind { All, FixedTop, Atomistic, Generated };

const char* subcategory_kind_name(SubcategoryKind kind);

/// A decidable subcategory of table maps over a fixed finite object set.
///
/// Kinds:
///   All        every map of the base class (Join or MonotoneZero);
///   FixedTop   join maps with top -> top or image {bottom}; every object
///              must have a unique coatom dominating all non-top elements;
///   Atomistic  join maps sending atoms to atoms or bottom, over atomistic
///              objects;
///   Generated  an explicit family of join maps, closed at construction
///              under composition and extended with identities.
///
/// Every hom-set must admit a morphism with nonzero image; for Generated
/// specs this is validated and violations raise DegenerateHomSet.
class SubcategorySpec {
public:
  static SubcategorySpec all(std::vector<LatticePtr> objects,
                             MorphismClass base = MorphismClass::Join);
  static SubcategorySpec fixed_top(std::vector<LatticePtr> objects);
  static SubcategorySpec atomistic(std::vector<LatticePtr> objects);
  static SubcategorySpec generated(std::vector<LatticePtr> objects,
                                   std::vector<JoinMap> generators);

  SubcategoryKind kind() const { return kind_; }
  MorphismClass base_class() const { return base_; }
  std::span<const LatticePtr> objects() const { return objects_; }
  bool has_object(const LatticePtr& lattice) const;
  void require_object(const LatticePtr& lattice) const;  // ObjectNotInSubcategory

  /// Membership of a join map (the base predicate plus the kind predicate).
  bool contains(const JoinMap& f) const;
  bool contains(const MonotoneZeroMap& f) const;

  /// Membership of a raw table between two objects.
  bool contains_table(const LatticePtr& source, const LatticePtr& target,
                      std::span<const int> table) const;

  /// The hom-set A(source, target) as join maps sorted by table.
  /// Generated specs return the stored family; other kinds enumerate
  /// (requires a Join base).
  std::vector<JoinMap> hom_set(const LatticePtr& source, const LatticePtr& target,
                               std::uint64_t guard = kDefaultEnumerationGuard) const;

  /// Direct images of all members of A(source, target), for any base class.
  std::vector<PowerMap> member_images(const LatticePtr& source, const LatticePtr& target,
                                      std::uint64_t guard = kDefaultEnumerationGuard) const;

  /// True when every hom-set is closed under pointwise joins, including the
  /// empty join (the constant-bottom map).
  bool join_closed(std::uint64_t guard = kDefaultEnumerationGuard) const;

  /// Equality compares kind, base class, objects, and for Generated specs
  /// the stored hom-sets.
  friend bool operator==(const SubcategorySpec& a, const SubcategorySpec& b);

private:
  SubcategorySpec(SubcategoryKind kind, MorphismClass base,
                  std::vector<LatticePtr> objects);
  int object_index(const LatticePtr& lattice) const;  // -1 if absent
  void close_generated();                              // composition closure
  void validate_nondegenerate() const;

  SubcategoryKind kind_;
  MorphismClass base_;
  std::vector<LatticePtr> objects_;
  // Generated only: hom-sets keyed by (source index, target index),
  // each sorted by table and duplicate-free.
  std::map<std::pair<int, int>, std::vector<JoinMap>> homs_;

  friend SubcategorySpec pre_enrich(const SubcategorySpec& spec);
  friend SubcategorySpec materialize(const SubcategorySpec& spec, std::uint64_t guard);
};

/// Freeze any spec into an equivalent Generated spec over the same objects.
SubcategorySpec materialize(const SubcategorySpec& spec,
                            std::uint64_t guard = kDefaultEnumerationGuard);

/// Close every hom-set of a Generated spec under pointwise joins. The empty
/// join (constant-bottom map) is adjoined, so every hom-lattice has a bottom.
/// The result is re-checked to be closed under composition. Idempotent, and
/// the identity on join-closed specs.
SubcategorySpec pre_enrich(const SubcategorySpec& spec);

}  // namespace latq
