#include "latq/subcategory.hpp"

#include <algorithm>

namespace latq {

const char* subcategory_kind_name(SubcategoryKind kind) {
  switch (kind) {
    case SubcategoryKind::All: return "all";
    case SubcategoryKind::FixedTop: return "fixedtop";
    case SubcategoryKind::Atomistic: return "atomistic";
    case SubcategoryKind::Generated: return "generated";
  }
  return "?";
}

namespace {

std::vector<int> lattice_atoms(const FiniteLattice& L) {
  std::vector<int> atoms;
  for (int x = 0; x < L.size(); ++x) {
    if (x == L.bottom()) continue;
    bool atom = true;
    for (int y = 0; y < L.size(); ++y)
      if (y != L.bottom() && y != x && L.lt(y, x)) { atom = false; break; }
    if (atom) atoms.push_back(x);
  }
  return atoms;
}

bool is_atomistic(const FiniteLattice& L) {
  auto atoms = lattice_atoms(L);
  for (int x = 0; x < L.size(); ++x) {
    if (x == L.bottom()) continue;
    int acc = L.bottom();
    for (int a : atoms)
      if (L.leq(a, x)) acc = L.join(acc, a);
    if (acc != x) return false;
  }
  return true;
}

// Greatest element of L minus its top, when it exists.
std::optional<int> unique_coatom(const FiniteLattice& L) {
  for (int z = 0; z < L.size(); ++z) {
    if (z == L.top()) continue;
    bool dominates = true;
    for (int a = 0; a < L.size(); ++a)
      if (a != L.top() && !L.leq(a, z)) { dominates = false; break; }
    if (dominates) return z;
  }
  return std::nullopt;
}

bool table_has_nonzero_value(const FiniteLattice& tgt, std::span<const int> table) {
  return std::ranges::any_of(table, [&](int v) { return v != tgt.bottom(); });
}

// Sorted insert by table; returns true when the map is new.
bool insert_map(std::vector<JoinMap>& homs, const JoinMap& f) {
  auto it = std::lower_bound(homs.begin(), homs.end(), f, table_less);
  if (it != homs.end() && *it == f) return false;
  homs.insert(it, f);
  return true;
}

}  // namespace

SubcategorySpec::SubcategorySpec(SubcategoryKind kind, MorphismClass base,
                                 std::vector<LatticePtr> objects)
    : kind_(kind), base_(base), objects_(std::move(objects)) {
  if (objects_.empty()) raise(Errc::InvalidArgument, "a subcategory needs objects");
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (!objects_[i]) raise(Errc::InvalidArgument, "null object");
    for (std::size_t j = i + 1; j < objects_.size(); ++j)
      if (objects_[i] == objects_[j])
        raise(Errc::InvalidArgument, "duplicate object '" + objects_[i]->name() + "'");
  }
  if (base_ == MorphismClass::Partial || base_ == MorphismClass::Power)
    raise(Errc::InvalidArgument, "subcategory base must be join or monotone");
  if (base_ == MorphismClass::MonotoneZero && kind_ != SubcategoryKind::All)
    raise(Errc::InvalidArgument, "a monotone base requires kind 'all'");
}

SubcategorySpec SubcategorySpec::all(std::vector<LatticePtr> objects, MorphismClass base) {
  return SubcategorySpec(SubcategoryKind::All, base, std::move(objects));
}

SubcategorySpec SubcategorySpec::fixed_top(std::vector<LatticePtr> objects) {
  SubcategorySpec spec(SubcategoryKind::FixedTop, MorphismClass::Join, std::move(objects));
  for (const LatticePtr& L : spec.objects_)
    if (!unique_coatom(*L))
      raise(Errc::ObjectNotInSubcategory,
            "'" + L->name() + "' has no coatom dominating all non-top elements");
  return spec;
}

SubcategorySpec SubcategorySpec::atomistic(std::vector<LatticePtr> objects) {
  SubcategorySpec spec(SubcategoryKind::Atomistic, MorphismClass::Join, std::move(objects));
  for (const LatticePtr& L : spec.objects_)
    if (!is_atomistic(*L))
      raise(Errc::ObjectNotInSubcategory, "'" + L->name() + "' is not atomistic");
  return spec;
}

SubcategorySpec SubcategorySpec::generated(std::vector<LatticePtr> objects,
                                           std::vector<JoinMap> generators) {
  SubcategorySpec spec(SubcategoryKind::Generated, MorphismClass::Join, std::move(objects));
  const int count = static_cast<int>(spec.objects_.size());
  for (int s = 0; s < count; ++s)
    for (int t = 0; t < count; ++t) spec.homs_[{s, t}] = {};
  for (const LatticePtr& L : spec.objects_) {
    int i = spec.object_index(L);
    spec.homs_[{i, i}].push_back(JoinMap::identity(L));
  }
  for (const JoinMap& g : generators) {
    int s = spec.object_index(g.source());
    int t = spec.object_index(g.target());
    if (s < 0 || t < 0)
      raise(Errc::ObjectNotInSubcategory, "generator endpoints must be spec objects");
    insert_map(spec.homs_[{s, t}], g);
  }
  spec.close_generated();
  spec.validate_nondegenerate();
  return spec;
}

int SubcategorySpec::object_index(const LatticePtr& lattice) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == lattice) return static_cast<int>(i);
  return -1;
}

bool SubcategorySpec::has_object(const LatticePtr& lattice) const {
  return object_index(lattice) >= 0;
}

void SubcategorySpec::require_object(const LatticePtr& lattice) const {
  if (!has_object(lattice))
    raise(Errc::ObjectNotInSubcategory,
          "'" + lattice->name() + "' is not an object of this subcategory");
}

void SubcategorySpec::close_generated() {
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < objects_.size(); ++a)
      for (std::size_t b = 0; b < objects_.size(); ++b)
        for (std::size_t c = 0; c < objects_.size(); ++c) {
          auto fs = homs_.find({static_cast<int>(a), static_cast<int>(b)});
          auto gs = homs_.find({static_cast<int>(b), static_cast<int>(c)});
          if (fs == homs_.end() || gs == homs_.end()) continue;
          // Snapshot sizes; composites discovered now are revisited in the
          // next sweep.
          std::vector<JoinMap> fresh;
          for (const JoinMap& f : fs->second)
            for (const JoinMap& g : gs->second) fresh.push_back(compose(g, f));
          auto& out = homs_[{static_cast<int>(a), static_cast<int>(c)}];
          for (const JoinMap& h : fresh) grew = insert_map(out, h) || grew;
        }
  }
}

void SubcategorySpec::validate_nondegenerate() const {
  for (std::size_t s = 0; s < objects_.size(); ++s)
    for (std::size_t t = 0; t < objects_.size(); ++t) {
      auto it = homs_.find({static_cast<int>(s), static_cast<int>(t)});
      bool ok = false;
      if (it != homs_.end())
        for (const JoinMap& f : it->second)
          if (table_has_nonzero_value(*f.target(), f.table())) { ok = true; break; }
      if (!ok)
        raise(Errc::DegenerateHomSet, "hom-set " + objects_[s]->name() + " -> " +
                                          objects_[t]->name() +
                                          " has no morphism with nonzero image");
    }
}

bool SubcategorySpec::contains_table(const LatticePtr& source, const LatticePtr& target,
                                     std::span<const int> table) const {
  require_object(source);
  require_object(target);
  if (static_cast<int>(table.size()) != source->size()) return false;
  for (int v : table)
    if (v < 0 || v >= target->size()) return false;
  if (table[static_cast<std::size_t>(source->bottom())] != target->bottom()) return false;
  if (base_ == MorphismClass::MonotoneZero) {
    if (find_monotone_violation(*source, *target, table)) return false;
  } else {
    if (find_join_violation(*source, *target, table)) return false;
  }
  switch (kind_) {
    case SubcategoryKind::All:
      return true;
    case SubcategoryKind::FixedTop:
      return table[static_cast<std::size_t>(source->top())] == target->top() ||
             !table_has_nonzero_value(*target, table);
    case SubcategoryKind::Atomistic: {
      auto src_atoms = lattice_atoms(*source);
      auto tgt_atoms = lattice_atoms(*target);
      for (int a : src_atoms) {
        int v = table[static_cast<std::size_t>(a)];
        if (v != target->bottom() && !std::ranges::count(tgt_atoms, v)) return false;
      }
      return true;
    }
    case SubcategoryKind::Generated: {
      auto it = homs_.find({object_index(source), object_index(target)});
      if (it == homs_.end()) return false;
      for (const JoinMap& f : it->second)
        if (std::ranges::equal(f.table(), table)) return true;
      return false;
    }
  }
  return false;
}

bool SubcategorySpec::contains(const JoinMap& f) const {
  return contains_table(f.source(), f.target(), f.table());
}

bool SubcategorySpec::contains(const MonotoneZeroMap& f) const {
  return contains_table(f.source(), f.target(), f.table());
}

std::vector<JoinMap> SubcategorySpec::hom_set(const LatticePtr& source,
                                              const LatticePtr& target,
                                              std::uint64_t guard) const {
  require_object(source);
  require_object(target);
  if (kind_ == SubcategoryKind::Generated) {
    auto it = homs_.find({object_index(source), object_index(target)});
    return it == homs_.end() ? std::vector<JoinMap>{} : it->second;
  }
  if (base_ != MorphismClass::Join)
    raise(Errc::InvalidArgument, "hom_set requires a join base");
  std::vector<JoinMap> out;
  JoinMapEnumerator(source, target, guard).for_each([&](const JoinMap& f) {
    if (contains_table(source, target, f.table())) out.push_back(f);
  });
  return out;  // enumeration order is lexicographic in the table
}

std::vector<PowerMap> SubcategorySpec::member_images(const LatticePtr& source,
                                                     const LatticePtr& target,
                                                     std::uint64_t guard) const {
  require_object(source);
  require_object(target);
  std::vector<PowerMap> images;
  if (base_ == MorphismClass::MonotoneZero) {
    MonotoneZeroMapEnumerator(source, target, guard).for_each([&](const MonotoneZeroMap& f) {
      images.push_back(power_functor(underlying_partial(f)));
    });
  } else {
    for (const JoinMap& f : hom_set(source, target, guard))
      images.push_back(power_image(f));
  }
  return images;
}

namespace {

std::vector<std::vector<int>> member_tables(const SubcategorySpec& spec,
                                            const LatticePtr& source,
                                            const LatticePtr& target,
                                            std::uint64_t guard) {
  std::vector<std::vector<int>> tables;
  if (spec.base_class() == MorphismClass::MonotoneZero) {
    MonotoneZeroMapEnumerator(source, target, guard).for_each([&](const MonotoneZeroMap& f) {
      tables.emplace_back(f.table().begin(), f.table().end());
    });
  } else {
    for (const JoinMap& f : spec.hom_set(source, target, guard))
      tables.emplace_back(f.table().begin(), f.table().end());
  }
  std::ranges::sort(tables);
  return tables;
}

}  // namespace

bool SubcategorySpec::join_closed(std::uint64_t guard) const {
  for (const LatticePtr& src : objects_)
    for (const LatticePtr& tgt : objects_) {
      auto tables = member_tables(*this, src, tgt, guard);
      std::vector<int> bottom_table(static_cast<std::size_t>(src->size()), tgt->bottom());
      if (!std::ranges::binary_search(tables, bottom_table)) return false;
      for (std::size_t i = 0; i < tables.size(); ++i)
        for (std::size_t j = i; j < tables.size(); ++j) {
          std::vector<int> joined(tables[i].size());
          for (std::size_t e = 0; e < joined.size(); ++e)
            joined[e] = tgt->join(tables[i][e], tables[j][e]);
          if (!std::ranges::binary_search(tables, joined)) return false;
        }
    }
  return true;
}

bool operator==(const SubcategorySpec& a, const SubcategorySpec& b) {
  if (a.kind_ != b.kind_ || a.base_ != b.base_ || a.objects_ != b.objects_) return false;
  if (a.kind_ != SubcategoryKind::Generated) return true;
  return a.homs_ == b.homs_;
}

SubcategorySpec materialize(const SubcategorySpec& spec, std::uint64_t guard) {
  if (spec.kind() == SubcategoryKind::Generated) return spec;
  if (spec.base_class() != MorphismClass::Join)
    raise(Errc::InvalidArgument, "only join-based specs can be materialized");
  std::vector<JoinMap> members;
  for (const LatticePtr& src : spec.objects())
    for (const LatticePtr& tgt : spec.objects())
      for (const JoinMap& f : spec.hom_set(src, tgt, guard)) members.push_back(f);
  return SubcategorySpec::generated(
      std::vector<LatticePtr>(spec.objects().begin(), spec.objects().end()),
      std::move(members));
}

SubcategorySpec pre_enrich(const SubcategorySpec& spec) {
  if (spec.kind() != SubcategoryKind::Generated)
    raise(Errc::InvalidArgument, "pre_enrich expects a generated spec");
  SubcategorySpec out = spec;
  for (auto& [key, homs] : out.homs_) {
    const LatticePtr& src = out.objects_[static_cast<std::size_t>(key.first)];
    const LatticePtr& tgt = out.objects_[static_cast<std::size_t>(key.second)];
    insert_map(homs, JoinMap::constant_bottom(src, tgt));  // the empty join
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<JoinMap> fresh;
      for (std::size_t i = 0; i < homs.size(); ++i)
        for (std::size_t j = i + 1; j < homs.size(); ++j) {
          const JoinMap pair[] = {homs[i], homs[j]};
          fresh.push_back(pointwise_join(std::span<const JoinMap>(pair)));
        }
      for (const JoinMap& h : fresh) grew = insert_map(homs, h) || grew;
    }
  }
  // Distributivity keeps the join closure composition-closed; check rather
  // than assume.
  auto sizes_before = out.homs_;
  out.close_generated();
  if (out.homs_ != sizes_before)
    raise(Errc::InvalidArgument, "join closure was not composition-closed");
  out.validate_nondegenerate();
  return out;
}

}  // namespace latq
