#include "latq/morphisms.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace latq {

const char* morphism_class_name(MorphismClass cls) {
  switch (cls) {
    case MorphismClass::Join: return "join";
    case MorphismClass::MonotoneZero: return "monotone";
    case MorphismClass::Partial: return "partial";
    case MorphismClass::Power: return "power";
  }
  return "?";
}

std::optional<MorphismClass> morphism_class_from_name(std::string_view name) {
  if (name == "join") return MorphismClass::Join;
  if (name == "monotone") return MorphismClass::MonotoneZero;
  if (name == "partial") return MorphismClass::Partial;
  if (name == "power") return MorphismClass::Power;
  return std::nullopt;
}

namespace {

void check_table_shape(const FiniteLattice& src, const FiniteLattice& tgt,
                       std::span<const int> table) {
  if (static_cast<int>(table.size()) != src.size())
    raise(Errc::InvalidArgument, "table must assign every element of " + src.name());
  for (int v : table)
    if (v < 0 || v >= tgt.size())
      raise(Errc::ElementNotInLattice,
            "table value " + std::to_string(v) + " is not an element of " + tgt.name());
}

void check_same_lattices(const LatticePtr& a, const LatticePtr& b, Errc code,
                         const char* what) {
  if (a != b) raise(code, what);
}

}  // namespace

std::optional<PairViolation> find_join_violation(const FiniteLattice& src,
                                                 const FiniteLattice& tgt,
                                                 std::span<const int> table) {
  for (int x = 0; x < src.size(); ++x)
    for (int y = x; y < src.size(); ++y)
      if (table[static_cast<std::size_t>(src.join(x, y))] !=
          tgt.join(table[static_cast<std::size_t>(x)], table[static_cast<std::size_t>(y)]))
        return PairViolation{x, y};
  return std::nullopt;
}

std::optional<PairViolation> find_monotone_violation(const FiniteLattice& src,
                                                     const FiniteLattice& tgt,
                                                     std::span<const int> table) {
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < src.size(); ++y)
      if (src.leq(x, y) &&
          !tgt.leq(table[static_cast<std::size_t>(x)], table[static_cast<std::size_t>(y)]))
        return PairViolation{x, y};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// JoinMap

JoinMap::JoinMap(LatticePtr source, LatticePtr target, std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  check_table_shape(*source_, *target_, table_);
  if (table_[static_cast<std::size_t>(source_->bottom())] != target_->bottom())
    raise(Errc::BottomNotPreserved,
          "bottom of " + source_->name() + " must map to bottom of " + target_->name());
  if (auto v = find_join_violation(*source_, *target_, table_))
    raise(Errc::NotJoinPreserving,
          "join of (" + source_->label(v->x) + ", " + source_->label(v->y) +
              ") is not preserved");
  // Monotonicity is implied by join preservation; cross-check it anyway.
  assert(!find_monotone_violation(*source_, *target_, table_));
}

JoinMap JoinMap::identity(const LatticePtr& lattice) {
  std::vector<int> table(static_cast<std::size_t>(lattice->size()));
  for (int i = 0; i < lattice->size(); ++i) table[static_cast<std::size_t>(i)] = i;
  return JoinMap(lattice, lattice, std::move(table));
}

JoinMap JoinMap::constant_bottom(LatticePtr source, LatticePtr target) {
  std::vector<int> table(static_cast<std::size_t>(source->size()), target->bottom());
  return JoinMap(std::move(source), std::move(target), std::move(table));
}

int JoinMap::operator()(int element) const {
  if (element < 0 || element >= source_->size())
    raise(Errc::ElementNotInLattice, "argument not in " + source_->name());
  return table_[static_cast<std::size_t>(element)];
}

bool JoinMap::is_identity() const {
  if (source_ != target_) return false;
  for (int i = 0; i < source_->size(); ++i)
    if (table_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

// ---------------------------------------------------------------------------
// MonotoneZeroMap

MonotoneZeroMap::MonotoneZeroMap(LatticePtr source, LatticePtr target,
                                 std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  check_table_shape(*source_, *target_, table_);
  if (table_[static_cast<std::size_t>(source_->bottom())] != target_->bottom())
    raise(Errc::BottomNotPreserved,
          "bottom of " + source_->name() + " must map to bottom of " + target_->name());
  if (auto v = find_monotone_violation(*source_, *target_, table_))
    raise(Errc::NotMonotone, "order of (" + source_->label(v->x) + ", " +
                                 source_->label(v->y) + ") is not preserved");
}

MonotoneZeroMap MonotoneZeroMap::identity(const LatticePtr& lattice) {
  std::vector<int> table(static_cast<std::size_t>(lattice->size()));
  for (int i = 0; i < lattice->size(); ++i) table[static_cast<std::size_t>(i)] = i;
  return MonotoneZeroMap(lattice, lattice, std::move(table));
}

int MonotoneZeroMap::operator()(int element) const {
  if (element < 0 || element >= source_->size())
    raise(Errc::ElementNotInLattice, "argument not in " + source_->name());
  return table_[static_cast<std::size_t>(element)];
}

// ---------------------------------------------------------------------------
// PartialFunction

PartialFunction::PartialFunction(LatticePtr source, LatticePtr target,
                                 std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != source_->carrier_size())
    raise(Errc::InvalidArgument,
          "table must cover the carrier of " + source_->name() + " exactly");
  for (int v : table_) {
    if (v == kUndefined) continue;
    if (v < 0 || v >= target_->size() || !target_->in_carrier(v))
      raise(Errc::ElementNotInCarrier,
            "value " + std::to_string(v) + " is not in the carrier of " + target_->name());
  }
}

PartialFunction PartialFunction::identity(const LatticePtr& lattice) {
  std::vector<int> table(static_cast<std::size_t>(lattice->carrier_size()));
  for (int p = 0; p < lattice->carrier_size(); ++p)
    table[static_cast<std::size_t>(p)] = lattice->carrier_element(p);
  return PartialFunction(lattice, lattice, std::move(table));
}

Subset PartialFunction::kernel() const {
  Subset k = 0;
  for (std::size_t p = 0; p < table_.size(); ++p)
    if (table_[p] == kUndefined) k |= Subset{1} << p;
  return k;
}

bool PartialFunction::defined_at(int element) const {
  return table_[static_cast<std::size_t>(source_->carrier_pos(element))] != kUndefined;
}

int PartialFunction::operator()(int element) const {
  int v = table_[static_cast<std::size_t>(source_->carrier_pos(element))];
  if (v == kUndefined)
    raise(Errc::ElementNotInCarrier,
          "'" + source_->label(element) + "' is in the kernel");
  return v;
}

// ---------------------------------------------------------------------------
// PowerMap

PowerMap::PowerMap(LatticePtr source, LatticePtr target, std::vector<Subset> singleton_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(singleton_images)) {
  if (static_cast<int>(images_.size()) != source_->carrier_size())
    raise(Errc::InvalidArgument,
          "singleton images must cover the carrier of " + source_->name() + " exactly");
  const Subset full = target_->full_carrier();
  for (Subset s : images_)
    if ((s & ~full) != 0)
      raise(Errc::ElementNotInCarrier,
            "singleton image has bits outside the carrier of " + target_->name());
}

PowerMap PowerMap::identity(const LatticePtr& lattice) {
  std::vector<Subset> images(static_cast<std::size_t>(lattice->carrier_size()));
  for (int p = 0; p < lattice->carrier_size(); ++p)
    images[static_cast<std::size_t>(p)] = Subset{1} << p;
  return PowerMap(lattice, lattice, std::move(images));
}

PowerMap PowerMap::constant_empty(LatticePtr source, LatticePtr target) {
  std::vector<Subset> images(static_cast<std::size_t>(source->carrier_size()), 0);
  return PowerMap(std::move(source), std::move(target), std::move(images));
}

Subset PowerMap::singleton_image(int element) const {
  return images_[static_cast<std::size_t>(source_->carrier_pos(element))];
}

Subset PowerMap::singleton_image_at(int pos) const {
  if (pos < 0 || pos >= static_cast<int>(images_.size()))
    raise(Errc::ElementNotInCarrier, "carrier position out of range");
  return images_[static_cast<std::size_t>(pos)];
}

Subset PowerMap::apply(Subset subset) const {
  if ((subset & ~source_->full_carrier()) != 0)
    raise(Errc::ElementNotInCarrier,
          "subset has bits outside the carrier of " + source_->name());
  Subset out = 0;
  while (subset != 0) {
    out |= images_[static_cast<std::size_t>(std::countr_zero(subset))];
    subset &= subset - 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Variant helpers

MorphismClass class_of(const Morphism& morphism) {
  return std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, JoinMap>) return MorphismClass::Join;
        else if constexpr (std::is_same_v<T, MonotoneZeroMap>) return MorphismClass::MonotoneZero;
        else if constexpr (std::is_same_v<T, PartialFunction>) return MorphismClass::Partial;
        else return MorphismClass::Power;
      },
      morphism);
}

const LatticePtr& source_of(const Morphism& morphism) {
  return std::visit([](const auto& m) -> const LatticePtr& { return m.source(); }, morphism);
}

const LatticePtr& target_of(const Morphism& morphism) {
  return std::visit([](const auto& m) -> const LatticePtr& { return m.target(); }, morphism);
}

// ---------------------------------------------------------------------------
// Power functor and forgetful direction

PowerMap power_functor(const PartialFunction& f) {
  const auto& tgt = f.target();
  std::vector<Subset> images;
  images.reserve(f.table().size());
  for (int v : f.table())
    images.push_back(v == PartialFunction::kUndefined ? Subset{0} : tgt->singleton(v));
  return PowerMap(f.source(), f.target(), std::move(images));
}

namespace {

std::vector<int> restrict_to_carrier(const LatticePtr& src, const LatticePtr& tgt,
                                     std::span<const int> table) {
  std::vector<int> out(static_cast<std::size_t>(src->carrier_size()));
  for (int p = 0; p < src->carrier_size(); ++p) {
    int v = table[static_cast<std::size_t>(src->carrier_element(p))];
    out[static_cast<std::size_t>(p)] = (v == tgt->bottom()) ? PartialFunction::kUndefined : v;
  }
  return out;
}

}  // namespace

PartialFunction underlying_partial(const JoinMap& f) {
  return PartialFunction(f.source(), f.target(),
                         restrict_to_carrier(f.source(), f.target(), f.table()));
}

PartialFunction underlying_partial(const MonotoneZeroMap& f) {
  return PartialFunction(f.source(), f.target(),
                         restrict_to_carrier(f.source(), f.target(), f.table()));
}

PowerMap power_image(const JoinMap& f) { return power_functor(underlying_partial(f)); }

// ---------------------------------------------------------------------------
// Composition

namespace {

std::vector<int> compose_tables(std::span<const int> after, std::span<const int> before) {
  std::vector<int> out(before.size());
  for (std::size_t i = 0; i < before.size(); ++i)
    out[i] = after[static_cast<std::size_t>(before[i])];
  return out;
}

}  // namespace

JoinMap compose(const JoinMap& after, const JoinMap& before) {
  check_same_lattices(before.target(), after.source(), Errc::CompositionMismatch,
                      "join maps do not compose");
  return JoinMap(before.source(), after.target(),
                 compose_tables(after.table(), before.table()));
}

MonotoneZeroMap compose(const MonotoneZeroMap& after, const MonotoneZeroMap& before) {
  check_same_lattices(before.target(), after.source(), Errc::CompositionMismatch,
                      "monotone maps do not compose");
  return MonotoneZeroMap(before.source(), after.target(),
                         compose_tables(after.table(), before.table()));
}

PartialFunction compose(const PartialFunction& after, const PartialFunction& before) {
  check_same_lattices(before.target(), after.source(), Errc::CompositionMismatch,
                      "partial functions do not compose");
  const auto& mid = before.target();
  std::vector<int> out(before.table().size(), PartialFunction::kUndefined);
  for (std::size_t p = 0; p < before.table().size(); ++p) {
    int v = before.table()[p];
    if (v == PartialFunction::kUndefined) continue;
    out[p] = after.table()[static_cast<std::size_t>(mid->carrier_pos(v))];
  }
  return PartialFunction(before.source(), after.target(), std::move(out));
}

PowerMap compose(const PowerMap& after, const PowerMap& before) {
  check_same_lattices(before.target(), after.source(), Errc::CompositionMismatch,
                      "power maps do not compose");
  std::vector<Subset> images;
  images.reserve(before.singleton_images().size());
  for (Subset s : before.singleton_images()) images.push_back(after.apply(s));
  return PowerMap(before.source(), after.target(), std::move(images));
}

Morphism compose_morphisms(const Morphism& after, const Morphism& before) {
  if (class_of(after) != class_of(before))
    raise(Errc::MixedClasses, "cannot compose morphisms of different classes");
  return std::visit(
      [&](const auto& a) -> Morphism {
        using T = std::decay_t<decltype(a)>;
        return Morphism(compose(a, std::get<T>(before)));
      },
      after);
}

// ---------------------------------------------------------------------------
// Pointwise order and joins

namespace {

template <class MapT>
void check_parallel(const MapT& f, const MapT& g) {
  if (f.source() != g.source() || f.target() != g.target())
    raise(Errc::ParallelismViolation, "maps are not parallel");
}

}  // namespace

bool map_leq(const JoinMap& f, const JoinMap& g) {
  check_parallel(f, g);
  const auto& tgt = *f.target();
  for (std::size_t i = 0; i < f.table().size(); ++i)
    if (!tgt.leq(f.table()[i], g.table()[i])) return false;
  return true;
}

bool map_leq(const MonotoneZeroMap& f, const MonotoneZeroMap& g) {
  check_parallel(f, g);
  const auto& tgt = *f.target();
  for (std::size_t i = 0; i < f.table().size(); ++i)
    if (!tgt.leq(f.table()[i], g.table()[i])) return false;
  return true;
}

bool map_leq(const PowerMap& f, const PowerMap& g) {
  check_parallel(f, g);
  for (std::size_t p = 0; p < f.singleton_images().size(); ++p)
    if ((f.singleton_images()[p] & ~g.singleton_images()[p]) != 0) return false;
  return true;
}

bool morphism_leq(const Morphism& f, const Morphism& g) {
  if (class_of(f) != class_of(g))
    raise(Errc::MixedClasses, "cannot compare morphisms of different classes");
  if (class_of(f) == MorphismClass::Partial)
    raise(Errc::InvalidArgument, "partial functions carry no pointwise order");
  return std::visit(
      [&](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, PartialFunction>) return false;
        else return map_leq(a, std::get<T>(g));
      },
      f);
}

namespace {

template <class MapT>
std::vector<int> joined_table(std::span<const MapT> maps) {
  if (maps.empty()) raise(Errc::InvalidArgument, "pointwise join of an empty family");
  for (const MapT& m : maps) check_parallel(maps.front(), m);
  const auto& tgt = *maps.front().target();
  std::vector<int> table(maps.front().table().size(), tgt.bottom());
  for (const MapT& m : maps)
    for (std::size_t i = 0; i < table.size(); ++i)
      table[i] = tgt.join(table[i], m.table()[i]);
  return table;
}

}  // namespace

JoinMap pointwise_join(std::span<const JoinMap> maps) {
  auto table = joined_table(maps);
  return JoinMap(maps.front().source(), maps.front().target(), std::move(table));
}

MonotoneZeroMap pointwise_join(std::span<const MonotoneZeroMap> maps) {
  // Valid for monotone-zero maps over complete lattices; the constructor
  // re-validates rather than assuming it.
  auto table = joined_table(maps);
  return MonotoneZeroMap(maps.front().source(), maps.front().target(), std::move(table));
}

PowerMap pointwise_join(std::span<const PowerMap> maps) {
  if (maps.empty()) raise(Errc::InvalidArgument, "pointwise join of an empty family");
  for (const PowerMap& m : maps) check_parallel(maps.front(), m);
  std::vector<Subset> images(maps.front().singleton_images().size(), 0);
  for (const PowerMap& m : maps)
    for (std::size_t p = 0; p < images.size(); ++p)
      images[p] |= m.singleton_images()[p];
  return PowerMap(maps.front().source(), maps.front().target(), std::move(images));
}

Morphism join_morphisms(std::span<const Morphism> maps) {
  if (maps.empty()) raise(Errc::InvalidArgument, "pointwise join of an empty family");
  for (const Morphism& m : maps)
    if (class_of(m) != class_of(maps.front()))
      raise(Errc::MixedClasses, "cannot join morphisms of different classes");
  return std::visit(
      [&](const auto& first) -> Morphism {
        using T = std::decay_t<decltype(first)>;
        if constexpr (std::is_same_v<T, PartialFunction>) {
          raise(Errc::InvalidArgument, "partial functions carry no pointwise join");
        } else {
          std::vector<T> family;
          family.reserve(maps.size());
          for (const Morphism& m : maps) family.push_back(std::get<T>(m));
          return Morphism(pointwise_join(std::span<const T>(family)));
        }
      },
      maps.front());
}

bool table_less(const JoinMap& f, const JoinMap& g) {
  return std::ranges::lexicographical_compare(f.table(), g.table());
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

template <class MapT>
std::uint64_t enumeration_base(const FiniteLattice& tgt) {
  if constexpr (std::is_same_v<MapT, JoinMap> || std::is_same_v<MapT, MonotoneZeroMap>)
    return static_cast<std::uint64_t>(tgt.size());
  else if constexpr (std::is_same_v<MapT, PartialFunction>)
    return static_cast<std::uint64_t>(tgt.carrier_size()) + 1;
  else {
    if (tgt.carrier_size() >= 64)
      raise(Errc::SizeGuardExceeded, "power enumeration needs a carrier below 64");
    return Subset{1} << tgt.carrier_size();
  }
}

}  // namespace

template <class MapT>
Enumerator<MapT>::Enumerator(LatticePtr source, LatticePtr target, std::uint64_t guard)
    : source_(std::move(source)), target_(std::move(target)) {
  base_ = enumeration_base<MapT>(*target_);
  raw_size_ = 1;
  for (int p = 0; p < source_->carrier_size(); ++p) {
    if (raw_size_ > guard / base_)
      raise(Errc::SizeGuardExceeded,
            "enumeration of " + source_->name() + " -> " + target_->name() +
                " exceeds the guard of " + std::to_string(guard));
    raw_size_ *= base_;
  }
}

template <class MapT>
std::optional<MapT> Enumerator<MapT>::at(std::uint64_t raw_index) const {
  if (raw_index >= raw_size_)
    raise(Errc::InvalidArgument, "enumeration index out of range");
  const int k = source_->carrier_size();
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(k));
  for (int p = k - 1; p >= 0; --p) {
    digits[static_cast<std::size_t>(p)] = raw_index % base_;
    raw_index /= base_;
  }
  if constexpr (std::is_same_v<MapT, PowerMap>) {
    std::vector<Subset> images(digits.begin(), digits.end());
    return PowerMap(source_, target_, std::move(images));
  } else if constexpr (std::is_same_v<MapT, PartialFunction>) {
    std::vector<int> table(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) {
      auto d = digits[static_cast<std::size_t>(p)];
      table[static_cast<std::size_t>(p)] =
          d == 0 ? PartialFunction::kUndefined
                 : target_->carrier_element(static_cast<int>(d) - 1);
    }
    return PartialFunction(source_, target_, std::move(table));
  } else {
    std::vector<int> table(static_cast<std::size_t>(source_->size()));
    table[static_cast<std::size_t>(source_->bottom())] = target_->bottom();
    for (int p = 0; p < k; ++p)
      table[static_cast<std::size_t>(source_->carrier_element(p))] =
          static_cast<int>(digits[static_cast<std::size_t>(p)]);
    if constexpr (std::is_same_v<MapT, JoinMap>) {
      if (find_join_violation(*source_, *target_, table)) return std::nullopt;
      return JoinMap(source_, target_, std::move(table));
    } else {
      if (find_monotone_violation(*source_, *target_, table)) return std::nullopt;
      return MonotoneZeroMap(source_, target_, std::move(table));
    }
  }
}

template <class MapT>
std::uint64_t Enumerator<MapT>::count() const {
  if constexpr (std::is_same_v<MapT, PowerMap> || std::is_same_v<MapT, PartialFunction>) {
    return raw_size_;
  } else {
    std::uint64_t n = 0;
    for_each([&](const MapT&) { ++n; });
    return n;
  }
}

template <class MapT>
std::vector<MapT> Enumerator<MapT>::all() const {
  std::vector<MapT> out;
  for_each([&](const MapT& m) { out.push_back(m); });
  return out;
}

template class Enumerator<JoinMap>;
template class Enumerator<MonotoneZeroMap>;
template class Enumerator<PartialFunction>;
template class Enumerator<PowerMap>;

std::uint64_t count_morphisms(const LatticePtr& source, const LatticePtr& target,
                              MorphismClass cls, std::uint64_t guard) {
  switch (cls) {
    case MorphismClass::Join: return JoinMapEnumerator(source, target, guard).count();
    case MorphismClass::MonotoneZero:
      return MonotoneZeroMapEnumerator(source, target, guard).count();
    case MorphismClass::Partial:
      return PartialFunctionEnumerator(source, target, guard).count();
    case MorphismClass::Power: return PowerMapEnumerator(source, target, guard).count();
  }
  raise(Errc::InvalidArgument, "unknown morphism class");
}

}  // namespace latq
