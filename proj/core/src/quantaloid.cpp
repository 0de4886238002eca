#include "latq/quantaloid.hpp"

#include <algorithm>
#include <map>

namespace latq {

const char* tier_name(Tier tier) {
  switch (tier) {
    case Tier::QMinus: return "qminus";
    case Tier::QSt: return "qst";
    case Tier::QPlus: return "qplus";
    case Tier::PA: return "pA";
  }
  return "?";
}

std::optional<Tier> tier_from_name(std::string_view name) {
  if (name == "qminus") return Tier::QMinus;
  if (name == "qst") return Tier::QSt;
  if (name == "qplus") return Tier::QPlus;
  if (name == "pA" || name == "pa") return Tier::PA;
  return std::nullopt;
}

std::vector<int> property_transition_table(const PowerMap& g) {
  const auto& src = *g.source();
  const auto& tgt = *g.target();
  std::vector<int> table(static_cast<std::size_t>(src.size()), tgt.bottom());
  for (int p = 0; p < src.carrier_size(); ++p)
    table[static_cast<std::size_t>(src.carrier_element(p))] =
        tgt.join_of_subset(g.singleton_image_at(p));
  return table;
}

std::optional<JoinMap> state_transition(const PowerMap& g, const SubcategorySpec& spec) {
  spec.require_object(g.source());
  spec.require_object(g.target());
  auto table = property_transition_table(g);
  if (find_join_violation(*g.source(), *g.target(), table)) return std::nullopt;
  if (!spec.contains_table(g.source(), g.target(), table)) return std::nullopt;
  return JoinMap(g.source(), g.target(), std::move(table));
}

OracleOutcome state_transition_oracle(const PowerMap& g, int carrier_bound) {
  const auto& src = *g.source();
  const auto& tgt = *g.target();
  const int k = src.carrier_size();
  if (k > carrier_bound)
    raise(Errc::SizeGuardExceeded, "oracle sweep over 2^" + std::to_string(k) +
                                       " subsets exceeds the carrier bound of " +
                                       std::to_string(carrier_bound));
  // Group subsets by their join; within a group every image join must agree
  // with the group's first.
  struct Group {
    Subset first;
    int image_join;
  };
  std::map<int, Group> groups;
  const Subset limit = src.full_carrier();
  for (Subset T = 0;; ++T) {
    int j = src.join_of_subset(T);
    int v = tgt.join_of_subset(g.apply(T));
    auto [it, fresh] = groups.emplace(j, Group{T, v});
    if (!fresh && it->second.image_join != v)
      return OracleOutcome{false, it->second.first, T};
    if (T == limit) break;
  }
  return OracleOutcome{true, 0, 0};
}

namespace {

// Hull accumulator: union of all member images dominated by g.
std::vector<Subset> hull_images(const PowerMap& g, std::span<const PowerMap> member_images) {
  std::vector<Subset> acc(g.singleton_images().size(), 0);
  for (const PowerMap& img : member_images) {
    bool dominated = true;
    for (std::size_t p = 0; p < acc.size(); ++p)
      if ((img.singleton_images()[p] & ~g.singleton_images()[p]) != 0) {
        dominated = false;
        break;
      }
    if (!dominated) continue;
    for (std::size_t p = 0; p < acc.size(); ++p) acc[p] |= img.singleton_images()[p];
  }
  return acc;
}

}  // namespace

PowerMap q_minus_hull(const PowerMap& g, const SubcategorySpec& spec, std::uint64_t guard) {
  spec.require_object(g.source());
  spec.require_object(g.target());
  auto images = spec.member_images(g.source(), g.target(), guard);
  return PowerMap(g.source(), g.target(), hull_images(g, images));
}

bool in_q_minus(const PowerMap& g, const SubcategorySpec& spec, std::uint64_t guard) {
  return q_minus_hull(g, spec, guard) == g;
}

void for_each_tier_member(const LatticePtr& source, const LatticePtr& target, Tier tier,
                          const SubcategorySpec& spec,
                          const std::function<void(const PowerMap&)>& fn,
                          std::uint64_t guard) {
  spec.require_object(source);
  spec.require_object(target);
  switch (tier) {
    case Tier::PA: {
      auto images = spec.member_images(source, target, guard);
      std::ranges::sort(images, [](const PowerMap& a, const PowerMap& b) {
        return std::ranges::lexicographical_compare(a.singleton_images(),
                                                    b.singleton_images());
      });
      auto dup = std::ranges::unique(images);
      images.erase(dup.begin(), dup.end());
      for (const PowerMap& img : images) fn(img);
      return;
    }
    case Tier::QPlus:
      PowerMapEnumerator(source, target, guard).for_each(fn);
      return;
    case Tier::QSt:
      PowerMapEnumerator(source, target, guard).for_each([&](const PowerMap& g) {
        if (state_transition(g, spec)) fn(g);
      });
      return;
    case Tier::QMinus: {
      auto images = spec.member_images(source, target, guard);
      PowerMapEnumerator(source, target, guard).for_each([&](const PowerMap& g) {
        if (hull_images(g, images) == std::vector<Subset>(g.singleton_images().begin(),
                                                          g.singleton_images().end()))
          fn(g);
      });
      return;
    }
  }
  raise(Errc::InvalidArgument, "unknown tier");
}

std::uint64_t hom_set_count(const LatticePtr& source, const LatticePtr& target, Tier tier,
                            const SubcategorySpec& spec, std::uint64_t guard) {
  if (tier == Tier::QPlus) {
    spec.require_object(source);
    spec.require_object(target);
    return PowerMapEnumerator(source, target, guard).raw_size();
  }
  std::uint64_t n = 0;
  for_each_tier_member(source, target, tier, spec, [&](const PowerMap&) { ++n; }, guard);
  return n;
}

TierReport classify_power_map(const PowerMap& g, const SubcategorySpec& spec,
                              std::uint64_t guard) {
  TierReport report(q_minus_hull(g, spec, guard));
  report.in_q_minus = (report.hull == g);
  report.property_transition = state_transition(g, spec);
  report.is_state_transition = report.property_transition.has_value();
  return report;
}

PowerMap counterexample_q_plus(const LatticePtr& lattice, int interior_element) {
  const auto& L = *lattice;
  if (interior_element < 0 || interior_element >= L.size() ||
      interior_element == L.bottom() || interior_element == L.top())
    raise(Errc::NoInteriorElement,
          "need an element strictly between bottom and top of " + L.name());
  std::vector<Subset> images(static_cast<std::size_t>(L.carrier_size()), 0);
  images[static_cast<std::size_t>(L.carrier_pos(interior_element))] =
      L.singleton(interior_element);
  return PowerMap(lattice, lattice, std::move(images));
}

PowerMap counterexample_state(const LatticePtr& lattice, std::array<int, 3> triple) {
  const auto& L = *lattice;
  auto [a, b, c] = triple;
  for (int e : triple)
    if (e < 0 || e >= L.size())
      raise(Errc::TripleHypothesisViolated, "triple element out of range");
  const int bc = L.join(b, c);
  if (!L.lt(a, bc) || L.leq(a, b) || L.leq(a, c))
    raise(Errc::TripleHypothesisViolated,
          "need a < b∨c, a ≰ b, a ≰ c in " + L.name());
  std::vector<Subset> images(static_cast<std::size_t>(L.carrier_size()), 0);
  for (int p = 0; p < L.carrier_size(); ++p)
    images[static_cast<std::size_t>(p)] = Subset{1} << p;
  images[static_cast<std::size_t>(L.carrier_pos(bc))] =
      L.singleton(a) | L.singleton(b) | L.singleton(c);
  return PowerMap(lattice, lattice, std::move(images));
}

}  // namespace latq
