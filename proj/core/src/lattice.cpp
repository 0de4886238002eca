#include "latq/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace latq {

namespace {

constexpr int kMaxCarrierBits = 64;

}  // namespace

LatticePtr FiniteLattice::build(std::string name, std::vector<std::string> elements,
                                const std::vector<Cover>& covers) {
  const int n = static_cast<int>(elements.size());
  std::unordered_map<std::string_view, int> index;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = index.emplace(elements[i], i);
    if (!fresh) raise(Errc::InvalidArgument, "duplicate element '" + elements[i] + "'");
  }

  // Strict reachability closure of the cover edges.
  std::vector<std::uint8_t> strict(static_cast<std::size_t>(n) * n, 0);
  for (const Cover& c : covers) {
    auto lo = index.find(c.lo);
    auto hi = index.find(c.hi);
    if (lo == index.end()) raise(Errc::InvalidArgument, "cover names unknown element '" + c.lo + "'");
    if (hi == index.end()) raise(Errc::InvalidArgument, "cover names unknown element '" + c.hi + "'");
    strict[static_cast<std::size_t>(lo->second) * n + hi->second] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (strict[static_cast<std::size_t>(i) * n + k])
        for (int j = 0; j < n; ++j)
          if (strict[static_cast<std::size_t>(k) * n + j])
            strict[static_cast<std::size_t>(i) * n + j] = 1;
  for (int i = 0; i < n; ++i)
    if (strict[static_cast<std::size_t>(i) * n + i])
      raise(Errc::NotAPartialOrder, "cycle through element '" + elements[i] + "'");

  auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  lattice->name_ = std::move(name);
  lattice->labels_ = std::move(elements);
  lattice->leq_ = std::move(strict);
  for (int i = 0; i < n; ++i) lattice->leq_[static_cast<std::size_t>(i) * n + i] = 1;

  auto below_all = [&](int z) {
    for (int x = 0; x < n; ++x)
      if (!lattice->leq_[static_cast<std::size_t>(z) * n + x]) return false;
    return true;
  };
  auto above_all = [&](int z) {
    for (int x = 0; x < n; ++x)
      if (!lattice->leq_[static_cast<std::size_t>(x) * n + z]) return false;
    return true;
  };
  lattice->bottom_ = lattice->top_ = -1;
  for (int z = 0; z < n; ++z) {
    if (below_all(z)) lattice->bottom_ = z;
    if (above_all(z)) lattice->top_ = z;
  }
  if (lattice->bottom_ < 0) raise(Errc::NoBottom, "no least element");
  if (lattice->top_ < 0) raise(Errc::NoTop, "no greatest element");
  if (lattice->bottom_ == lattice->top_)
    raise(Errc::TrivialLattice, "bottom and top coincide");

  lattice->finish_tables();
  return lattice;
}

void FiniteLattice::finish_tables() {
  const int n = size();
  join_.assign(static_cast<std::size_t>(n) * n, -1);
  meet_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      int lub = -1;
      for (int z = 0; z < n; ++z) {
        if (!leq(x, z) || !leq(y, z)) continue;
        bool least = true;
        for (int w = 0; w < n; ++w)
          if (leq(x, w) && leq(y, w) && !leq(z, w)) { least = false; break; }
        if (least) { lub = z; break; }
      }
      if (lub < 0)
        raise(Errc::NotALattice, "pair (" + labels_[x] + ", " + labels_[y] +
                                     ") has no least upper bound");
      int glb = -1;
      for (int z = 0; z < n; ++z) {
        if (!leq(z, x) || !leq(z, y)) continue;
        bool greatest = true;
        for (int w = 0; w < n; ++w)
          if (leq(w, x) && leq(w, y) && !leq(w, z)) { greatest = false; break; }
        if (greatest) { glb = z; break; }
      }
      if (glb < 0)
        raise(Errc::NotALattice, "pair (" + labels_[x] + ", " + labels_[y] +
                                     ") has no greatest lower bound");
      join_[static_cast<std::size_t>(x) * n + y] = lub;
      join_[static_cast<std::size_t>(y) * n + x] = lub;
      meet_[static_cast<std::size_t>(x) * n + y] = glb;
      meet_[static_cast<std::size_t>(y) * n + x] = glb;
    }
  }
  carrier_.clear();
  carrier_pos_.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    if (e == bottom_) continue;
    carrier_pos_[e] = static_cast<int>(carrier_.size());
    carrier_.push_back(e);
  }
}

const std::string& FiniteLattice::label(int element) const {
  return labels_[static_cast<std::size_t>(require_element(element))];
}

std::optional<int> FiniteLattice::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  return std::nullopt;
}

int FiniteLattice::require_element(int element) const {
  if (element < 0 || element >= size())
    raise(Errc::ElementNotInLattice,
          "element index " + std::to_string(element) + " out of range in " + name_);
  return element;
}

bool FiniteLattice::leq(int x, int y) const {
  return leq_[static_cast<std::size_t>(require_element(x)) * size() + require_element(y)] != 0;
}

int FiniteLattice::join(int x, int y) const {
  return join_[static_cast<std::size_t>(require_element(x)) * size() + require_element(y)];
}

int FiniteLattice::meet(int x, int y) const {
  return meet_[static_cast<std::size_t>(require_element(x)) * size() + require_element(y)];
}

int FiniteLattice::join_of(std::span<const int> elements) const {
  int acc = bottom_;
  for (int e : elements) acc = join(acc, e);
  return acc;
}

int FiniteLattice::carrier_element(int pos) const {
  if (pos < 0 || pos >= carrier_size())
    raise(Errc::ElementNotInCarrier, "carrier position " + std::to_string(pos) +
                                         " out of range in " + name_);
  return carrier_[static_cast<std::size_t>(pos)];
}

int FiniteLattice::carrier_pos(int element) const {
  int p = carrier_pos_[static_cast<std::size_t>(require_element(element))];
  if (p < 0)
    raise(Errc::ElementNotInCarrier,
          "'" + label(element) + "' is the bottom of " + name_);
  return p;
}

bool FiniteLattice::in_carrier(int element) const {
  return element >= 0 && element < size() &&
         carrier_pos_[static_cast<std::size_t>(element)] >= 0;
}

Subset FiniteLattice::full_carrier() const {
  const int k = carrier_size();
  if (k > kMaxCarrierBits)
    raise(Errc::SizeGuardExceeded, "carrier of " + name_ + " exceeds 64 elements");
  return k == kMaxCarrierBits ? ~Subset{0} : (Subset{1} << k) - 1;
}

Subset FiniteLattice::singleton(int element) const {
  return Subset{1} << carrier_pos(element);
}

int FiniteLattice::join_of_subset(Subset s) const {
  if ((s & ~full_carrier()) != 0)
    raise(Errc::ElementNotInCarrier, "subset has bits outside the carrier of " + name_);
  int acc = bottom_;
  while (s != 0) {
    int pos = std::countr_zero(s);
    acc = join(acc, carrier_[static_cast<std::size_t>(pos)]);
    s &= s - 1;
  }
  return acc;
}

Subset FiniteLattice::subset_of(std::span<const int> elements) const {
  Subset s = 0;
  for (int e : elements) s |= singleton(e);
  return s;
}

std::vector<int> FiniteLattice::elements_of(Subset s) const {
  if ((s & ~full_carrier()) != 0)
    raise(Errc::ElementNotInCarrier, "subset has bits outside the carrier of " + name_);
  std::vector<int> out;
  while (s != 0) {
    out.push_back(carrier_[static_cast<std::size_t>(std::countr_zero(s))]);
    s &= s - 1;
  }
  return out;
}

std::string FiniteLattice::subset_to_string(Subset s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) os << ' ';
    os << label(e);
    first = false;
  }
  os << '}';
  return os.str();
}

LatticePtr FiniteLattice::dual() const {
  const int n = size();
  auto rev = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  rev->name_ = name_ + "^op";
  rev->labels_ = labels_;
  rev->leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      rev->leq_[static_cast<std::size_t>(x) * n + y] =
          leq_[static_cast<std::size_t>(y) * n + x];
  rev->bottom_ = top_;
  rev->top_ = bottom_;
  rev->finish_tables();
  return rev;
}

namespace {

// Backtracking search for an order-reversing involution satisfying the
// complement laws x ∨ x' = top, x ∧ x' = bottom.
bool find_orthocomplement(const FiniteLattice& L, std::vector<int>& image) {
  const int n = L.size();
  int x = -1;
  for (int e = 0; e < n; ++e)
    if (image[static_cast<std::size_t>(e)] < 0) { x = e; break; }
  if (x < 0) return true;
  for (int c = 0; c < n; ++c) {
    if (c != x && image[static_cast<std::size_t>(c)] >= 0) continue;
    if (L.join(x, c) != L.top() || L.meet(x, c) != L.bottom()) continue;
    // Order reversal of both new assignments against everything assigned.
    bool reversing = true;
    auto compatible = [&](int e, int ei) {
      for (int y = 0; y < n; ++y) {
        int yi = image[static_cast<std::size_t>(y)];
        if (yi < 0) continue;
        if (L.leq(e, y) && !L.leq(yi, ei)) return false;
        if (L.leq(y, e) && !L.leq(ei, yi)) return false;
      }
      return true;
    };
    image[static_cast<std::size_t>(x)] = c;
    image[static_cast<std::size_t>(c)] = x;
    reversing = compatible(x, c) && compatible(c, x);
    if (reversing && find_orthocomplement(L, image)) return true;
    image[static_cast<std::size_t>(x)] = -1;
    image[static_cast<std::size_t>(c)] = -1;
  }
  return false;
}

}  // namespace

LatticeProfile classify(const FiniteLattice& L) {
  const int n = L.size();
  LatticeProfile profile;
  profile.is_two_chain = (n == 2);

  for (int x = 0; x < n; ++x) {
    if (x == L.bottom()) continue;
    bool atom = true;
    for (int y = 0; y < n; ++y)
      if (y != L.bottom() && y != x && L.lt(y, x)) { atom = false; break; }
    if (atom) profile.atoms.push_back(x);
  }

  for (int x = 0; x < n; ++x) {
    if (x == L.bottom()) continue;
    bool irreducible = true;
    for (int a = 0; a < n && irreducible; ++a)
      for (int b = 0; b < n; ++b)
        if (L.lt(a, x) && L.lt(b, x) && L.join(a, b) == x) { irreducible = false; break; }
    if (irreducible) profile.join_irreducibles.push_back(x);
  }

  profile.is_atomistic = true;
  for (int x = 0; x < n; ++x) {
    if (x == L.bottom()) continue;
    int acc = L.bottom();
    for (int a : profile.atoms)
      if (L.leq(a, x)) acc = L.join(acc, a);
    if (acc != x) { profile.is_atomistic = false; break; }
  }

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  image[static_cast<std::size_t>(L.bottom())] = L.top();
  image[static_cast<std::size_t>(L.top())] = L.bottom();
  profile.is_orthocomplemented = find_orthocomplement(L, image);

  for (int a = 0; a < n && !profile.witness_triple; ++a)
    for (int b = 0; b < n && !profile.witness_triple; ++b)
      for (int c = 0; c < n; ++c) {
        int bc = L.join(b, c);
        if (L.lt(a, bc) && !L.leq(a, b) && !L.leq(a, c)) {
          profile.witness_triple = {{a, b, c}};
          break;
        }
      }

  return profile;
}

}  // namespace latq
