#pragma once

#include <iosfwd>
#include <string>

#include "latq/morphisms.hpp"

namespace latq {

/// Loaded lattices addressable by declared name.
class LatticeRegistry {
public:
  /// Throws InvalidArgument on duplicate names.
  void add(LatticePtr lattice);
  LatticePtr find(const std::string& name) const;  // nullptr when absent
  LatticePtr require(const std::string& name) const;
  std::span<const LatticePtr> all() const { return lattices_; }

private:
  std::vector<LatticePtr> lattices_;
};

// Lattice text format (line-based, `#` comments):
//
//   lattice M3
//   elements: 0 a b c 1
//   covers: 0<a 0<b 0<c a<1 b<1 c<1
//
// The token after `lattice` names it, `elements:` order fixes the indices,
// and each cover is `x<y` (or `y>x`) with no spaces inside the pair.
LatticePtr parse_lattice(std::istream& in, const std::string& origin = "<input>");
LatticePtr parse_lattice_file(const std::string& path);
std::string serialize_lattice(const FiniteLattice& lattice);

// Map text format:
//
//   map f : M3 -> M3
//   class: power
//   a -> a
//   b -> b
//   c -> c
//   1 -> a b c
//
// Every nonzero source element appears exactly once. `-` is the empty image
// (power) or the kernel (partial); join/monotone right-hand sides are a
// single element.
struct NamedMorphism {
  std::string name;
  Morphism morphism;
};

NamedMorphism parse_map(std::istream& in, const LatticeRegistry& lattices,
                        const std::string& origin = "<input>");
NamedMorphism parse_map_file(const std::string& path, const LatticeRegistry& lattices);
std::string serialize_map(const std::string& name, const Morphism& morphism);

}  // namespace latq
