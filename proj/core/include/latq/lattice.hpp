#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latq/error.hpp"

namespace latq {

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// Subset of a lattice carrier (its nonzero elements), one bit per carrier
/// position. Carrier positions follow ascending element index.
using Subset = std::uint64_t;

/// A cover `lo < hi` given by element labels.
struct Cover {
  std::string lo;
  std::string hi;
};

/// A validated finite complete lattice with distinct bottom and top.
///
/// Elements are identified by their declaration index. The order is the
/// reflexive-transitive closure of the declared covers; join and meet are
/// tabulated for every pair at construction, so all queries are O(1).
class FiniteLattice {
public:
  /// Validates and closes the cover relation. Throws:
  ///   NotAPartialOrder  cycle among the covers,
  ///   NoBottom/NoTop    missing least or greatest element,
  ///   TrivialLattice    bottom equals top,
  ///   NotALattice       a pair without a unique lub or glb,
  ///   InvalidArgument   duplicate labels or covers naming unknown labels.
  static LatticePtr build(std::string name, std::vector<std::string> elements,
                          const std::vector<Cover>& covers);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int element) const;
  std::optional<int> index_of(std::string_view label) const;

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool leq(int x, int y) const;
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  int join(int x, int y) const;
  int meet(int x, int y) const;

  /// Least upper bound of a set of elements; the empty join is bottom.
  int join_of(std::span<const int> elements) const;

  // Carrier view: the nonzero elements in ascending index order.
  int carrier_size() const { return static_cast<int>(carrier_.size()); }
  int carrier_element(int pos) const;
  int carrier_pos(int element) const;  // throws ElementNotInCarrier
  bool in_carrier(int element) const;
  Subset full_carrier() const;
  Subset singleton(int element) const;

  int join_of_subset(Subset s) const;
  Subset subset_of(std::span<const int> elements) const;
  std::vector<int> elements_of(Subset s) const;
  std::string subset_to_string(Subset s) const;

  /// The order-reversed lattice (meet and join swap, bottom and top swap).
  LatticePtr dual() const;

private:
  FiniteLattice() = default;
  void finish_tables();  // carrier + join/meet from leq_; throws NotALattice
  int require_element(int element) const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;  // row-major size() x size()
  int bottom_ = -1;
  int top_ = -1;
  std::vector<int> join_;
  std::vector<int> meet_;
  std::vector<int> carrier_;
  std::vector<int> carrier_pos_;  // element -> carrier position, -1 for bottom
};

/// Structural classification of a lattice.
struct LatticeProfile {
  bool is_two_chain = false;
  std::vector<int> atoms;
  std::vector<int> join_irreducibles;
  bool is_atomistic = false;
  bool is_orthocomplemented = false;
  /// First (a, b, c) in index order with a < b∨c, a ≰ b, a ≰ c, if any.
  std::optional<std::array<int, 3>> witness_triple;
};

LatticeProfile classify(const FiniteLattice& lattice);

}  // namespace latq
