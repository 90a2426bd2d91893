#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "pointlat/partition.hpp"

namespace pointlat {

/// A block: sorted distinct 1-based members of {1..n}.
using Block = std::vector<int>;

/// An element of L(n,d): a set of distinct blocks, stored in a canonical
/// total order (size ascending, then lexicographic) so that set equality is
/// representation equality.  {} is the minimum element; {{}} (one empty
/// block) is the maximum.
class LatticeElement {
 public:
  LatticeElement() = default;
  explicit LatticeElement(std::vector<Block> blocks);

  static LatticeElement minimum() { return LatticeElement{}; }
  static LatticeElement maximum() { return LatticeElement(std::vector<Block>{Block{}}); }

  const std::vector<Block>& blocks() const { return blocks_; }
  bool is_minimum() const { return blocks_.empty(); }
  bool is_maximum() const { return blocks_.size() == 1 && blocks_[0].empty(); }

  std::string to_string() const;  // "{{1,2},{3,4,5}}"; "{}"; "{{}}"
  static LatticeElement parse(const std::string& text);

  auto operator<=>(const LatticeElement&) const = default;

 private:
  std::vector<Block> blocks_;
};

/// codim_d(X) = d + 1 - |X| for 0 <= |X| <= d+1.
int codim(int block_size, int d);

/// Rank: sum of block codimensions; 0 for the empty collection.
int rho(const LatticeElement& t, int d);

/// Defect D_d of a collection of >= 1 distinct blocks (may be negative):
/// codim of the common intersection minus the rank.
int defect(std::span<const Block> blocks, int d);

/// Membership test of the set-theoretic model: every sub-collection of size
/// >= 2 has positive defect and every block has size <= d.
bool is_member(const LatticeElement& t, int n, int d);

/// Strict order: rho(a) < rho(b) and every block of a contains some block
/// of b.  leq adds equality.
bool less(const LatticeElement& a, const LatticeElement& b, int d);
bool leq(const LatticeElement& a, const LatticeElement& b, int d);

/// Type: the weakly-decreasing multiset of block codimensions.
/// type_of({}) = (0), type_of({{}}) = (d+1).
Partition type_of(const LatticeElement& t, int d);

}  // namespace pointlat
