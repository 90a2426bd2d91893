#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "pointlat/ints.hpp"
#include "pointlat/lattice.hpp"

namespace pointlat {

/// Thrown when a requested brute-force enumeration exceeds the budget.
struct Infeasible : std::runtime_error {
  std::int64_t estimated_candidates;
  Infeasible(std::string msg, std::int64_t est)
      : std::runtime_error(std::move(msg)), estimated_candidates(est) {}
};

struct OracleBudget {
  std::int64_t max_candidates = 5'000'000;  // covers n<=8 d<=3 and n<=7 d=4
};

/// The fully materialized poset L(n,d) for small instances: the independent
/// ground truth for every symbolic computation.
struct ExplicitLattice {
  int n = 0;
  int d = 0;
  std::vector<LatticeElement> elements;  // sorted by (rank, canonical order)
  std::vector<int> ranks;                // parallel to elements

  int index_of(const LatticeElement& e) const;  // -1 if absent
  bool less_by_index(int i, int j) const { return less(elements[i], elements[j], d); }
};

/// Exhaustive construction by the membership conditions; search prunes on
/// incremental defects and on rank <= d for multi-block collections.
ExplicitLattice enumerate_lattice(int n, int d, const OracleBudget& budget = {});

/// mu(minimum, element i) for every i, by direct recursion over lower
/// intervals.
std::vector<Int> mobius_table(const ExplicitLattice& lat);

std::map<Partition, Int> count_by_type(const ExplicitLattice& lat);

struct NumericChi {
  std::vector<Int> lattice;      // coefficient of t^p at index p, p = 0..d+1
  std::vector<Int> arrangement;  // p = 0..d
};
NumericChi chi_numeric(const ExplicitLattice& lat, const std::vector<Int>& mobius);

/// Least upper bound of the given elements; asserts uniqueness.
int join_index(const ExplicitLattice& lat, std::span<const int> element_indices);

}  // namespace pointlat
