#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pointlat/binomial_poly.hpp"
#include "pointlat/ints.hpp"
#include "pointlat/partition.hpp"

namespace pointlat {

/// An integer point of the counting polytope for type gamma with l parts:
/// nu maps every nonempty subset of {1..l} (as a bitmask) to a nonnegative
/// integer.  nu(empty) is implicit (n minus the sum over nonempty subsets).
struct IncidenceVector {
  int num_blocks = 0;
  std::vector<int> nu;  // indexed by mask; nu[0] unused

  int value(std::uint32_t mask) const { return nu[mask]; }
  int sum() const;  // total over nonempty subsets
};

using PointVisitor = std::function<void(const IncidenceVector&)>;

struct EnumerateOptions {
  int threads = 1;                     // 0 = hardware concurrency
  std::string checkpoint_path;         // empty = no checkpointing
  double checkpoint_interval_s = 30.0;
  bool progress = false;               // periodic stderr progress lines
  // Testing hook: stop (checkpointing state) after this many completed
  // subtrees; the result is marked incomplete.  0 = run to completion.
  std::uint64_t stop_after_subtrees = 0;
};

struct EnumerationResult {
  Int point_count = 0;                // points over nonempty-subset coordinates
  std::vector<Int> weight_by_s;       // sum of multinomial weights, index s
  bool complete = true;
};

/// |Stab(gamma)| = prod_k m_k(gamma)!.
Int stabilizer_order(const Partition& gamma);

/// Validates a type for dimension d: parts in [1, d+1], and a part equal to
/// d+1 only as the sole part.  Throws std::invalid_argument otherwise.
void validate_type(int d, const Partition& gamma);

/// Visits every integer point of the polytope exactly once.  Deterministic
/// visiting order with threads == 1; the aggregate (and point count) is
/// bit-identical for every thread count.  A non-null visitor is invoked from
/// worker threads when threads > 1.
EnumerationResult enumerate_points(int d, const Partition& gamma,
                                   const EnumerateOptions& options = {},
                                   const PointVisitor& visitor = nullptr);

struct TypeCountResult {
  Partition gamma;
  BinomialPoly lambda;
  Int point_count;
  std::chrono::duration<double> elapsed{0};
};

/// The number of elements of type gamma as a polynomial in n: the per-s
/// weight buckets divided exactly by the stabilizer order.
TypeCountResult lambda_poly(int d, const Partition& gamma,
                            const EnumerateOptions& options = {});

/// Closed form for types with at most two parts; must agree with lambda_poly.
BinomialPoly lambda_closed_form(int d, const Partition& gamma);

/// Minimal n with a positive count (equivalently n > d and the smallest
/// basis index with a nonzero — hence positive — coefficient).
int existence_threshold(const BinomialPoly& lambda, int d);

}  // namespace pointlat
