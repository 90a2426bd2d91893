#include "pointlat/oracle.hpp"

#include <algorithm>
#include <bit>

namespace pointlat {

namespace {

// all candidate blocks: subsets of {1..n} of size 1..d, size then lex order
std::vector<Block> candidate_blocks(int n, int d) {
  std::vector<Block> out;
  for (int size = 1; size <= d; ++size) {
    Block cur(size);
    for (int i = 0; i < size; ++i) cur[i] = i + 1;
    while (true) {
      out.push_back(cur);
      int i = size - 1;
      while (i >= 0 && cur[i] == n - (size - 1 - i)) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return out;
}

std::int64_t estimate_candidates(int n, int d) {
  // sum_{l<=d} C(B, l) with B = number of blocks; saturating
  std::int64_t blocks = 0;
  for (int s = 1; s <= d; ++s) {
    Int c = binom(n, unsigned(s));
    if (!c.fits_slong_p()) return INT64_MAX;
    blocks += c.get_si();
  }
  Int total = 0;
  for (int l = 1; l <= d; ++l) total += binom(Int(blocks), unsigned(l));
  return total.fits_slong_p() ? total.get_si() : INT64_MAX;
}

struct Search {
  int n, d;
  const std::vector<Block>& blocks;
  std::vector<int> chosen;        // indices into blocks
  std::vector<const Block*> view;  // parallel, for defect calls
  int rank = 0;
  std::vector<LatticeElement>* out;

  // every sub-collection containing the newest block must have positive
  // defect; older sub-collections were verified at earlier levels
  bool admissible(const Block& next) const {
    int l = int(chosen.size());
    std::vector<Block> sub;
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      if (std::popcount(mask) + 1 < 2) continue;
      sub.clear();
      for (int i = 0; i < l; ++i)
        if (mask & (1u << i)) sub.push_back(*view[i]);
      sub.push_back(next);
      if (defect(sub, d) <= 0) return false;
    }
    return true;
  }

  void run(int first) {
    for (size_t bi = first; bi < blocks.size(); ++bi) {
      const Block& b = blocks[bi];
      int c = codim(int(b.size()), d);
      if (!chosen.empty() && rank + c > d) continue;  // multi-block rank bound
      if (!chosen.empty() && !admissible(b)) continue;
      std::vector<Block> collected;
      for (auto* p : view) collected.push_back(*p);
      collected.push_back(b);
      out->push_back(LatticeElement(std::move(collected)));
      chosen.push_back(int(bi));
      view.push_back(&b);
      rank += c;
      run(int(bi) + 1);
      rank -= c;
      view.pop_back();
      chosen.pop_back();
    }
  }
};

}  // namespace

ExplicitLattice enumerate_lattice(int n, int d, const OracleBudget& budget) {
  if (d < 0 || n <= d) throw std::invalid_argument("enumerate_lattice: requires n > d >= 0");
  std::int64_t est = estimate_candidates(n, d);
  if (est > budget.max_candidates)
    throw Infeasible("enumerate_lattice(" + std::to_string(n) + "," + std::to_string(d) +
                         "): estimated " + std::to_string(est) +
                         " candidate collections exceeds budget " +
                         std::to_string(budget.max_candidates),
                     est);

  ExplicitLattice lat;
  lat.n = n;
  lat.d = d;
  lat.elements.push_back(LatticeElement::minimum());
  lat.elements.push_back(LatticeElement::maximum());
  std::vector<Block> blocks = candidate_blocks(n, d);
  Search search{n, d, blocks, {}, {}, 0, &lat.elements};
  search.run(0);

  std::sort(lat.elements.begin(), lat.elements.end(),
            [&](const LatticeElement& a, const LatticeElement& b) {
              int ra = rho(a, d), rb = rho(b, d);
              if (ra != rb) return ra < rb;
              return a < b;
            });
  for (const auto& e : lat.elements) lat.ranks.push_back(rho(e, d));
  return lat;
}

int ExplicitLattice::index_of(const LatticeElement& e) const {
  auto cmp = [&](const LatticeElement& a, const LatticeElement& b) {
    int ra = rho(a, d), rb = rho(b, d);
    if (ra != rb) return ra < rb;
    return a < b;
  };
  auto it = std::lower_bound(elements.begin(), elements.end(), e, cmp);
  if (it != elements.end() && *it == e) return int(it - elements.begin());
  return -1;
}

std::vector<Int> mobius_table(const ExplicitLattice& lat) {
  const size_t n = lat.elements.size();
  std::vector<Int> mu(n);
  mu[0] = 1;  // minimum
  for (size_t i = 1; i < n; ++i) {
    Int acc = 0;
    for (size_t j = 0; j < i; ++j) {
      if (lat.ranks[j] >= lat.ranks[i]) break;  // sorted by rank
      if (less(lat.elements[j], lat.elements[i], lat.d)) acc += mu[j];
    }
    mu[i] = -acc;
  }
  return mu;
}

std::map<Partition, Int> count_by_type(const ExplicitLattice& lat) {
  std::map<Partition, Int> counts;
  for (const auto& e : lat.elements) counts[type_of(e, lat.d)] += 1;
  return counts;
}

NumericChi chi_numeric(const ExplicitLattice& lat, const std::vector<Int>& mobius) {
  NumericChi chi;
  chi.lattice.assign(lat.d + 2, Int(0));
  for (size_t i = 0; i < lat.elements.size(); ++i)
    chi.lattice[lat.d + 1 - lat.ranks[i]] += mobius[i];
  // arrangement polynomial: drop the mu({emptyset}) constant, divide by t
  chi.arrangement.assign(lat.d + 1, Int(0));
  for (int p = 0; p <= lat.d; ++p) chi.arrangement[p] = chi.lattice[p + 1];
  return chi;
}

int join_index(const ExplicitLattice& lat, std::span<const int> element_indices) {
  // scan ranks upward for the least upper bound
  int best = -1;
  for (size_t i = 0; i < lat.elements.size(); ++i) {
    bool upper = true;
    for (int idx : element_indices) {
      if (!leq(lat.elements[idx], lat.elements[i], lat.d)) {
        upper = false;
        break;
      }
    }
    if (!upper) continue;
    if (best < 0) {
      best = int(i);
    } else if (lat.ranks[i] == lat.ranks[best]) {
      throw InternalError("join is not unique: two minimal upper bounds");
    } else {
      break;  // ranks ascend; first rank level with an upper bound wins
    }
  }
  if (best < 0) throw InternalError("join not found");
  return best;
}

}  // namespace pointlat
