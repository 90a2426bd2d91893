#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pointlat {

using Int = mpz_class;  // exact arbitrary-precision integer
using Rat = mpq_class;  // exact rational, for monomial-basis intermediates

/// Violation of an internal exactness guarantee (e.g. a stabilizer division
/// leaving a remainder).  Always indicates a bug, never bad user input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// C(n, k); zero for integer 0 <= n < k.  n must be nonnegative.
inline Int binom(const Int& n, unsigned long k) {
  if (n < 0) throw std::invalid_argument("binom: negative upper argument");
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline Int binom(long n, unsigned long k) { return binom(Int(n), k); }

inline Int factorial(unsigned long k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

/// Parses a base-10 integer; rejects anything else.
inline Int int_from_string(const std::string& s) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  return v;
}

}  // namespace pointlat
