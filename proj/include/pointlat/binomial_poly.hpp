#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pointlat/ints.hpp"

namespace pointlat {

/// Exact polynomial in n written in the binomial-coefficient basis:
///   p(n) = sum_k coeff(k) * C(n,k).
///
/// Stored sparsely and always canonical (no zero coefficients).  Values are
/// immutable in spirit: every operation returns a new polynomial, so sharing
/// across threads is safe.
class BinomialPoly {
 public:
  BinomialPoly() = default;  // the zero polynomial
  explicit BinomialPoly(const Int& constant);
  explicit BinomialPoly(long constant) : BinomialPoly(Int(constant)) {}

  /// c * C(n,k)
  static BinomialPoly basis(unsigned k, const Int& c = Int(1));
  static BinomialPoly from_coeffs(std::map<unsigned, Int> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree as a polynomial in n (max basis index); -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : int(coeffs_.rbegin()->first); }
  const std::map<unsigned, Int>& coeffs() const { return coeffs_; }
  Int coeff(unsigned k) const;

  friend BinomialPoly operator+(const BinomialPoly& a, const BinomialPoly& b);
  friend BinomialPoly operator-(const BinomialPoly& a, const BinomialPoly& b);
  friend BinomialPoly operator*(const BinomialPoly& a, const BinomialPoly& b);
  BinomialPoly operator-() const;
  BinomialPoly& operator+=(const BinomialPoly& o);
  BinomialPoly& operator-=(const BinomialPoly& o);
  BinomialPoly& operator*=(const BinomialPoly& o);
  bool operator==(const BinomialPoly&) const = default;

  /// p(n-c) re-expressed in the C(n,k) basis.
  /// evaluate(shifted(c), n) == evaluate(n-c) for all integers n >= c.
  BinomialPoly shifted(unsigned c) const;

  /// Exact value at integer n >= 0, with C(n,k) = 0 for k > n.
  Int evaluate(const Int& n) const;
  Int evaluate(long n) const { return evaluate(Int(n)); }

  /// Coefficient-wise exact division; throws InternalError on any remainder.
  BinomialPoly divided_exact(const Int& q) const;

  /// Monomial-basis coefficients (ascending powers of n), exact rationals.
  std::vector<Rat> to_monomial() const;
  /// Inverse of to_monomial; throws InternalError if any binomial-basis
  /// coefficient would be non-integral.
  static BinomialPoly from_monomial(const std::vector<Rat>& mono);

  /// Text form, ascending k with inline signs: "-1 + n_1 - n_2 - 3 n_4".
  std::string render() const;
  static BinomialPoly parse(const std::string& text);

  /// {"basis":"binomial","coeffs":{"4":"-3",...}} with decimal-string values.
  nlohmann::json to_json() const;
  static BinomialPoly from_json(const nlohmann::json& j);

 private:
  std::map<unsigned, Int> coeffs_;
  void prune();
};

}  // namespace pointlat
