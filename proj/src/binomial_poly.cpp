#include "pointlat/binomial_poly.hpp"

#include <cctype>
#include <sstream>

namespace pointlat {

namespace {

// C(n,a)*C(n,b) = sum_{k=max(a,b)}^{a+b} C(k,a) * C(a, a+b-k) * C(n,k).
// (Classify the pair (A,B), |A|=a, |B|=b, by k = |A u B|.)
Int product_basis_coeff(unsigned a, unsigned b, unsigned k) {
  return binom(Int(k), a) * binom(Int(a), a + b - k);
}

}  // namespace

BinomialPoly::BinomialPoly(const Int& constant) {
  if (constant != 0) coeffs_[0] = constant;
}

BinomialPoly BinomialPoly::basis(unsigned k, const Int& c) {
  BinomialPoly p;
  if (c != 0) p.coeffs_[k] = c;
  return p;
}

BinomialPoly BinomialPoly::from_coeffs(std::map<unsigned, Int> coeffs) {
  BinomialPoly p;
  p.coeffs_ = std::move(coeffs);
  p.prune();
  return p;
}

void BinomialPoly::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

Int BinomialPoly::coeff(unsigned k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Int(0) : it->second;
}

BinomialPoly operator+(const BinomialPoly& a, const BinomialPoly& b) {
  BinomialPoly r = a;
  r += b;
  return r;
}

BinomialPoly operator-(const BinomialPoly& a, const BinomialPoly& b) {
  BinomialPoly r = a;
  r -= b;
  return r;
}

BinomialPoly BinomialPoly::operator-() const {
  BinomialPoly r;
  for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
  return r;
}

BinomialPoly& BinomialPoly::operator+=(const BinomialPoly& o) {
  for (const auto& [k, c] : o.coeffs_) coeffs_[k] += c;
  prune();
  return *this;
}

BinomialPoly& BinomialPoly::operator-=(const BinomialPoly& o) {
  for (const auto& [k, c] : o.coeffs_) coeffs_[k] -= c;
  prune();
  return *this;
}

BinomialPoly operator*(const BinomialPoly& a, const BinomialPoly& b) {
  BinomialPoly r;
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) {
      Int c = ca * cb;
      for (unsigned k = std::max(ka, kb); k <= ka + kb; ++k)
        r.coeffs_[k] += c * product_basis_coeff(ka, kb, k);
    }
  }
  r.prune();
  // Exactness self-check by evaluation at degree+2 points past the degree.
  int deg = std::max(r.degree(), std::max(a.degree(), b.degree()));
  for (long x = deg; x <= 2 * deg + 1; ++x) {
    if (x < 0) break;
    if (r.evaluate(x) != a.evaluate(x) * b.evaluate(x))
      throw InternalError("binomial-basis product failed evaluation check");
  }
  return r;
}

BinomialPoly& BinomialPoly::operator*=(const BinomialPoly& o) {
  *this = *this * o;
  return *this;
}

BinomialPoly BinomialPoly::shifted(unsigned c) const {
  if (c == 0) return *this;
  // Vandermonde with a negative argument:
  //   C(n-c,k) = sum_{j=0}^{k} C(n,j) * (-1)^{k-j} * C(c+k-j-1, k-j).
  BinomialPoly r;
  for (const auto& [k, ck] : coeffs_) {
    for (unsigned j = 0; j <= k; ++j) {
      unsigned m = k - j;
      Int w = binom(Int(c + m - 1), m);
      if (m % 2) w = -w;
      r.coeffs_[j] += ck * w;
    }
  }
  r.prune();
  int deg = degree();
  for (long x = c + std::max(deg, 0); x <= c + 2 * std::max(deg, 0) + 1; ++x)
    if (r.evaluate(x) != evaluate(x - c))
      throw InternalError("binomial-basis shift failed evaluation check");
  return r;
}

Int BinomialPoly::evaluate(const Int& n) const {
  if (n < 0) throw std::invalid_argument("BinomialPoly::evaluate: n must be >= 0");
  Int total = 0;
  for (const auto& [k, c] : coeffs_) total += c * binom(n, k);
  return total;
}

BinomialPoly BinomialPoly::divided_exact(const Int& q) const {
  if (q == 0) throw std::invalid_argument("division by zero");
  BinomialPoly r;
  for (const auto& [k, c] : coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t()))
      throw InternalError("coefficient of C(n," + std::to_string(k) +
                          ") not divisible by " + q.get_str());
    Int d;
    mpz_divexact(d.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
    r.coeffs_[k] = d;
  }
  return r;
}

std::vector<Rat> BinomialPoly::to_monomial() const {
  int deg = degree();
  if (deg < 0) return {};
  // Signed Stirling numbers of the first kind:
  //   n(n-1)...(n-k+1) = sum_j s(k,j) n^j.
  std::vector<std::vector<Int>> s(deg + 1);
  s[0] = {Int(1)};
  for (int k = 1; k <= deg; ++k) {
    s[k].assign(k + 1, Int(0));
    for (int j = 0; j < k; ++j) {
      if (j + 1 <= k) s[k][j + 1] += s[k - 1][j];
      s[k][j] -= Int(k - 1) * s[k - 1][j];
    }
  }
  std::vector<Rat> mono(deg + 1, Rat(0));
  for (const auto& [k, c] : coeffs_) {
    Rat scale = Rat(c) / Rat(factorial(k));
    for (unsigned j = 0; j <= k; ++j) mono[j] += scale * Rat(s[k][j]);
  }
  while (!mono.empty() && mono.back() == 0) mono.pop_back();
  return mono;
}

BinomialPoly BinomialPoly::from_monomial(const std::vector<Rat>& mono) {
  int deg = int(mono.size()) - 1;
  if (deg < 0) return {};
  // Stirling numbers of the second kind: n^j = sum_k S(j,k) k! C(n,k).
  std::vector<std::vector<Int>> S(deg + 1);
  S[0] = {Int(1)};
  for (int j = 1; j <= deg; ++j) {
    S[j].assign(j + 1, Int(0));
    for (int k = 1; k <= j; ++k) {
      S[j][k] = Int(k) * (k < j ? S[j - 1][k] : Int(0)) + S[j - 1][k - 1];
    }
  }
  std::vector<Rat> out(deg + 1, Rat(0));
  for (int j = 0; j <= deg; ++j) {
    if (mono[j] == 0) continue;
    for (int k = 0; k <= j; ++k) out[k] += mono[j] * Rat(S[j][k] * factorial(k));
  }
  std::map<unsigned, Int> coeffs;
  for (int k = 0; k <= deg; ++k) {
    Rat c = out[k];
    c.canonicalize();
    if (c.get_den() != 1)
      throw InternalError("monomial->binomial conversion produced non-integer coefficient");
    if (c.get_num() != 0) coeffs[k] = c.get_num();
  }
  return from_coeffs(std::move(coeffs));
}

std::string BinomialPoly::render() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << " ";
      out << "n_" << k;
    }
  }
  return out.str();
}

BinomialPoly BinomialPoly::parse(const std::string& text) {
  std::map<unsigned, Int> coeffs;
  size_t i = 0, n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace(unsigned(text[i]))) ++i; };
  skip_ws();
  if (i == n) throw std::invalid_argument("parse: empty polynomial text");
  bool any = false;
  while (true) {
    skip_ws();
    if (i == n) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (any) {
      throw std::invalid_argument(std::string("parse: expected '+' or '-' before '") +
                                  text[i] + "'");
    }
    std::string digits;
    while (i < n && std::isdigit(unsigned(text[i]))) digits += text[i++];
    skip_ws();
    bool has_sym = false;
    unsigned k = 0;
    if (i < n && text[i] == 'n') {
      ++i;
      has_sym = true;
      if (i < n && text[i] == '_') {
        ++i;
        std::string sub;
        while (i < n && std::isdigit(unsigned(text[i]))) sub += text[i++];
        if (sub.empty()) throw std::invalid_argument("parse: missing index after 'n_'");
        k = unsigned(std::stoul(sub));
      } else {
        k = 1;  // bare "n"
      }
    }
    if (digits.empty() && !has_sym) {
      throw std::invalid_argument(std::string("parse: unexpected token '") +
                                  (i < n ? std::string(1, text[i]) : "<end>") + "'");
    }
    Int c = digits.empty() ? Int(1) : int_from_string(digits);
    if (sign < 0) c = -c;
    coeffs[has_sym ? k : 0] += c;
    any = true;
  }
  if (!any) throw std::invalid_argument("parse: no terms found");
  BinomialPoly p;
  p.coeffs_ = std::move(coeffs);
  p.prune();
  return p;
}

nlohmann::json BinomialPoly::to_json() const {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [k, c] : coeffs_) coeffs[std::to_string(k)] = c.get_str();
  return {{"basis", "binomial"}, {"coeffs", coeffs}};
}

BinomialPoly BinomialPoly::from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("basis", "") != std::string("binomial") ||
      !j.contains("coeffs") || !j["coeffs"].is_object())
    throw std::invalid_argument("polynomial JSON must be {\"basis\":\"binomial\",\"coeffs\":{...}}");
  std::map<unsigned, Int> coeffs;
  for (const auto& [key, val] : j["coeffs"].items()) {
    size_t pos = 0;
    unsigned long k = std::stoul(key, &pos);
    if (pos != key.size()) throw std::invalid_argument("bad basis index '" + key + "'");
    coeffs[unsigned(k)] = int_from_string(val.get<std::string>());
  }
  return from_coeffs(std::move(coeffs));
}

}  // namespace pointlat
