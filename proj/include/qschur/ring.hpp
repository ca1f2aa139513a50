#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qschur {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Raised when an exact division in Z[v,v^-1] leaves a remainder.
struct InexactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of Z[v,v^-1], stored as exponent-sorted nonzero terms.
class LaurentInt {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentInt() = default;
  LaurentInt(long long c);  // NOLINT: constants convert implicitly
  explicit LaurentInt(const BigInt& c);

  static LaurentInt monomial(int e, const BigInt& c = 1);
  static LaurentInt v(int e = 1) { return monomial(e); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int min_exp() const;
  int max_exp() const;
  BigInt coeff(int e) const;

  LaurentInt bar() const;
  LaurentInt shifted(int k) const;

  LaurentInt& operator+=(const LaurentInt& o);
  LaurentInt& operator-=(const LaurentInt& o);
  LaurentInt& operator*=(const LaurentInt& o);
  LaurentInt operator-() const;

  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
  friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.terms_ == b.terms_; }

  /// Quotient if `d` divides exactly, otherwise nothing.
  bool try_divide(const LaurentInt& d, LaurentInt& quotient) const;
  /// Quotient; throws InexactDivision on a remainder.
  LaurentInt exact_div(const LaurentInt& d) const;

  BigRat eval(const BigRat& x) const;
  BigInt content() const;

  std::string str() const;
  static LaurentInt parse(std::string_view text);

 private:
  explicit LaurentInt(std::vector<Term> t) : terms_(std::move(t)) {}
  std::vector<Term> terms_;
};

/// Element of Q(v) kept as a reduced fraction of Laurent polynomials.
class LaurentFrac {
 public:
  LaurentFrac() : num_(0), den_(1) {}
  LaurentFrac(long long c) : num_(c), den_(1) {}  // NOLINT
  LaurentFrac(LaurentInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  LaurentFrac(LaurentInt n, LaurentInt d);

  const LaurentInt& num() const { return num_; }
  const LaurentInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentInt(1); }
  /// The numerator when the denominator is 1; throws InexactDivision otherwise.
  LaurentInt to_laurent() const;

  LaurentFrac& operator+=(const LaurentFrac& o);
  LaurentFrac& operator-=(const LaurentFrac& o);
  LaurentFrac& operator*=(const LaurentFrac& o);
  LaurentFrac& operator/=(const LaurentFrac& o);
  LaurentFrac operator-() const;

  friend LaurentFrac operator+(LaurentFrac a, const LaurentFrac& b) { return a += b; }
  friend LaurentFrac operator-(LaurentFrac a, const LaurentFrac& b) { return a -= b; }
  friend LaurentFrac operator*(LaurentFrac a, const LaurentFrac& b) { return a *= b; }
  friend LaurentFrac operator/(LaurentFrac a, const LaurentFrac& b) { return a /= b; }
  friend bool operator==(const LaurentFrac& a, const LaurentFrac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  LaurentFrac shifted(int k) const { return LaurentFrac(num_.shifted(k), den_, Reduced{}); }
  std::string str() const;

 private:
  struct Reduced {};
  LaurentFrac(LaurentInt n, LaurentInt d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();
  LaurentInt num_;
  LaurentInt den_;
};

/// Polynomial in v'^2 with Q(v) coefficients; houses the stabilization ring.
class BiLaurent {
 public:
  BiLaurent() = default;
  BiLaurent(long long c);  // NOLINT
  BiLaurent(const LaurentInt& c);  // NOLINT
  BiLaurent(const LaurentFrac& c);  // NOLINT

  /// c * v'^e with e even and nonnegative.
  static BiLaurent monomial(int e, const LaurentFrac& c);

  const std::map<int, LaurentFrac>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  BiLaurent operator-() const;
  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  friend BiLaurent operator*(const LaurentInt& a, const BiLaurent& b);
  friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.terms_ == b.terms_; }

  /// Substitute v' = v^{-a}; throws InexactDivision when the result is not in Z[v,v^-1].
  LaurentInt at_vpow(int a) const;
  /// Substitute v' = 1.
  LaurentInt at_one() const;

  std::string str() const;

 private:
  std::map<int, LaurentFrac> terms_;
};

LaurentInt qint(int t);
LaurentInt qfact(int m);
/// prod_{i=1..t} (v^{2(N-i+1)} - 1) / (v^{2i} - 1)
LaurentInt gauss2(long long n, int t);
/// bar(gauss2(n, t)), cached; the coefficient shape used by the multiplication formulas.
const LaurentInt& gauss2_bar(long long n, int t);
/// prod_{s=1..t} (v^{a-s+1} - v^{-(a-s+1)}) / (v^s - v^{-s})
LaurentInt balanced_binom(long long a, int t);
/// prod_{s=0..t-1} (v^lambda - v^s)
LaurentInt bracket_fact_eval(long long lambda, int t);
/// prod_j (v^{-2 c_j} v'^2 - 1) / (v^{-2j} - 1), j = 1..len(c).
BiLaurent stab_binom(const std::vector<long long>& c);
/// p with v^2 := q; throws std::domain_error on odd exponents.
BigRat eval_q(const LaurentInt& p, long long q);

}  // namespace qschur
