#pragma once

#include <map>
#include <string>
#include <vector>

#include "qschur/matrix.hpp"
#include "qschur/ring.hpp"

namespace qschur {

using SchurTerms = std::map<IntMatZ, LaurentInt>;

/// Element of K(window, r) in the normalized basis [A].
class SchurElem {
 public:
  SchurElem(Window w, Entry r) : window_(w), r_(r) {}
  SchurElem(Window w, Entry r, SchurTerms terms);
  static SchurElem basis(Window w, const IntMatZ& a, const LaurentInt& c = 1);
  static SchurElem identity(Window w, Entry r);

  const Window& window() const { return window_; }
  Entry degree() const { return r_; }
  const SchurTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentInt coeff(const IntMatZ& a) const;

  void add(const IntMatZ& a, const LaurentInt& c);
  SchurElem& operator+=(const SchurElem& o);
  SchurElem& operator-=(const SchurElem& o);
  SchurElem& operator*=(const LaurentInt& c);
  friend SchurElem operator+(SchurElem a, const SchurElem& b) { return a += b; }
  friend SchurElem operator-(SchurElem a, const SchurElem& b) { return a -= b; }
  friend SchurElem operator*(const LaurentInt& c, SchurElem a) { return a *= c; }
  friend bool operator==(const SchurElem& a, const SchurElem& b) {
    return a.window_ == b.window_ && a.r_ == b.r_ && a.terms_ == b.terms_;
  }

  /// "coeff*[E12+E21] + ..." in the corner-sum-compatible order; zero renders "0".
  std::string str() const;
  std::string json() const;
  static SchurElem from_json(const std::string& text);

 private:
  void check_key(const IntMatZ& a) const;
  Window window_;
  Entry r_;
  SchurTerms terms_;
};

enum class Direction { upper, lower };

/// base - b E_{h,h+1} (upper) or base - b E_{h+1,h} (lower) is diagonal.
struct AlmostDiag {
  IntMatZ base;
  int h = 0;
  Entry b = 0;
  Direction dir = Direction::upper;

  /// Throws std::invalid_argument unless the shape holds; `nonneg` also requires a nonnegative diagonal.
  void validate(bool nonneg = true) const;
  IntMatZ diagonal_part() const;
  /// Recognizes a matrix of almost-diagonal shape.
  static bool recognize(const IntMatZ& a, AlmostDiag& out);
};

/// [B] * [A] for every key A of x, by the closed multiplication formulas.
SchurTerms fundamental_left(const AlmostDiag& b, const SchurTerms& x);
SchurElem fundamental_left(const AlmostDiag& b, const SchurElem& x);

/// One factor of the triangular decomposition: b E_{h,h+1} (upper) or b E_{h+1,h} (lower).
struct ChainStep {
  int h = 0;
  Entry b = 0;
  Direction dir = Direction::upper;
  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

/// Off-diagonal factor sequence of A: upper factors by column descending, row descending, h ascending;
/// then lower factors by row ascending, column ascending, h descending.
std::vector<ChainStep> factor_order(const IntMatZ& a);

/// Almost-diagonal factors whose product is [A] plus strictly lower terms.
/// With `nonneg`, every factor must have a nonnegative diagonal.
std::vector<AlmostDiag> chevalley_chain(const IntMatZ& a, bool nonneg = true);
/// Product of the chain of A, as basis terms.
const SchurTerms& chain_product(const IntMatZ& a);

/// [A][B] in the normalized basis.
const SchurTerms& basis_product(const IntMatZ& a, const IntMatZ& b);
SchurElem multiply(const SchurElem& x, const SchurElem& y);
/// g_{A,B,C} (e-basis) for all C; empty when co(A) != ro(B).
std::map<IntMatZ, LaurentInt> structure_constants(const IntMatZ& a, const IntMatZ& b, const Window& w, Entry r);

/// Drops memoized products (tests use this to exercise cold paths).
void clear_product_cache();

}  // namespace qschur
