#pragma once

#include <map>
#include <string>

#include "qschur/matrix.hpp"
#include "qschur/ring.hpp"
#include "qschur/schur.hpp"

namespace qschur {

/// Keys are matrices with nonnegative off-diagonal entries; diagonal entries may be negative.
using StabTerms = std::map<IntMatZ, BiLaurent>;
/// Elements of the v' = 1 specialization K(infinity).
using KinfTerms = std::map<IntMatZ, LaurentInt>;

/// Element of the stabilized algebra over Z1 (coefficients in v and v').
class StabElem {
 public:
  StabElem() = default;
  explicit StabElem(StabTerms terms);
  static StabElem basis(const IntMatZ& a, const BiLaurent& c = 1);

  const StabTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BiLaurent coeff(const IntMatZ& a) const;
  void add(const IntMatZ& a, const BiLaurent& c);
  friend bool operator==(const StabElem& a, const StabElem& b) { return a.terms_ == b.terms_; }

  /// Coefficients at v' = v^{-a}.
  KinfTerms at_vpow(int a) const;
  KinfTerms at_one() const;
  std::string str() const;

 private:
  StabTerms terms_;
};

/// [B] * x with B almost diagonal, coefficients as polynomials in v'.
StabTerms stab_fundamental_left(const AlmostDiag& b, const StabTerms& x);
StabElem stab_fundamental_left(const AlmostDiag& b, const StabElem& x);

/// f_{A,B,C}(v, v') for all C; empty when co(A) != ro(B). Memoized.
const StabTerms& f_poly(const IntMatZ& a, const IntMatZ& b);

KinfTerms kinf_multiply(const KinfTerms& x, const KinfTerms& y);
std::string kinf_str(const KinfTerms& x);

/// [A] in K(window, r) when A is nonnegative with entry sum r, zero otherwise.
SchurElem dot_zeta(const IntMatZ& a, const Window& w, Entry r);

/// Smallest a with A + aI nonnegative on the window.
Entry min_shift(const IntMatZ& a, const Window& w);

void clear_stab_cache();

}  // namespace qschur
