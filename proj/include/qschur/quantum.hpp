#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qschur/matrix.hpp"
#include "qschur/ring.hpp"
#include "qschur/schur.hpp"

namespace qschur {

/// One generator token: E_h^(m), F_h^(m), K^j or [K_h; c over t].
struct GenToken {
  enum class Kind { e, f, k, kbinom };
  Kind kind = Kind::k;
  int h = 0;
  Entry m = 1;
  Composition j;
  Entry c = 0;
  int t = 0;

  static GenToken e(int h, Entry m = 1) { return {Kind::e, h, m, {}, 0, 0}; }
  static GenToken f(int h, Entry m = 1) { return {Kind::f, h, m, {}, 0, 0}; }
  static GenToken k(Composition j) { return {Kind::k, 0, 1, std::move(j), 0, 0}; }
  static GenToken kbinom(int h, Entry c, int t) { return {Kind::kbinom, h, 1, {}, c, t}; }

  std::string str() const;
  friend bool operator==(const GenToken&, const GenToken&) = default;
};

/// Word in the generators; text form "E1^(2) K[1:1,2:-1] F0 KB(1;0;2)".
struct GenWord {
  std::vector<GenToken> tokens;

  /// Throws std::invalid_argument on a malformed token.
  static GenWord parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const GenWord&, const GenWord&) = default;
};

/// E^(A+) K^j F^(A-) for A with zero diagonal.
GenWord pbw_word(const IntMatZ& a, const Composition& j = {});

using VKey = std::pair<IntMatZ, Composition>;

/// Finite combination of the elements A(j, r) = sum_lambda v^{lambda.j} [A + diag(lambda)].
class VElem {
 public:
  explicit VElem(Entry r) : r_(r) {}
  static VElem basis(const IntMatZ& a, const Composition& j, Entry r, const LaurentFrac& c = 1);

  Entry degree() const { return r_; }
  const std::map<VKey, LaurentFrac>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Keys with entry sum above r vanish and are dropped.
  void add(const IntMatZ& a, const Composition& j, const LaurentFrac& c);
  friend bool operator==(const VElem& a, const VElem& b) { return a.r_ == b.r_ && a.terms_ == b.terms_; }
  std::string str() const;

 private:
  Entry r_;
  std::map<VKey, LaurentFrac> terms_;
};

/// Left action of K^j, E_h or F_h (divided power 1) by the closed generator formulas.
VElem act_gen(const GenToken& g, const VElem& x);

/// Restriction of the completions lambda to the window, as an element of K(window, r).
SchurElem project_window(const VElem& x, const Window& w);

/// Image of a single generator in K(window, r).
SchurElem generator_image(const GenToken& g, const Window& w, Entry r);
/// Left-to-right product of generator images; the empty word is the identity.
SchurElem evaluate_word(const GenWord& word, const Window& w, Entry r);

/// e^(A+) [diag(bold sigma(A))] f^(A-).
SchurElem m_monomial(const IntMatZ& a, const Window& w, Entry r);

/// Sum of [diag(mu)] over mu in Lambda(window, r) agreeing with lambda on [-n, n-1].
SchurElem h_element(const Composition& lambda, int n, const Window& w, Entry r);

}  // namespace qschur
