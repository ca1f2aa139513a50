#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qschur/matrix.hpp"
#include "qschur/ring.hpp"
#include "qschur/schur.hpp"

namespace qschur {

/// Permutation of {1..r} in one-line notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line);
  static Perm identity(int r);
  /// The adjacent transposition (i, i+1).
  static Perm simple(int r, int i);
  /// All of S_r in lexicographic order.
  static std::vector<Perm> all(int r);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int k) const { return w_[k - 1]; }
  const std::vector<int>& one_line() const { return w_; }
  int length() const { return len_; }
  Perm inverse() const;
  /// (u * w)(k) = u(w(k)).
  friend Perm operator*(const Perm& u, const Perm& w);
  /// i_1..i_k with w = s_{i_1} ... s_{i_k} and k = length.
  std::vector<int> reduced_word() const;
  friend bool operator==(const Perm& a, const Perm& b) { return a.w_ == b.w_; }
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.w_ <=> b.w_; }
  std::string str() const;

 private:
  std::vector<int> w_;
  int len_ = 0;
};

enum class HeckeBasis { script, capital };

/// Element of the Hecke algebra of S_r; stored on the basis script-T_w, with T_w = v^{l(w)} script-T_w.
class HeckeElem {
 public:
  explicit HeckeElem(int r) : r_(r) {}
  static HeckeElem one(int r);
  static HeckeElem script(const Perm& w, const LaurentInt& c = 1);
  static HeckeElem capital(const Perm& w, const LaurentInt& c = 1);

  int degree() const { return r_; }
  const std::map<Perm, LaurentInt>& terms() const { return terms_; }
  /// Coefficients on the T_w basis.
  std::map<Perm, LaurentInt> capital_terms() const;
  bool is_zero() const { return terms_.empty(); }
  void add(const Perm& w, const LaurentInt& c);
  HeckeElem& operator+=(const HeckeElem& o);
  HeckeElem& operator-=(const HeckeElem& o);
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
  friend HeckeElem operator*(const LaurentInt& c, const HeckeElem& x);
  friend bool operator==(const HeckeElem& a, const HeckeElem& b) { return a.r_ == b.r_ && a.terms_ == b.terms_; }

  /// "(coeff)*T[w] + ..." on the chosen basis; script basis renders as t[w].
  std::string str(HeckeBasis basis = HeckeBasis::capital) const;

 private:
  int r_;
  std::map<Perm, LaurentInt> terms_;
};

HeckeElem hecke_mult(const HeckeElem& x, const HeckeElem& y);

using Word = std::vector<int>;

/// Element of the tensor space over the window: words of length r in the window letters.
class TensorElem {
 public:
  TensorElem(Window w, int r) : window_(w), r_(r) {}
  static TensorElem basis(Window w, const Word& word, const LaurentInt& c = 1);

  const Window& window() const { return window_; }
  int degree() const { return r_; }
  const std::map<Word, LaurentInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentInt coeff(const Word& word) const;
  void add(const Word& word, const LaurentInt& c);
  TensorElem& operator+=(const TensorElem& o);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend bool operator==(const TensorElem& a, const TensorElem& b) {
    return a.window_ == b.window_ && a.r_ == b.r_ && a.terms_ == b.terms_;
  }
  std::string str() const;

 private:
  Window window_;
  int r_;
  std::map<Word, LaurentInt> terms_;
};

/// Right action by place permutations.
TensorElem tensor_act(const TensorElem& x, const HeckeElem& h);

/// Row sets R_i of the row-reading tableau of the composition.
std::map<int, std::vector<int>> row_sets(const Composition& lambda);
/// Minimal-length representatives of the double cosets S_lambda \ S_r / S_mu.
std::vector<Perm> double_reps(const Composition& lambda, const Composition& mu);
bool is_distinguished(const Composition& lambda, const Perm& d, const Composition& mu);

/// a_ij = |R^lambda_i n d R^mu_j|.
IntMatZ jmath(const Composition& lambda, const Perm& d, const Composition& mu);
/// Inverse of jmath on nonnegative matrices.
std::tuple<Composition, Perm, Composition> jmath_inv(const IntMatZ& a);

/// Sum of T_x over the Young subgroup (x_lambda) and its sign-twisted version (y_lambda).
HeckeElem x_element(const Composition& lambda);
HeckeElem y_element(const Composition& lambda);
/// lambda^t_i = #{j : lambda_j >= i}, i >= 1.
Composition transpose_partition(const Composition& lambda);
/// The representative in D_{mu, mu^t} whose conjugated Young subgroups meet trivially.
Perm w_element(const Composition& mu);
/// x_mu T_{w_mu} y_{mu^t}.
HeckeElem z_element(const Composition& mu);

/// The word i_1 <= ... <= i_r of weight lambda.
Word sorted_word(const Composition& lambda);
/// Letter counts of a word.
Composition word_weight(const Word& word);
/// Action of K(window, r) on the tensor space of the same window.
TensorElem schur_on_tensor(const SchurElem& x, const TensorElem& t);

}  // namespace qschur
