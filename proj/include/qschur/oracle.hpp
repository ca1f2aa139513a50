#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qschur/matrix.hpp"
#include "qschur/ring.hpp"

namespace qschur::oracle {

/// GF(q) by lookup tables; elements are 0..q-1 with 0 and 1 the field constants.
class FiniteField {
 public:
  static const FiniteField& get(int q);
  int q() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const { return inv_[a]; }

 private:
  explicit FiniteField(int q);
  int q_;
  std::vector<int> add_, mul_, neg_, inv_;
};

/// Scale guard; defaults may be overridden through QSCHUR_ORACLE_LIMITS="q=5,r=4,window=4".
struct Limits {
  int max_q = 4;
  int max_r = 3;
  int max_window = 3;
  static Limits from_env();
};

/// Subspace of F_q^r: a row-reduced basis and the set of its vectors (vectors coded base q).
struct Subspace {
  std::vector<std::vector<int>> basis;
  std::vector<std::uint64_t> members;
  int dim = 0;
};

/// eta-step flag V_lo <= ... <= V_hi = F_q^r.
struct Flag {
  Window window;
  std::vector<Subspace> steps;
  const Subspace& at(int i) const { return steps[i - window.lo]; }
};

/// All subspaces of F_q^r of dimension d, in row-echelon generation order.
std::vector<Subspace> enum_subspaces(int q, int r, int d);
long long count_subspaces(int q, int r, int d);
/// Flags on the window whose successive quotients have the given dimensions.
std::vector<Flag> enum_flags(const Window& w, const Composition& steps, int q, int r);

IntMatZ orbit_invariant(const Flag& f, const Flag& g, int q);
std::pair<Flag, Flag> canonical_pair(const IntMatZ& c, const Window& w, int q);
/// Image of a flag under a linear map given by its matrix (rows = images of basis vectors).
Flag transform(const Flag& f, const std::vector<std::vector<int>>& g, int q);

/// #{f : (f1, f) in O_A, (f, f2) in O_B} for a fixed (f1, f2) in O_C.
long long g_count(const IntMatZ& a, const IntMatZ& b, const IntMatZ& c, const Window& w, int q,
                  const Limits& limits = Limits::from_env());
/// Counts for every (A, B) at once, for fixed C and middle step sizes.
std::map<std::pair<IntMatZ, IntMatZ>, long long> g_count_table(const IntMatZ& c, const Composition& middle,
                                                               const Window& w, int q,
                                                               const Limits& limits = Limits::from_env());
/// Interpolates g_{A,B,C} as a polynomial in v^2 from counts at the sample field sizes.
/// Uses d_A + d_B + 1 points and validates on the next one.
LaurentInt g_interpolate(const IntMatZ& a, const IntMatZ& b, const IntMatZ& c, const Window& w,
                         const std::vector<int>& q_samples, const Limits& limits = Limits::from_env());

}  // namespace qschur::oracle
