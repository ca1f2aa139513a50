#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace qschur {

using Entry = std::int64_t;

/// Consecutive segment [lo, hi] of Z, or all of Z.
struct Window {
  int lo = 1;
  int hi = 1;
  bool infinite = false;

  Window() = default;
  Window(int m, int n);
  static Window all();
  /// Parses "m:n".
  static Window parse(std::string_view text);

  int size() const { return hi - lo + 1; }
  bool contains(int i) const { return infinite || (lo <= i && i <= hi); }
  bool contains(const Window& w) const { return infinite || (lo <= w.lo && w.hi <= hi); }
  std::string str() const;
  friend bool operator==(const Window&, const Window&) = default;
};

/// Finitely supported integer sequence indexed by Z; zero parts are not stored.
class Composition {
 public:
  using Part = std::pair<int, Entry>;

  Composition() = default;
  Composition(std::initializer_list<Part> parts);
  /// Consecutive parts starting at index `first`.
  static Composition from_sequence(int first, const std::vector<Entry>& seq);
  static Composition unit(int i) { return Composition{{i, 1}}; }
  /// e_h - e_{h+1}
  static Composition alpha(int h);
  /// -e_h - e_{h+1}
  static Composition beta(int h);
  /// 1 at positions 1..r
  static Composition varpi(int r);

  const std::vector<Part>& parts() const { return parts_; }
  Entry operator[](int i) const;
  void set(int i, Entry x);
  void add(int i, Entry x) { set(i, (*this)[i] + x); }

  Entry sum() const;
  bool is_zero() const { return parts_.empty(); }
  bool is_nonneg() const;
  bool supported_in(const Window& w) const;
  /// Pointwise <=.
  bool leq(const Composition& o) const;
  Entry dot(const Composition& o) const;

  Composition& operator+=(const Composition& o);
  Composition& operator-=(const Composition& o);
  Composition operator-() const;
  friend Composition operator+(Composition a, const Composition& b) { return a += b; }
  friend Composition operator-(Composition a, const Composition& b) { return a -= b; }
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

  /// Values on the window, in index order.
  std::vector<Entry> on(const Window& w) const;
  std::string str() const;

 private:
  std::vector<Part> parts_;
};

/// Finite-support integer matrix indexed by Z x Z; zero entries are not stored.
class IntMatZ {
 public:
  struct Cell {
    int i;
    int j;
    Entry a;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
  };

  IntMatZ() = default;
  IntMatZ(std::initializer_list<Cell> cells);
  static IntMatZ unit(int i, int j, Entry a = 1);
  static IntMatZ diag(const Composition& d);
  static IntMatZ identity(const Window& w);

  const std::vector<Cell>& cells() const { return cells_; }
  Entry operator()(int i, int j) const;
  void set(int i, int j, Entry x);
  void add(int i, int j, Entry x) { set(i, j, (*this)(i, j) + x); }

  bool is_zero() const { return cells_.empty(); }
  bool is_nonneg() const;
  bool is_diagonal() const;
  bool offdiag_nonneg() const;
  bool has_zero_diagonal() const;
  /// Smallest window containing every row and column index (empty matrix: nothing).
  std::optional<Window> hull() const;
  bool supported_in(const Window& w) const;

  IntMatZ transpose() const;
  IntMatZ& operator+=(const IntMatZ& o);
  IntMatZ& operator-=(const IntMatZ& o);
  friend IntMatZ operator+(IntMatZ a, const IntMatZ& b) { return a += b; }
  friend IntMatZ operator-(IntMatZ a, const IntMatZ& b) { return a -= b; }
  friend IntMatZ operator*(Entry c, const IntMatZ& a);
  friend bool operator==(const IntMatZ&, const IntMatZ&) = default;
  friend auto operator<=>(const IntMatZ&, const IntMatZ&) = default;

  /// Shorthand rendering, e.g. "E12+E21-E22"; the zero matrix renders as "0".
  std::string str() const;

 private:
  std::vector<Cell> cells_;  // sorted by (i, j)
};

struct MatStats {
  Entry sigma = 0;
  Entry deg = 0;
  Entry norm = 0;
  Entry d = 0;
  friend bool operator==(const MatStats&, const MatStats&) = default;
};

enum class Order { less, equal, incomparable, greater };

Composition ro(const IntMatZ& a);
Composition co(const IntMatZ& a);
MatStats stats(const IntMatZ& a);
Entry d_twist(const IntMatZ& a);
Entry norm(const IntMatZ& a);

/// Corner sum sigma_{i,j}: upper-right block for i < j, lower-left block for i > j.
Entry corner_sum(const IntMatZ& a, int i, int j);
/// Compares b against a in the corner-sum partial order.
Order preceq(const IntMatZ& b, const IntMatZ& a);
bool strictly_below(const IntMatZ& b, const IntMatZ& a);
/// Linear extension of the corner-sum order: norm first, then entries.
bool report_before(const IntMatZ& a, const IntMatZ& b);

struct PmSplit {
  IntMatZ plus;
  IntMatZ zero;
  IntMatZ minus;
};
PmSplit split_pm(const IntMatZ& a);
Composition bold_sigma(const IntMatZ& a);
IntMatZ a_shift(const IntMatZ& a, Entry shift, const Window& w);
/// Drops entries outside the window.
IntMatZ restrict_to(const IntMatZ& a, const Window& w);

/// Lambda(w, r), optionally bounded pointwise; lexicographically decreasing order.
std::vector<Composition> enum_compositions(const Window& w, Entry r,
                                           const std::optional<Composition>& bound = std::nullopt);
/// Xi(w, r): nonnegative matrices on w with entry sum r.
std::vector<IntMatZ> enum_matrices(const Window& w, Entry r);
/// Nonnegative matrices with prescribed row and column sums.
std::vector<IntMatZ> enum_matrices(const Composition& rows, const Composition& cols);
/// Xi^pm(w) with sigma(A) <= max_sigma.
std::vector<IntMatZ> enum_offdiag(const Window& w, Entry max_sigma);

/// Matrix literal: JSON triple list "[[i,j,a],...]" or shorthand "E12", "2E(1,3)", "D(1,1)", "E12+D(0,1)".
/// Shorthand D(x,y,...) places the diagonal starting at `diag_start`.
IntMatZ parse_matrix(std::string_view text, int diag_start = 1);
/// Composition literal: JSON pair list "[[i,x],...]" or "(2,1)" / "2,1" starting at index `start`.
Composition parse_composition(std::string_view text, int start = 1);
std::string matrix_json(const IntMatZ& a);

}  // namespace qschur
