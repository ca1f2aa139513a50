#include "qschur/rank.hpp"

#include <stdexcept>
#include <utility>

namespace qschur {

namespace {

// Fraction-free row echelon form in place; returns the rank and tracks row swaps.
std::size_t bareiss(std::vector<LaurentRow>& a, bool& odd_swaps) {
  odd_swaps = false;
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  LaurentInt prev(1);
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < a.size(); ++c) {
    std::size_t p = k;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    if (p != k) {
      std::swap(a[p], a[k]);
      odd_swaps = !odd_swaps;
    }
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[k][c] * a[i][j] - a[i][c] * a[k][j]).exact_div(prev);
      a[i][c] = LaurentInt();
    }
    prev = a[k][c];
    ++k;
  }
  return k;
}

}  // namespace

std::size_t rational_rank(std::vector<std::vector<BigRat>> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < a.size(); ++c) {
    std::size_t p = k;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      BigRat f = a[i][c] / a[k][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[k][j];
    }
    ++k;
  }
  return k;
}

std::size_t laurent_rank(std::vector<LaurentRow> rows) {
  std::vector<std::vector<BigRat>> at3;
  at3.reserve(rows.size());
  for (const auto& row : rows) {
    auto& out = at3.emplace_back();
    for (const auto& x : row) out.push_back(x.eval(BigRat(3)));
  }
  bool odd = false;
  std::size_t generic = bareiss(rows, odd);
  std::size_t special = rational_rank(std::move(at3));
  if (generic != special) throw std::logic_error("laurent_rank: generic rank differs from the rank at v = 3");
  return generic;
}

LaurentInt laurent_det(std::vector<LaurentRow> rows) {
  for (const auto& row : rows)
    if (row.size() != rows.size()) throw std::invalid_argument("laurent_det: matrix is not square");
  if (rows.empty()) return 1;
  bool odd = false;
  if (bareiss(rows, odd) < rows.size()) return LaurentInt();
  LaurentInt d = rows.back().back();
  return odd ? -d : d;
}

}  // namespace qschur
