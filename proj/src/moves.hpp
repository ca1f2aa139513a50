#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qschur/schur.hpp"

namespace qschur::detail {

/// Row entries as (column, entry) pairs in column order.
using Row = std::vector<std::pair<int, Entry>>;

Row row_of(const IntMatZ& a, int i);

/// Enumerates nu with |nu| = b and nu_k <= bound[k] over the bound's columns, moving nu from row h+1
/// to row h (upper) or from row h to row h+1 (lower). Calls fn(nonzero parts of nu, new key, v-exponent).
void for_each_move(const IntMatZ& a, int h, Direction dir, const Row& bound, Entry b,
                   const std::function<void(const Row&, const IntMatZ&, Entry)>& fn);

}  // namespace qschur::detail
