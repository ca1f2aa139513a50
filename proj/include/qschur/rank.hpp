#pragma once

#include <cstddef>
#include <vector>

#include "qschur/ring.hpp"

namespace qschur {

using LaurentRow = std::vector<LaurentInt>;

/// Rank over Q(v) by fraction-free elimination; rechecked at v = 3 over Q (throws std::logic_error on mismatch).
std::size_t laurent_rank(std::vector<LaurentRow> rows);

/// Rank over Q by Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<BigRat>> rows);

/// Determinant of a square matrix over Z[v, v^-1] by fraction-free elimination.
LaurentInt laurent_det(std::vector<LaurentRow> rows);

}  // namespace qschur
