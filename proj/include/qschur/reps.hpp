#pragma once

#include <map>
#include <string>
#include <vector>

#include "qschur/hecke.hpp"
#include "qschur/matrix.hpp"

namespace qschur {

/// Filling of a Young diagram; rows[i] lists the entries of row i + 1.
struct Tableau {
  Composition shape;
  std::vector<std::vector<int>> rows;

  /// Rows weakly increasing and columns strictly increasing.
  bool is_semistandard() const;
  /// Letter counts of the filling.
  Composition type() const;
  std::string str() const;
};

/// Partitions of r as compositions on 1..len, parts weakly decreasing, in reverse lexicographic order.
std::vector<Composition> partitions(Entry r);
bool is_partition(const Composition& mu);

/// Semistandard tableaux of shape mu and type lambda (letters are the indices of lambda).
std::vector<Tableau> ssyt_list(const Composition& mu, const Composition& lambda);
long long ssyt_count(const Composition& mu, const Composition& lambda);
/// Standard tableaux of shape mu.
long long syt_count(const Composition& mu);

/// Rank of z_mu H; throws std::logic_error if it disagrees with the standard tableau count.
std::size_t specht_dim(const Composition& mu);

/// Weight-space dimensions of S(window, r) z_mu for every lambda in Lambda(window, r).
/// A window narrower than the number of rows of mu is computed inside a wider one and restricted.
std::map<Composition, std::size_t> weyl_weight_dims(const Composition& mu, const Window& w);

struct DecompRow {
  Composition mu;
  std::size_t weyl_dim = 0;
  std::size_t specht_dim = 0;
};

struct DecompReport {
  Window window;
  Entry r = 0;
  std::vector<DecompRow> rows;
  /// sum over mu of dim W * dim S.
  long long total = 0;
  /// |window|^r.
  long long expected = 0;
  /// Weights whose refined count sum_mu #SSYT(mu, lambda) dim S differs from the number of words of weight lambda.
  std::vector<Composition> weight_failures;
  bool ok() const { return total == expected && weight_failures.empty(); }
  std::string str() const;
};

DecompReport tensor_decomp_check(const Window& w, Entry r);

}  // namespace qschur
