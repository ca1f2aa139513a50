#include "qschur/reps.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "qschur/rank.hpp"

namespace qschur {

namespace {

std::vector<Entry> row_lengths(const Composition& mu) {
  if (!is_partition(mu)) throw std::invalid_argument("not a partition: " + mu.str());
  std::vector<Entry> out;
  for (const auto& [i, x] : mu.parts()) out.push_back(x);
  return out;
}

std::string seq_str(const std::vector<Entry>& xs) {
  std::string out = "(";
  for (size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out + ")";
}

long long factorial(Entry n) {
  long long f = 1;
  for (Entry k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

bool is_partition(const Composition& mu) {
  int expect = 1;
  Entry prev = 0;
  for (const auto& [i, x] : mu.parts()) {
    if (i != expect++ || x <= 0 || (i > 1 && x > prev)) return false;
    prev = x;
  }
  return true;
}

bool Tableau::is_semistandard() const {
  auto len = row_lengths(shape);
  if (rows.size() != len.size()) return false;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Entry>(rows[i].size()) != len[i]) return false;
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j - 1] > rows[i][j]) return false;
      if (i > 0 && rows[i - 1][j] >= rows[i][j]) return false;
    }
  }
  return true;
}

Composition Tableau::type() const {
  Composition out;
  for (const auto& row : rows)
    for (int x : row) out.add(x, 1);
  return out;
}

std::string Tableau::str() const {
  std::string out;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out += "/";
    for (size_t j = 0; j < rows[i].size(); ++j) out += (j ? " " : "") + std::to_string(rows[i][j]);
  }
  return out;
}

std::vector<Composition> partitions(Entry r) {
  std::vector<Composition> out;
  std::vector<Entry> cur;
  std::function<void(Entry, Entry)> rec = [&](Entry left, Entry cap) {
    if (left == 0) {
      out.push_back(Composition::from_sequence(1, cur));
      return;
    }
    for (Entry x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  if (r < 0) throw std::invalid_argument("partitions: negative degree");
  rec(r, r);
  return out;
}

std::vector<Tableau> ssyt_list(const Composition& mu, const Composition& lambda) {
  auto len = row_lengths(mu);
  if (!lambda.is_nonneg()) throw std::invalid_argument("ssyt: negative weight");
  if (lambda.sum() != mu.sum()) throw std::invalid_argument("ssyt: degree mismatch");
  std::vector<Tableau> out;
  Tableau t{mu, std::vector<std::vector<int>>(len.size())};
  const auto& letters = lambda.parts();
  // Letters go in increasing order, each as a horizontal strip.
  std::function<void(size_t)> place = [&](size_t li) {
    if (li == letters.size()) {
      out.push_back(t);
      return;
    }
    auto [letter, count] = letters[li];
    std::vector<Entry> before;
    for (const auto& row : t.rows) before.push_back(static_cast<Entry>(row.size()));
    std::function<void(size_t, Entry)> strip = [&](size_t row, Entry left) {
      if (left == 0) {
        place(li + 1);
        return;
      }
      if (row == len.size()) return;
      Entry have = before[row];
      Entry cap = len[row] - have;
      if (row > 0) cap = std::min(cap, before[row - 1] - have);
      for (Entry k = std::min(cap, left); k >= 0; --k) {
        t.rows[row].insert(t.rows[row].end(), k, letter);
        strip(row + 1, left - k);
        t.rows[row].resize(have);
      }
    };
    strip(0, count);
  };
  place(0);
  return out;
}

long long ssyt_count(const Composition& mu, const Composition& lambda) {
  return static_cast<long long>(ssyt_list(mu, lambda).size());
}

long long syt_count(const Composition& mu) { return ssyt_count(mu, Composition::varpi(static_cast<int>(mu.sum()))); }

std::size_t specht_dim(const Composition& mu) {
  row_lengths(mu);
  int r = static_cast<int>(mu.sum());
  auto perms = Perm::all(r);
  HeckeElem z = z_element(mu);
  std::vector<LaurentRow> rows;
  for (const auto& w : perms) {
    HeckeElem zw = hecke_mult(z, HeckeElem::capital(w));
    auto& row = rows.emplace_back();
    for (const auto& u : perms) {
      auto it = zw.terms().find(u);
      row.push_back(it == zw.terms().end() ? LaurentInt() : it->second);
    }
  }
  std::size_t rank = laurent_rank(std::move(rows));
  if (static_cast<long long>(rank) != syt_count(mu))
    throw std::logic_error("specht_dim: rank disagrees with the standard tableau count for " + mu.str());
  return rank;
}

std::map<Composition, std::size_t> weyl_weight_dims(const Composition& mu, const Window& w) {
  auto len = row_lengths(mu);
  if (w.infinite) throw std::invalid_argument("weyl_weight_dims: window must be finite");
  Entry r = mu.sum();
  std::map<Composition, std::size_t> out;
  if (r == 0) {
    out[Composition()] = 1;
    return out;
  }
  Window big(std::min(w.lo, 1), std::max(w.hi, static_cast<int>(len.size())));
  Perm wmu = w_element(mu);
  HeckeElem tail = hecke_mult(HeckeElem::capital(wmu), y_element(transpose_partition(mu)));
  TensorElem z = tensor_act(TensorElem::basis(big, sorted_word(mu)), tail);
  for (const auto& lambda : enum_compositions(w, r)) {
    std::vector<TensorElem> vecs;
    std::set<Word> words;
    for (const auto& a : enum_matrices(lambda, mu)) {
      TensorElem img = schur_on_tensor(SchurElem::basis(big, a), z);
      for (const auto& [word, c] : img.terms()) words.insert(word);
      vecs.push_back(std::move(img));
    }
    std::vector<LaurentRow> rows;
    for (const auto& v : vecs) {
      auto& row = rows.emplace_back();
      for (const auto& word : words) row.push_back(v.coeff(word));
    }
    out[lambda] = words.empty() ? 0 : laurent_rank(std::move(rows));
  }
  return out;
}

DecompReport tensor_decomp_check(const Window& w, Entry r) {
  if (w.infinite) throw std::invalid_argument("tensor_decomp_check: window must be finite");
  DecompReport rep;
  rep.window = w;
  rep.r = r;
  auto parts = partitions(r);
  std::vector<std::size_t> specht;
  for (const auto& mu : parts) {
    DecompRow row{mu, 0, specht_dim(mu)};
    for (const auto& [lambda, d] : weyl_weight_dims(mu, w)) row.weyl_dim += d;
    rep.total += static_cast<long long>(row.weyl_dim * row.specht_dim);
    specht.push_back(row.specht_dim);
    rep.rows.push_back(row);
  }
  rep.expected = 1;
  for (Entry k = 0; k < r; ++k) rep.expected *= w.size();
  for (const auto& lambda : enum_compositions(w, r)) {
    long long refined = 0;
    for (size_t k = 0; k < parts.size(); ++k)
      refined += ssyt_count(parts[k], lambda) * static_cast<long long>(specht[k]);
    long long words = factorial(r);
    for (const auto& [i, x] : lambda.parts()) words /= factorial(x);
    if (refined != words) rep.weight_failures.push_back(lambda);
  }
  return rep;
}

std::string DecompReport::str() const {
  std::string out = "window " + window.str() + ", r=" + std::to_string(r) + "\n";
  for (const auto& row : rows) {
    out += "  mu=" + seq_str(row_lengths(row.mu)) + "  dim W=" + std::to_string(row.weyl_dim) +
           "  dim S=" + std::to_string(row.specht_dim) + "\n";
  }
  out += "  sum dim W * dim S = " + std::to_string(total) + ", |window|^r = " + std::to_string(expected) + "\n";
  for (const auto& lambda : weight_failures) out += "  refined count fails at weight " + seq_str(lambda.on(window)) + "\n";
  return out;
}

}  // namespace qschur
