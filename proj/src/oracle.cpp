#include "qschur/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qschur::oracle {

namespace {

std::pair<int, int> prime_power(int q) {
  if (q < 2) throw std::invalid_argument("field size must be a prime power, got " + std::to_string(q));
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0, x = q;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  if (x != 1) throw std::invalid_argument("field size must be a prime power, got " + std::to_string(q));
  return {p, k};
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q), add_(q * q), mul_(q * q), neg_(q), inv_(q, 0) {
  auto [p, k] = prime_power(q);
  auto digits = [&](int a) {
    std::vector<int> d(k);
    for (int t = 0; t < k; ++t, a /= p) d[t] = a % p;
    return d;
  };
  auto code = [&](const std::vector<int>& d) {
    int a = 0;
    for (int t = k - 1; t >= 0; --t) a = a * p + d[t];
    return a;
  };
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      auto da = digits(a), db = digits(b);
      for (int t = 0; t < k; ++t) da[t] = (da[t] + db[t]) % p;
      add_[a * q + b] = code(da);
    }
  // Multiplication modulo the first monic polynomial of degree k that yields a field.
  for (int f = 0; f < q; ++f) {
    auto fd = digits(f);  // lower coefficients; leading coefficient 1 implied
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<int> prod(2 * k, 0);
        for (int s = 0; s < k; ++s)
          for (int t = 0; t < k; ++t) prod[s + t] = (prod[s + t] + da[s] * db[t]) % p;
        for (int deg = 2 * k - 1; deg >= k; --deg) {
          int c = prod[deg];
          if (c == 0) continue;
          prod[deg] = 0;
          for (int t = 0; t < k; ++t) prod[deg - k + t] = ((prod[deg - k + t] - c * fd[t]) % p + p) % p;
        }
        mul_[a * q + b] = code(std::vector<int>(prod.begin(), prod.begin() + k));
      }
    bool field = true;
    for (int a = 1; a < q && field; ++a) {
      inv_[a] = 0;
      for (int b = 1; b < q; ++b)
        if (mul_[a * q + b] == 1) inv_[a] = b;
      field = inv_[a] != 0;
    }
    if (field) break;
    if (f == q - 1) throw std::logic_error("no irreducible polynomial found");
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (add_[a * q + b] == 0) neg_[a] = b;
}

const FiniteField& FiniteField::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) slot.reset(new FiniteField(q));
  return *slot;
}

Limits Limits::from_env() {
  Limits l;
  const char* env = std::getenv("QSCHUR_ORACLE_LIMITS");
  if (!env) return l;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    int val = std::stoi(item.substr(eq + 1));
    if (key == "q") l.max_q = val;
    if (key == "r") l.max_r = val;
    if (key == "window") l.max_window = val;
  }
  return l;
}

namespace {

struct Space {
  const FiniteField& field;
  int r;
  int count;  // q^r
  std::vector<int> qpow;

  Space(int q, int r_) : field(FiniteField::get(q)), r(r_), count(1) {
    for (int t = 0; t <= r; ++t) {
      qpow.push_back(count);
      if (t < r) count *= q;
    }
  }
  int words() const { return (count + 63) / 64; }
  int coord(int x, int t) const { return (x / qpow[t]) % field.q(); }
  int encode(const std::vector<int>& v) const {
    int x = 0;
    for (int t = r - 1; t >= 0; --t) x = x * field.q() + v[t];
    return x;
  }
  std::vector<int> decode(int x) const {
    std::vector<int> v(r);
    for (int t = 0; t < r; ++t, x /= field.q()) v[t] = x % field.q();
    return v;
  }
  int dim_of(int size) const {
    int d = 0;
    while (qpow[d] != size) ++d;
    return d;
  }

  std::vector<std::uint64_t> span(const std::vector<std::vector<int>>& basis) const {
    std::vector<std::uint64_t> bits(words(), 0);
    std::vector<std::vector<int>> vecs{std::vector<int>(r, 0)};
    for (const auto& b : basis) {
      std::vector<std::vector<int>> next;
      for (const auto& v : vecs)
        for (int c = 0; c < field.q(); ++c) {
          std::vector<int> w = v;
          for (int t = 0; t < r; ++t) w[t] = field.add(w[t], field.mul(c, b[t]));
          next.push_back(std::move(w));
        }
      vecs = std::move(next);
    }
    for (const auto& v : vecs) {
      int x = encode(v);
      bits[x / 64] |= std::uint64_t{1} << (x % 64);
    }
    return bits;
  }

  Subspace make(std::vector<std::vector<int>> basis) const {
    Subspace s;
    s.basis = rref(std::move(basis));
    s.dim = static_cast<int>(s.basis.size());
    s.members = span(s.basis);
    return s;
  }

  std::vector<std::vector<int>> rref(std::vector<std::vector<int>> m) const {
    size_t row = 0;
    for (int col = 0; col < r && row < m.size(); ++col) {
      size_t piv = row;
      while (piv < m.size() && m[piv][col] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[row], m[piv]);
      int inv = field.inv(m[row][col]);
      for (auto& x : m[row]) x = field.mul(inv, x);
      for (size_t o = 0; o < m.size(); ++o) {
        if (o == row || m[o][col] == 0) continue;
        int c = field.neg(m[o][col]);
        for (int t = 0; t < r; ++t) m[o][t] = field.add(m[o][t], field.mul(c, m[row][t]));
      }
      ++row;
    }
    m.resize(row);
    return m;
  }

  int inter_dim(const Subspace& a, const Subspace& b) const {
    int n = 0;
    for (size_t k = 0; k < a.members.size(); ++k) n += std::popcount(a.members[k] & b.members[k]);
    return dim_of(n);
  }
};

bool contained(const Subspace& a, const Subspace& b) {
  for (size_t k = 0; k < a.members.size(); ++k)
    if (a.members[k] & ~b.members[k]) return false;
  return true;
}

void check_limits(int q, int r, const Window& w, const Limits& limits) {
  if (q > limits.max_q || r > limits.max_r || w.size() > limits.max_window)
    throw std::out_of_range("oracle scale guard exceeded (q=" + std::to_string(q) + ", r=" + std::to_string(r) +
                            ", window=" + w.str() + "); override with QSCHUR_ORACLE_LIMITS");
}

}  // namespace

std::vector<Subspace> enum_subspaces(int q, int r, int d) {
  Space sp(q, r);
  std::vector<Subspace> out;
  if (d < 0 || d > r) return out;
  std::vector<int> pivots(d);
  std::function<void(int, int)> choose = [&](int k, int from) {
    if (k == d) {
      std::vector<std::pair<int, int>> free;  // (row, col)
      for (int t = 0; t < d; ++t)
        for (int c = pivots[t] + 1; c < r; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(t, c);
      std::vector<int> vals(free.size(), 0);
      while (true) {
        std::vector<std::vector<int>> basis(d, std::vector<int>(r, 0));
        for (int t = 0; t < d; ++t) basis[t][pivots[t]] = 1;
        for (size_t f = 0; f < free.size(); ++f) basis[free[f].first][free[f].second] = vals[f];
        Subspace s;
        s.basis = basis;
        s.dim = d;
        s.members = sp.span(basis);
        out.push_back(std::move(s));
        size_t f = 0;
        while (f < vals.size() && ++vals[f] == q) vals[f++] = 0;
        if (f == vals.size()) break;
      }
      return;
    }
    for (int c = from; c < r; ++c) {
      pivots[k] = c;
      choose(k + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

long long count_subspaces(int q, int r, int d) { return static_cast<long long>(enum_subspaces(q, r, d).size()); }

std::vector<Flag> enum_flags(const Window& w, const Composition& steps, int q, int r) {
  std::vector<Flag> out;
  if (!steps.supported_in(w) || !steps.is_nonneg() || steps.sum() != r) return out;
  std::vector<int> dims;
  int acc = 0;
  for (int i = w.lo; i <= w.hi; ++i) dims.push_back(acc += static_cast<int>(steps[i]));
  std::map<int, std::vector<Subspace>> by_dim;
  for (int d : dims)
    if (!by_dim.count(d)) by_dim[d] = enum_subspaces(q, r, d);
  std::vector<Subspace> chain(w.size());
  chain.back() = by_dim[r].front();
  std::function<void(int)> rec = [&](int k) {
    if (k < 0) {
      out.push_back(Flag{w, chain});
      return;
    }
    for (const auto& s : by_dim[dims[k]])
      if (contained(s, chain[k + 1])) {
        chain[k] = s;
        rec(k - 1);
      }
  };
  rec(w.size() - 2);
  return out;
}

IntMatZ orbit_invariant(const Flag& f, const Flag& g, int q) {
  if (!(f.window == g.window)) throw std::invalid_argument("orbit_invariant: window mismatch");
  int r = f.steps.back().dim;
  Space sp(q, r);
  const Window& w = f.window;
  // dim(V_{i-1} + V_i n V'_j) = dim V_{i-1} + dim(V_i n V'_j) - dim(V_{i-1} n V'_j)
  auto dim_sum = [&](int i, int j) {
    if (j < w.lo) return i > w.lo ? f.at(i - 1).dim : 0;
    int prev = i > w.lo ? f.at(i - 1).dim : 0;
    int prev_cap = i > w.lo ? sp.inter_dim(f.at(i - 1), g.at(j)) : 0;
    return prev + sp.inter_dim(f.at(i), g.at(j)) - prev_cap;
  };
  IntMatZ a;
  for (int i = w.lo; i <= w.hi; ++i)
    for (int j = w.lo; j <= w.hi; ++j) a.set(i, j, dim_sum(i, j) - dim_sum(i, j - 1));
  return a;
}

std::pair<Flag, Flag> canonical_pair(const IntMatZ& c, const Window& w, int q) {
  if (!c.is_nonneg() || !c.supported_in(w)) throw std::invalid_argument("canonical_pair: need C in Xi(window, r)");
  int r = static_cast<int>(stats(c).sigma);
  Space sp(q, r);
  std::vector<std::pair<int, int>> cell_of;  // coordinate -> (row, col)
  for (const auto& cell : c.cells())
    for (Entry k = 0; k < cell.a; ++k) cell_of.emplace_back(cell.i, cell.j);
  auto coordinate_span = [&](auto pred) {
    std::vector<std::vector<int>> basis;
    for (int t = 0; t < r; ++t)
      if (pred(cell_of[t])) {
        std::vector<int> e(r, 0);
        e[t] = 1;
        basis.push_back(e);
      }
    return sp.make(basis);
  };
  Flag f1{w, {}}, f2{w, {}};
  for (int i = w.lo; i <= w.hi; ++i) {
    f1.steps.push_back(coordinate_span([&](auto rc) { return rc.first <= i; }));
    f2.steps.push_back(coordinate_span([&](auto rc) { return rc.second <= i; }));
  }
  if (!(orbit_invariant(f1, f2, q) == c)) throw std::logic_error("canonical_pair: invariant mismatch for " + c.str());
  return {f1, f2};
}

Flag transform(const Flag& f, const std::vector<std::vector<int>>& g, int q) {
  int r = static_cast<int>(g.size());
  Space sp(q, r);
  Flag out{f.window, {}};
  for (const auto& s : f.steps) {
    std::vector<std::vector<int>> img;
    for (const auto& b : s.basis) {
      std::vector<int> y(r, 0);
      for (int t = 0; t < r; ++t)
        for (int u = 0; u < r; ++u) y[u] = sp.field.add(y[u], sp.field.mul(b[t], g[t][u]));
      img.push_back(y);
    }
    out.steps.push_back(sp.make(img));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> random_invertible(int q, int r, std::mt19937& rng) {
  Space sp(q, r);
  std::uniform_int_distribution<int> d(0, q - 1);
  while (true) {
    std::vector<std::vector<int>> g(r, std::vector<int>(r));
    for (auto& row : g)
      for (auto& x : row) x = d(rng);
    if (static_cast<int>(sp.rref(g).size()) == r) return g;
  }
}

long long count_between(const IntMatZ& a, const IntMatZ& b, const Flag& f1, const Flag& f2,
                        const std::vector<Flag>& middles, int q) {
  long long n = 0;
  for (const auto& f : middles)
    if (orbit_invariant(f1, f, q) == a && orbit_invariant(f, f2, q) == b) ++n;
  return n;
}

}  // namespace

long long g_count(const IntMatZ& a, const IntMatZ& b, const IntMatZ& c, const Window& w, int q,
                  const Limits& limits) {
  int r = static_cast<int>(stats(c).sigma);
  check_limits(q, r, w, limits);
  for (const auto* m : {&a, &b, &c})
    if (!m->is_nonneg() || !m->supported_in(w) || stats(*m).sigma != r)
      throw std::invalid_argument("g_count: matrices must lie in Xi(window, r)");
  if (!(co(a) == ro(b)) || !(ro(c) == ro(a)) || !(co(c) == co(b))) return 0;
  auto [f1, f2] = canonical_pair(c, w, q);
  auto middles = enum_flags(w, co(a), q, r);
  long long n = count_between(a, b, f1, f2, middles, q);
  std::mt19937 rng(static_cast<unsigned>(q * 1000 + r));
  auto g = random_invertible(q, r, rng);
  Flag h1 = transform(f1, g, q), h2 = transform(f2, g, q);
  if (count_between(a, b, h1, h2, middles, q) != n)
    throw std::logic_error("g_count depends on the chosen pair in O_C");
  return n;
}

std::map<std::pair<IntMatZ, IntMatZ>, long long> g_count_table(const IntMatZ& c, const Composition& middle,
                                                               const Window& w, int q, const Limits& limits) {
  int r = static_cast<int>(stats(c).sigma);
  check_limits(q, r, w, limits);
  auto [f1, f2] = canonical_pair(c, w, q);
  std::map<std::pair<IntMatZ, IntMatZ>, long long> out;
  for (const auto& f : enum_flags(w, middle, q, r)) ++out[{orbit_invariant(f1, f, q), orbit_invariant(f, f2, q)}];
  return out;
}

LaurentInt g_interpolate(const IntMatZ& a, const IntMatZ& b, const IntMatZ& c, const Window& w,
                         const std::vector<int>& q_samples, const Limits& limits) {
  size_t n = static_cast<size_t>(d_twist(a) + d_twist(b) + 1);
  if (q_samples.size() < n + 1)
    throw std::invalid_argument("g_interpolate: need " + std::to_string(n + 1) + " field sizes");
  std::vector<BigRat> xs, ys;
  for (size_t k = 0; k <= n; ++k) {
    xs.emplace_back(q_samples[k]);
    ys.emplace_back(g_count(a, b, c, w, q_samples[k], limits));
  }
  // Newton divided differences on the first n points, expanded to monomial coefficients.
  std::vector<BigRat> dd(ys.begin(), ys.begin() + n);
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
  std::vector<BigRat> coef(n, BigRat(0));
  for (size_t k = n; k-- > 0;) {
    // coef = coef * (x - xs[k]) + dd[k]
    std::vector<BigRat> next(n, BigRat(0));
    for (size_t t = 0; t + 1 < n; ++t) next[t + 1] += coef[t];
    for (size_t t = 0; t < n; ++t) next[t] -= coef[t] * xs[k];
    next[0] += dd[k];
    coef = std::move(next);
  }
  LaurentInt out;
  for (size_t t = 0; t < n; ++t) {
    if (denominator(coef[t]) != 1) throw std::logic_error("degree bound too small: non-integral interpolant");
    out += LaurentInt::monomial(static_cast<int>(2 * t), numerator(coef[t]));
  }
  if (eval_q(out, q_samples[n]) != ys[n]) throw std::logic_error("degree bound too small: validation point differs");
  return out;
}

}  // namespace qschur::oracle
