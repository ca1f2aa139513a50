#include "qschur/schur.hpp"

#include "moves.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace qschur {

SchurElem::SchurElem(Window w, Entry r, SchurTerms terms) : window_(w), r_(r) {
  for (auto& [a, c] : terms) add(a, c);
}

SchurElem SchurElem::basis(Window w, const IntMatZ& a, const LaurentInt& c) {
  SchurElem e(w, stats(a).sigma);
  e.add(a, c);
  return e;
}

SchurElem SchurElem::identity(Window w, Entry r) {
  SchurElem e(w, r);
  for (const auto& lam : enum_compositions(w, r)) e.add(IntMatZ::diag(lam), 1);
  return e;
}

void SchurElem::check_key(const IntMatZ& a) const {
  if (!a.is_nonneg() || !a.supported_in(window_) || stats(a).sigma != r_)
    throw std::invalid_argument("matrix " + a.str() + " is not in Xi(" + window_.str() + ", " + std::to_string(r_) +
                                ")");
}

LaurentInt SchurElem::coeff(const IntMatZ& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? LaurentInt() : it->second;
}

void SchurElem::add(const IntMatZ& a, const LaurentInt& c) {
  if (c.is_zero()) return;
  check_key(a);
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SchurElem& SchurElem::operator+=(const SchurElem& o) {
  if (!(o.window_ == window_) || o.r_ != r_) throw std::invalid_argument("window/degree mismatch");
  for (const auto& [a, c] : o.terms_) add(a, c);
  return *this;
}

SchurElem& SchurElem::operator-=(const SchurElem& o) {
  if (!(o.window_ == window_) || o.r_ != r_) throw std::invalid_argument("window/degree mismatch");
  for (const auto& [a, c] : o.terms_) add(a, -c);
  return *this;
}

SchurElem& SchurElem::operator*=(const LaurentInt& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, x] : terms_) x *= c;
  return *this;
}

std::string SchurElem::str() const {
  if (terms_.empty()) return "0";
  std::vector<IntMatZ> keys;
  for (const auto& [a, c] : terms_) keys.push_back(a);
  std::sort(keys.begin(), keys.end(), report_before);
  std::string out;
  for (const auto& a : keys) {
    if (!out.empty()) out += " + ";
    const LaurentInt& c = terms_.at(a);
    if (c == LaurentInt(1)) {
    } else if (c == LaurentInt(-1)) {
      out += "-";
    } else if (c.terms().size() == 1) {
      out += c.str() + "*";
    } else {
      out += "(" + c.str() + ")*";
    }
    out += "[" + a.str() + "]";
  }
  return out;
}

std::string SchurElem::json() const {
  nlohmann::json j;
  j["window"] = {window_.lo, window_.hi};
  j["r"] = r_;
  j["terms"] = nlohmann::json::array();
  for (const auto& [a, c] : terms_) j["terms"].push_back({nlohmann::json::parse(matrix_json(a)), c.str()});
  return j.dump();
}

SchurElem SchurElem::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  SchurElem e(Window(j.at("window").at(0).get<int>(), j.at("window").at(1).get<int>()), j.at("r").get<Entry>());
  for (const auto& t : j.at("terms"))
    e.add(parse_matrix(t.at(0).dump()), LaurentInt::parse(t.at(1).get<std::string>()));
  return e;
}

IntMatZ AlmostDiag::diagonal_part() const {
  IntMatZ d = base;
  if (dir == Direction::upper)
    d.add(h, h + 1, -b);
  else
    d.add(h + 1, h, -b);
  return d;
}

void AlmostDiag::validate(bool nonneg) const {
  IntMatZ d = diagonal_part();
  if (b < 0 || !d.is_diagonal() || (nonneg && !d.is_nonneg()))
    throw std::invalid_argument("not almost diagonal: " + base.str());
}

bool AlmostDiag::recognize(const IntMatZ& a, AlmostDiag& out) {
  const IntMatZ::Cell* off = nullptr;
  for (const auto& c : a.cells()) {
    if (c.i == c.j) continue;
    if (off || std::abs(c.i - c.j) != 1 || c.a < 0) return false;
    off = &c;
  }
  out.base = a;
  if (!off) {
    out.h = 0;
    out.b = 0;
    out.dir = Direction::upper;
  } else if (off->j == off->i + 1) {
    out.h = off->i;
    out.b = off->a;
    out.dir = Direction::upper;
  } else {
    out.h = off->j;
    out.b = off->a;
    out.dir = Direction::lower;
  }
  return true;
}

namespace {

void add_term(SchurTerms& out, const IntMatZ& key, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

}  // namespace

namespace detail {

Row row_of(const IntMatZ& a, int i) {
  Row out;
  for (const auto& c : a.cells())
    if (c.i == i) out.emplace_back(c.j, c.a);
  return out;
}

void for_each_move(const IntMatZ& a, int h, Direction dir, const Row& bound, Entry b,
                   const std::function<void(const Row&, const IntMatZ&, Entry)>& fn) {
  const bool up = dir == Direction::upper;
  const int src = up ? h + 1 : h;
  const int dst = up ? h : h + 1;
  const Row row_src = row_of(a, src);
  const Row row_dst = row_of(a, dst);
  auto sum_if = [](const Row& row, auto pred) {
    Entry s = 0;
    for (const auto& [j, x] : row)
      if (pred(j)) s += x;
    return s;
  };
  Row nu;
  std::function<void(size_t, Entry)> rec = [&](size_t k, Entry left) {
    if (k == bound.size()) {
      if (left != 0) return;
      IntMatZ key = a;
      Entry expo = 0, before = 0;
      for (const auto& [i, x] : nu) {
        if (up)
          expo += x * (sum_if(row_dst, [&](int j) { return j >= i; }) - sum_if(row_src, [&](int j) { return j > i; }));
        else
          expo += x * (sum_if(row_dst, [&](int j) { return j <= i; }) - sum_if(row_src, [&](int j) { return j < i; }));
        expo += before * x;
        before += x;
        key.add(dst, i, x);
        key.add(src, i, -x);
      }
      fn(nu, key, expo);
      return;
    }
    for (Entry x = std::min(left, bound[k].second); x >= 0; --x) {
      if (x > 0) nu.emplace_back(bound[k].first, x);
      rec(k + 1, left - x);
      if (x > 0) nu.pop_back();
    }
  };
  rec(0, b);
}

}  // namespace detail

SchurTerms fundamental_left(const AlmostDiag& bd, const SchurTerms& x) {
  bd.validate();
  Composition cob = co(bd.base);
  const int dst = bd.dir == Direction::upper ? bd.h : bd.h + 1;
  const int src = bd.dir == Direction::upper ? bd.h + 1 : bd.h;
  SchurTerms out;
  for (const auto& [a, c] : x) {
    if (!(ro(a) == cob)) continue;
    if (bd.b == 0) {
      add_term(out, a, c);
      continue;
    }
    detail::for_each_move(a, bd.h, bd.dir, detail::row_of(a, src), bd.b,
                          [&](const detail::Row& nu, const IntMatZ& key, Entry expo) {
                            LaurentInt coef = c;
                            for (const auto& [i, t] : nu) coef *= gauss2_bar(a(dst, i) + t, static_cast<int>(t));
                            add_term(out, key, coef.shifted(static_cast<int>(expo)));
                          });
  }
  return out;
}

SchurElem fundamental_left(const AlmostDiag& b, const SchurElem& x) {
  if (!b.base.supported_in(x.window())) throw std::invalid_argument("almost-diagonal factor escapes the window");
  return SchurElem(x.window(), x.degree(), fundamental_left(b, x.terms()));
}

std::vector<ChainStep> factor_order(const IntMatZ& a) {
  std::vector<ChainStep> steps;
  auto hull = a.hull();
  if (!hull) return steps;
  const Window w = *hull;
  for (int j = w.hi; j >= w.lo; --j)
    for (int i = j - 1; i >= w.lo; --i)
      if (Entry x = a(i, j); x != 0)
        for (int h = i; h < j; ++h) steps.push_back({h, x, Direction::upper});
  for (int l = w.lo; l <= w.hi; ++l)
    for (int s = w.lo; s < l; ++s)
      if (Entry x = a(l, s); x != 0)
        for (int h = l - 1; h >= s; --h) steps.push_back({h, x, Direction::lower});
  return steps;
}

std::vector<AlmostDiag> chevalley_chain(const IntMatZ& a, bool nonneg) {
  std::vector<AlmostDiag> chain;
  if (a.is_diagonal()) {
    chain.push_back(AlmostDiag{a, 0, 0, Direction::upper});
    return chain;
  }
  if (!a.offdiag_nonneg()) throw std::invalid_argument("chevalley_chain: negative off-diagonal entry in " + a.str());
  Composition cur = ro(a);
  for (const auto& [h, b, dir] : factor_order(a)) {
    // The diagonal is whatever remains of the running row sums once the moved entries are taken out.
    const int from = dir == Direction::upper ? h : h + 1;
    const int to = dir == Direction::upper ? h + 1 : h;
    Composition d = cur;
    d.add(from, -b);
    IntMatZ base = IntMatZ::diag(d);
    base.add(from, to, b);
    cur.add(from, -b);
    cur.add(to, b);
    AlmostDiag f{base, h, b, dir};
    f.validate(nonneg);
    chain.push_back(std::move(f));
  }
  if (!(cur == co(a))) throw std::logic_error("chevalley_chain: column sums do not close up for " + a.str());
  return chain;
}

namespace {

struct ProductCache {
  std::shared_mutex mu;
  std::map<IntMatZ, SchurTerms> chains;
  std::map<std::pair<IntMatZ, IntMatZ>, SchurTerms> products;
};

ProductCache& cache() {
  static ProductCache c;
  return c;
}

template <class Map, class Key, class Fn>
const SchurTerms& memo(Map& m, const Key& key, Fn compute) {
  auto& c = cache();
  {
    std::shared_lock lock(c.mu);
    auto it = m.find(key);
    if (it != m.end()) return it->second;
  }
  SchurTerms value = compute();
  std::unique_lock lock(c.mu);
  return m.emplace(key, std::move(value)).first->second;
}

SchurTerms apply_chain(const std::vector<AlmostDiag>& chain, SchurTerms x) {
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) x = fundamental_left(*it, x);
  return x;
}

}  // namespace

void clear_product_cache() {
  auto& c = cache();
  std::unique_lock lock(c.mu);
  c.chains.clear();
  c.products.clear();
}

const SchurTerms& chain_product(const IntMatZ& a) {
  return memo(cache().chains, a, [&] {
    auto chain = chevalley_chain(a);
    SchurTerms x{{chain.back().base, LaurentInt(1)}};
    chain.pop_back();
    return apply_chain(chain, std::move(x));
  });
}

const SchurTerms& basis_product(const IntMatZ& a, const IntMatZ& b) {
  return memo(cache().products, std::make_pair(a, b), [&] {
    SchurTerms out;
    if (!(co(a) == ro(b))) return out;
    if (a.is_diagonal()) {
      out.emplace(b, LaurentInt(1));
      return out;
    }
    AlmostDiag ad;
    if (AlmostDiag::recognize(a, ad)) return fundamental_left(ad, SchurTerms{{b, LaurentInt(1)}});
    out = apply_chain(chevalley_chain(a), SchurTerms{{b, LaurentInt(1)}});
    for (const auto& [c, coef] : chain_product(a)) {
      if (c == a) {
        if (!(coef == LaurentInt(1))) throw std::logic_error("chain product of " + a.str() + " is not unitriangular");
        continue;
      }
      for (const auto& [d, x] : basis_product(c, b)) add_term(out, d, -(coef * x));
    }
    return out;
  });
}

SchurElem multiply(const SchurElem& x, const SchurElem& y) {
  if (!(x.window() == y.window()) || x.degree() != y.degree())
    throw std::invalid_argument("multiply: window/degree mismatch");
  std::map<Composition, std::vector<const std::pair<const IntMatZ, LaurentInt>*>> by_row;
  for (const auto& t : y.terms()) by_row[ro(t.first)].push_back(&t);
  SchurElem out(x.window(), x.degree());
  for (const auto& [a, ca] : x.terms()) {
    auto it = by_row.find(co(a));
    if (it == by_row.end()) continue;
    for (const auto* t : it->second) {
      LaurentInt c = ca * t->second;
      for (const auto& [d, coef] : basis_product(a, t->first)) out.add(d, c * coef);
    }
  }
  return out;
}

std::map<IntMatZ, LaurentInt> structure_constants(const IntMatZ& a, const IntMatZ& b, const Window& w, Entry r) {
  SchurElem check(w, r);
  check.add(a, 1);
  check.add(b, 1);
  std::map<IntMatZ, LaurentInt> out;
  Entry twist = d_twist(a) + d_twist(b);
  for (const auto& [c, coef] : basis_product(a, b)) out.emplace(c, coef.shifted(static_cast<int>(twist - d_twist(c))));
  return out;
}

}  // namespace qschur
