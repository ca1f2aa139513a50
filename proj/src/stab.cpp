#include "qschur/stab.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "moves.hpp"

namespace qschur {

namespace {

void add_term(StabTerms& out, const IntMatZ& key, const BiLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

void add_term(KinfTerms& out, const IntMatZ& key, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

template <class Terms>
std::string render(const Terms& terms) {
  if (terms.empty()) return "0";
  std::vector<IntMatZ> keys;
  for (const auto& [a, c] : terms) keys.push_back(a);
  std::sort(keys.begin(), keys.end(), report_before);
  std::string out;
  for (const auto& a : keys) {
    if (!out.empty()) out += " + ";
    std::string c = terms.at(a).str();
    if (c == "-1")
      out += "-";
    else if (c != "1")
      out += "(" + c + ")*";
    out += "[" + a.str() + "]";
  }
  return out;
}

}  // namespace

StabElem::StabElem(StabTerms terms) {
  for (const auto& [a, c] : terms) add(a, c);
}

StabElem StabElem::basis(const IntMatZ& a, const BiLaurent& c) {
  StabElem e;
  e.add(a, c);
  return e;
}

BiLaurent StabElem::coeff(const IntMatZ& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? BiLaurent() : it->second;
}

void StabElem::add(const IntMatZ& a, const BiLaurent& c) {
  if (!a.offdiag_nonneg()) throw std::invalid_argument("negative off-diagonal entry in " + a.str());
  add_term(terms_, a, c);
}

KinfTerms StabElem::at_vpow(int a) const {
  KinfTerms out;
  for (const auto& [m, c] : terms_) add_term(out, m, c.at_vpow(a));
  return out;
}

KinfTerms StabElem::at_one() const {
  KinfTerms out;
  for (const auto& [m, c] : terms_) add_term(out, m, c.at_one());
  return out;
}

std::string StabElem::str() const { return render(terms_); }

std::string kinf_str(const KinfTerms& x) { return render(x); }

StabTerms stab_fundamental_left(const AlmostDiag& bd, const StabTerms& x) {
  bd.validate(false);
  Composition cob = co(bd.base);
  const bool up = bd.dir == Direction::upper;
  const int dst = up ? bd.h : bd.h + 1;
  const int src = up ? bd.h + 1 : bd.h;
  StabTerms out;
  for (const auto& [a, c] : x) {
    if (!(ro(a) == cob)) continue;
    if (bd.b == 0) {
      add_term(out, a, c);
      continue;
    }
    // After shifting, the diagonal entry of the source row no longer bounds nu.
    detail::Row bound;
    for (const auto& [j, e] : detail::row_of(a, src))
      if (j != src) bound.emplace_back(j, e);
    bound.emplace_back(src, bd.b);
    std::sort(bound.begin(), bound.end());
    detail::for_each_move(a, bd.h, bd.dir, bound, bd.b, [&](const detail::Row& nu, const IntMatZ& key, Entry expo) {
      LaurentInt plain = LaurentInt::monomial(static_cast<int>(expo), 1);
      BiLaurent shifted = 1;
      for (const auto& [i, t] : nu) {
        if (i != dst) {
          plain *= gauss2_bar(a(dst, i) + t, static_cast<int>(t));
          continue;
        }
        std::vector<long long> cs;
        for (Entry j = 1; j <= t; ++j) cs.push_back(a(dst, dst) + t - j + 1);
        shifted = stab_binom(cs);
      }
      add_term(out, key, plain * (c * shifted));
    });
  }
  return out;
}

StabElem stab_fundamental_left(const AlmostDiag& b, const StabElem& x) {
  return StabElem(stab_fundamental_left(b, x.terms()));
}

namespace {

struct StabCache {
  std::shared_mutex mu;
  std::map<IntMatZ, StabTerms> chains;
  std::map<std::pair<IntMatZ, IntMatZ>, StabTerms> products;
};

StabCache& cache() {
  static StabCache c;
  return c;
}

template <class Map, class Key, class Fn>
const StabTerms& memo(Map& m, const Key& key, Fn compute) {
  auto& c = cache();
  {
    std::shared_lock lock(c.mu);
    auto it = m.find(key);
    if (it != m.end()) return it->second;
  }
  StabTerms value = compute();
  std::unique_lock lock(c.mu);
  return m.emplace(key, std::move(value)).first->second;
}

StabTerms apply_chain(const std::vector<AlmostDiag>& chain, StabTerms x) {
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) x = stab_fundamental_left(*it, x);
  return x;
}

const StabTerms& stab_chain_product(const IntMatZ& a) {
  return memo(cache().chains, a, [&] {
    auto chain = chevalley_chain(a, false);
    StabTerms x{{chain.back().base, BiLaurent(1)}};
    chain.pop_back();
    return apply_chain(chain, std::move(x));
  });
}

}  // namespace

const StabTerms& f_poly(const IntMatZ& a, const IntMatZ& b) {
  return memo(cache().products, std::make_pair(a, b), [&] {
    if (!a.offdiag_nonneg() || !b.offdiag_nonneg()) throw std::invalid_argument("f_poly: negative off-diagonal entry");
    StabTerms out;
    if (!(co(a) == ro(b))) return out;
    AlmostDiag ad;
    if (AlmostDiag::recognize(a, ad)) return stab_fundamental_left(ad, StabTerms{{b, BiLaurent(1)}});
    out = apply_chain(chevalley_chain(a, false), StabTerms{{b, BiLaurent(1)}});
    for (const auto& [c, coef] : stab_chain_product(a)) {
      if (c == a) {
        if (!(coef == BiLaurent(1))) throw std::logic_error("stabilized chain of " + a.str() + " is not unitriangular");
        continue;
      }
      for (const auto& [d, x] : f_poly(c, b)) add_term(out, d, -(coef * x));
    }
    return out;
  });
}

KinfTerms kinf_multiply(const KinfTerms& x, const KinfTerms& y) {
  KinfTerms out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      if (!(co(a) == ro(b))) continue;
      LaurentInt c = ca * cb;
      for (const auto& [d, f] : f_poly(a, b)) add_term(out, d, c * f.at_one());
    }
  return out;
}

SchurElem dot_zeta(const IntMatZ& a, const Window& w, Entry r) {
  SchurElem out(w, r);
  if (a.is_nonneg() && a.supported_in(w) && stats(a).sigma == r) out.add(a, 1);
  return out;
}

Entry min_shift(const IntMatZ& a, const Window& w) {
  Entry need = 0;
  for (int i = w.lo; i <= w.hi; ++i) need = std::max(need, -a(i, i));
  return need;
}

void clear_stab_cache() {
  auto& c = cache();
  std::unique_lock lock(c.mu);
  c.chains.clear();
  c.products.clear();
}

}  // namespace qschur
