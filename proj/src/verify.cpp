#include "qschur/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "qschur/oracle.hpp"
#include "qschur/quantum.hpp"
#include "qschur/rank.hpp"

namespace qschur {

namespace {

constexpr std::size_t kWitnessChars = 240;

std::string clip(std::string s) {
  if (s.size() > kWitnessChars) s = s.substr(0, kWitnessChars) + " ...";
  return s;
}

std::string scope(const Window& w, Entry r) { return "window=" + w.str() + " r=" + std::to_string(r); }

std::string seq_str(const Composition& c, const Window& w) {
  std::string out = "(";
  auto xs = c.on(w);
  for (size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out + ")";
}

// Accumulates instances of one claim.
class Tally {
 public:
  Tally(std::string id, std::string params) { claim_.id = std::move(id), claim_.params = std::move(params); }

  void check(bool ok, const std::function<std::string()>& witness) {
    ++claim_.instances;
    if (!ok && claim_.pass) {
      claim_.pass = false;
      claim_.witness = clip(witness());
    }
  }
  void equal(const SchurElem& lhs, const SchurElem& rhs, const std::string& where) {
    check(lhs == rhs, [&] { return where + ": lhs - rhs = " + (lhs - rhs).str(); });
  }
  void zero(const SchurElem& x, const std::string& where) {
    check(x.is_zero(), [&] { return where + ": expected 0, got " + x.str(); });
  }
  Claim done() const { return claim_; }

 private:
  Claim claim_;
};

// Generator images with products, cached per (window, r).
class Gens {
 public:
  Gens(const Window& w, Entry r) : w_(w), r_(r) {}

  const SchurElem& word(const GenWord& g) {
    std::string key = g.str();
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, evaluate_word(g, w_, r_)).first;
    return it->second;
  }
  const SchurElem& tok(const GenToken& g) { return word(GenWord{{g}}); }
  const SchurElem& e(int h, Entry m = 1) { return tok(GenToken::e(h, m)); }
  const SchurElem& f(int h, Entry m = 1) { return tok(GenToken::f(h, m)); }
  const SchurElem& k(int i, Entry power = 1) { return tok(GenToken::k(Composition{{i, power}})); }
  SchurElem one() const { return SchurElem::identity(w_, r_); }
  SchurElem scalar(const LaurentInt& c) const { return c * one(); }
  SchurElem zero() const { return SchurElem(w_, r_); }
  SchurElem diag(const Composition& lambda) const { return SchurElem::basis(w_, IntMatZ::diag(lambda)); }

 private:
  Window w_;
  Entry r_;
  std::map<std::string, SchurElem> cache_;
};

SchurElem mul(const SchurElem& a, const SchurElem& b) { return multiply(a, b); }
SchurElem mul(const SchurElem& a, const SchurElem& b, const SchurElem& c) { return multiply(multiply(a, b), c); }

// [x; t]! = (x - 1)(x - v) ... (x - v^{t-1}).
SchurElem shifted_factorial(Gens& g, const SchurElem& x, Entry t) {
  SchurElem out = g.one();
  for (Entry s = 0; s < t; ++s) out = mul(out, x - g.scalar(LaurentInt::v(static_cast<int>(s))));
  return out;
}

// prod_i [k_i; 0 over t_i] through the generator tokens.
SchurElem k_binomial_product(Gens& g, const Composition& t) {
  GenWord word;
  for (const auto& [i, x] : t.parts()) word.tokens.push_back(GenToken::kbinom(i, 0, static_cast<int>(x)));
  return g.word(word);
}

// [K_h K_{h+1}^{-1}; c over t] evaluated on every idempotent.
SchurElem ktilde_binomial(const Window& w, Entry r, int h, Entry c, int t) {
  SchurElem out(w, r);
  for (const auto& lam : enum_compositions(w, r)) out.add(IntMatZ::diag(lam), balanced_binom(lam[h] - lam[h + 1] + c, t));
  return out;
}

std::vector<Composition> naturals_on(const Window& w, Entry max_sum) {
  std::vector<Composition> out;
  for (Entry s = 0; s <= max_sum; ++s)
    for (const auto& c : enum_compositions(w, s)) out.push_back(c);
  return out;
}

bool pointwise_geq(const Composition& a, const Composition& b) { return b.leq(a); }

std::string h_str(int h) { return std::to_string(h); }

}  // namespace

bool Report::ok() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

void Report::sort() {
  std::stable_sort(claims.begin(), claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
}

void Report::append(const Report& other) { claims.insert(claims.end(), other.claims.begin(), other.claims.end()); }

std::string Report::text() const {
  std::string out;
  for (const auto& c : claims) {
    out += std::string(c.pass ? "PASS " : "FAIL ") + c.id + " " + c.params + " (" + std::to_string(c.instances) +
           " instances)\n";
    if (!c.pass) out += "  witness: " + c.witness + "\n";
  }
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["ok"] = ok();
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : claims) {
    nlohmann::ordered_json x;
    x["id"] = c.id;
    x["params"] = c.params;
    x["instances"] = c.instances;
    x["pass"] = c.pass;
    if (!c.pass) x["witness"] = c.witness;
    j["claims"].push_back(x);
  }
  return j.dump(2);
}

Report verify_presentation(const Window& w, Entry r, const VerifyOptions& opts) {
  if (w.infinite || w.size() < 2) throw std::invalid_argument("verify_presentation: need a finite window with at least two indices");
  Gens g(w, r);
  const std::string where = scope(w, r);
  const LaurentInt vbracket = LaurentInt::v(1) - LaurentInt::v(-1);
  std::vector<int> idx, hs;
  for (int i = w.lo; i <= w.hi; ++i) idx.push_back(i);
  for (int h = w.lo; h < w.hi; ++h) hs.push_back(h);
  Report rep;

  Tally a("rel.a", where);
  for (int i : idx)
    for (int j : idx) a.equal(mul(g.k(i), g.k(j)), mul(g.k(j), g.k(i)), "i=" + h_str(i) + " j=" + h_str(j));
  rep.claims.push_back(a.done());

  Tally b("rel.b", where);
  for (const auto& t : enum_compositions(w, r + 1)) {
    SchurElem prod = g.one();
    for (const auto& [i, x] : t.parts()) prod = mul(prod, shifted_factorial(g, g.k(i), x));
    b.zero(prod, "t=" + seq_str(t, w));
  }
  rep.claims.push_back(b.done());

  Tally c("rel.c", where);
  for (int i : hs)
    for (int j : hs) {
      if (std::abs(i - j) <= 1) continue;
      c.equal(mul(g.e(i), g.e(j)), mul(g.e(j), g.e(i)), "e i=" + h_str(i) + " j=" + h_str(j));
      c.equal(mul(g.f(i), g.f(j)), mul(g.f(j), g.f(i)), "f i=" + h_str(i) + " j=" + h_str(j));
    }
  rep.claims.push_back(c.done());

  const LaurentInt qsum = LaurentInt::v(1) + LaurentInt::v(-1);
  for (bool upper : {true, false}) {
    Tally s(upper ? "rel.d" : "rel.e", where);
    for (int i : hs)
      for (int j : hs) {
        if (std::abs(i - j) != 1) continue;
        const SchurElem& xi = upper ? g.e(i) : g.f(i);
        const SchurElem& xj = upper ? g.e(j) : g.f(j);
        SchurElem lhs = mul(xi, xi, xj) - qsum * mul(xi, xj, xi) + mul(xj, xi, xi);
        s.zero(lhs, "i=" + h_str(i) + " j=" + h_str(j));
      }
    rep.claims.push_back(s.done());
  }

  Tally f("rel.f", where);
  for (int i : idx)
    for (int j : hs) {
      int de = (i == j) - (i == j + 1);
      f.equal(mul(g.k(i), g.e(j)), LaurentInt::v(de) * mul(g.e(j), g.k(i)), "k e i=" + h_str(i) + " j=" + h_str(j));
      f.equal(mul(g.k(i), g.f(j)), LaurentInt::v(-de) * mul(g.f(j), g.k(i)), "k f i=" + h_str(i) + " j=" + h_str(j));
    }
  rep.claims.push_back(f.done());

  // (e_i f_j - f_j e_i)(v - v^-1) k_i k_{i+1} = delta_ij (k_i^2 - k_{i+1}^2)
  Tally gg("rel.g", where);
  for (int i : hs)
    for (int j : hs) {
      SchurElem lhs = vbracket * mul(mul(g.e(i), g.f(j)) - mul(g.f(j), g.e(i)), g.k(i), g.k(i + 1));
      SchurElem rhs = i == j ? g.k(i, 2) - g.k(i + 1, 2) : g.zero();
      if (opts.perturb && i == j) rhs = LaurentInt::v(1) * rhs;
      gg.equal(lhs, rhs, "i=" + h_str(i) + " j=" + h_str(j));
    }
  rep.claims.push_back(gg.done());

  Tally k1("kkk.1", where);
  for (Entry extra : {Entry(1), Entry(2)})
    for (const auto& t : enum_compositions(w, r + extra)) {
      SchurElem prod = g.one();
      for (const auto& [i, x] : t.parts()) prod = mul(prod, shifted_factorial(g, g.k(i), x));
      k1.zero(prod, "t=" + seq_str(t, w));
    }
  rep.claims.push_back(k1.done());

  Tally k2("kkk.2", where);
  for (const auto& t : enum_compositions(w, r)) k2.equal(k_binomial_product(g, t), g.diag(t), "t=" + seq_str(t, w));
  for (const auto& t : enum_compositions(w, r + 1)) k2.zero(k_binomial_product(g, t), "t=" + seq_str(t, w));
  rep.claims.push_back(k2.done());

  Tally k3("kkk.3", where);
  for (const auto& lam : enum_compositions(w, r)) {
    SchurElem kl = k_binomial_product(g, lam);
    for (int i : idx) {
      std::string at = "lambda=" + seq_str(lam, w) + " i=" + h_str(i);
      k3.equal(mul(g.k(i), kl), LaurentInt::v(static_cast<int>(lam[i])) * kl, at);
      for (Entry c : {Entry(-1), Entry(0), Entry(1)})
        for (int t : {1, 2})
          k3.equal(mul(g.tok(GenToken::kbinom(i, c, t)), kl), balanced_binom(lam[i] + c, t) * kl,
                   at + " c=" + std::to_string(c) + " t=" + std::to_string(t));
    }
  }
  rep.claims.push_back(k3.done());

  Tally al("alp", where);
  auto lams = enum_compositions(w, r);
  std::set<Composition> lamset(lams.begin(), lams.end());
  for (const auto& lam : lams)
    for (int h : hs) {
      std::string at = "lambda=" + seq_str(lam, w) + " i=" + h_str(h);
      Composition up = lam + Composition::alpha(h), down = lam - Composition::alpha(h);
      al.equal(mul(g.e(h), g.diag(lam)), lamset.count(up) ? mul(g.diag(up), g.e(h)) : g.zero(), "e " + at);
      al.equal(mul(g.f(h), g.diag(lam)), lamset.count(down) ? mul(g.diag(down), g.f(h)) : g.zero(), "f " + at);
    }
  std::set<IntMatZ> pluses, minuses;
  for (const auto& a : enum_offdiag(w, r)) {
    auto parts = split_pm(a);
    pluses.insert(parts.plus);
    minuses.insert(parts.minus);
  }
  for (bool upper : {true, false})
    for (const auto& m : upper ? pluses : minuses) {
      if (m.is_zero()) continue;
      const SchurElem& x = g.word(pbw_word(m));
      Composition sig = bold_sigma(m);
      for (const auto& lam : lams) {
        // e^(A+) k_lambda = k_{lambda - co + ro} e^(A+) and k_lambda f^(A-) = f^(A-) k_{lambda - ro + co}.
        std::string at = (upper ? "e^(" : "f^(") + m.str() + ") lambda=" + seq_str(lam, w);
        SchurElem lhs = upper ? mul(x, g.diag(lam)) : mul(g.diag(lam), x);
        if (!pointwise_geq(lam, sig)) {
          al.zero(lhs, at);
          continue;
        }
        Composition target = lam - co(m) + ro(m);
        if (!upper) target = lam - ro(m) + co(m);
        al.equal(lhs, upper ? mul(g.diag(target), x) : mul(x, g.diag(target)), at);
      }
    }
  rep.claims.push_back(al.done());

  Tally cm("commute", where);
  for (int h : hs)
    for (Entry k = 1; k <= 3; ++k)
      for (Entry l = 1; l <= 3; ++l) {
        SchurElem rhs = g.zero();
        for (Entry t = 0; t <= std::min(k, l); ++t)
          rhs += mul(g.f(h, l - t), ktilde_binomial(w, r, h, 2 * t - k - l, static_cast<int>(t)), g.e(h, k - t));
        cm.equal(mul(g.e(h, k), g.f(h, l)), rhs, "i=" + h_str(h) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
      }
  rep.claims.push_back(cm.done());

  rep.sort();
  return rep;
}

namespace {

// Elements keyed by the weight difference ro - co shared by all their terms.
using Family = std::vector<std::pair<Composition, SchurElem>>;

// Rank of a family, computed block by block.
std::size_t family_rank(const Family& family) {
  std::map<Composition, std::vector<const SchurElem*>> blocks;
  for (const auto& [key, x] : family) blocks[key].push_back(&x);
  std::size_t total = 0;
  for (const auto& [key, xs] : blocks) {
    std::set<IntMatZ> support;
    for (const auto* x : xs)
      for (const auto& [b, c] : x->terms()) support.insert(b);
    std::vector<LaurentRow> rows;
    for (const auto* x : xs) {
      auto& row = rows.emplace_back();
      for (const auto& b : support) row.push_back(x->coeff(b));
    }
    total += laurent_rank(std::move(rows));
  }
  return total;
}

}  // namespace

Report basis_report(const Window& w, Entry r, const VerifyOptions& opts) {
  if (w.infinite || w.size() < 2) throw std::invalid_argument("basis_report: need a finite window with at least two indices");
  Gens g(w, r);
  const std::string where = scope(w, r);
  const Window lower(w.lo, w.hi - 1);
  Report rep;

  Tally mono("basis.monomial", where);
  for (const auto& a : enum_matrices(w, r)) {
    auto parts = split_pm(a);
    SchurElem left = g.word(pbw_word(parts.plus)), right = g.word(pbw_word(parts.minus));
    SchurElem m = opts.perturb ? mul(left, right) : mul(left, g.diag(bold_sigma(a)), right);
    bool ok = m.coeff(a) == LaurentInt(1);
    std::string bad;
    for (const auto& [b, c] : m.terms())
      if (!(b == a) && !strictly_below(b, a)) {
        ok = false;
        bad = b.str();
        break;
      }
    mono.check(ok, [&] {
      return "A=" + a.str() + ": coefficient of [A] is " + m.coeff(a).str() + (bad.empty() ? "" : ", term not below A: " + bad);
    });
  }
  rep.claims.push_back(mono.done());

  auto offdiag = enum_offdiag(w, r);
  Family nfam, ajr;
  std::size_t expected = 0;
  Tally handy("basis.handy", where);
  for (const auto& a : offdiag) {
    Entry sa = stats(a).sigma;
    Composition sig = bold_sigma(a);
    std::vector<Composition> lams, js = naturals_on(lower, r - sa);
    for (const auto& lam : enum_compositions(w, r))
      if (pointwise_geq(lam, sig)) lams.push_back(lam);
    std::string at = "A=" + a.str();
    handy.check(lams.size() == js.size(), [&] {
      return at + ": " + std::to_string(lams.size()) + " weights vs " + std::to_string(js.size()) + " exponents";
    });
    if (lams.size() == js.size()) {
      std::vector<LaurentRow> vand;
      for (const auto& lam : lams) {
        auto& row = vand.emplace_back();
        for (const auto& j : js) row.push_back(LaurentInt::v(static_cast<int>(lam.dot(j))));
      }
      handy.check(!laurent_det(std::move(vand)).is_zero(), [&] { return at + ": determinant vanishes"; });
    }
    for (const auto& j : js) {
      ++expected;
      nfam.emplace_back(ro(a) - co(a), g.word(pbw_word(a, j)));
      ajr.emplace_back(ro(a) - co(a), project_window(VElem::basis(a, j, r), w));
    }
  }
  rep.claims.push_back(handy.done());

  const std::size_t dim = enum_matrices(w, r).size();
  for (auto* fam : {&nfam, &ajr}) {
    Tally t(fam == &nfam ? "basis.n" : "basis.ajr", where);
    std::size_t rank = family_rank(*fam);
    t.check(rank == expected && expected == dim, [&] {
      return "rank " + std::to_string(rank) + " of " + std::to_string(expected) + " elements; dim " + std::to_string(dim);
    });
    rep.claims.push_back(t.done());
  }

  rep.sort();
  return rep;
}

Report oracle_report(const Window& w, Entry r, const std::vector<int>& qs) {
  Report rep;
  auto mats = enum_matrices(w, r);
  for (int q : qs) {
    Tally t("oracle.constants", scope(w, r) + " q=" + std::to_string(q));
    for (const auto& c : mats)
      for (const auto& mid : enum_compositions(w, r)) {
        auto table = oracle::g_count_table(c, mid, w, q);
        for (const auto& a : enum_matrices(ro(c), mid))
          for (const auto& b : enum_matrices(mid, co(c))) {
            auto sc = structure_constants(a, b, w, r);
            auto it = sc.find(c);
            BigRat algebra = it == sc.end() ? BigRat(0) : eval_q(it->second, q);
            auto hit = table.find({a, b});
            long long count = hit == table.end() ? 0 : hit->second;
            t.check(algebra == BigRat(count), [&] {
              return "A=" + a.str() + " B=" + b.str() + " C=" + c.str() + ": algebra " + algebra.str() +
                     ", flags " + std::to_string(count);
            });
          }
      }
    rep.claims.push_back(t.done());
  }
  rep.sort();
  return rep;
}

}  // namespace qschur
