#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qschur/hecke.hpp"
#include "qschur/oracle.hpp"
#include "qschur/quantum.hpp"
#include "qschur/reps.hpp"
#include "qschur/schur.hpp"
#include "qschur/stab.hpp"
#include "qschur/verify.hpp"

using namespace qschur;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

IntMatZ M(const char* s) { return parse_matrix(s); }

bool unitriangular(const SchurTerms& terms, const IntMatZ& a, std::string& why) {
  auto it = terms.find(a);
  if (it == terms.end() || !(it->second == LaurentInt(1))) {
    why = "leading coefficient of " + a.str() + " is not 1";
    return false;
  }
  for (const auto& [b, c] : terms)
    if (!(b == a) && !strictly_below(b, a)) {
      why = b.str() + " is not strictly below " + a.str();
      return false;
    }
  return true;
}

// Stabilization corpus: 2x2 matrices on [1,2] with diagonal in {-1,0,1} and off-diagonal in {0,1}.
std::vector<IntMatZ> small_tilde() {
  std::vector<IntMatZ> out;
  for (Entry d1 = -1; d1 <= 1; ++d1)
    for (Entry d2 = -1; d2 <= 1; ++d2)
      for (Entry u = 0; u <= 1; ++u)
        for (Entry l = 0; l <= 1; ++l) {
          IntMatZ a;
          a.set(1, 1, d1);
          a.set(2, 2, d2);
          a.set(1, 2, u);
          a.set(2, 1, l);
          out.push_back(a);
        }
  return out;
}

// Smallest shift making A, B and every C nonnegative on the window, plus one.
Entry base_shift(const IntMatZ& a, const IntMatZ& b, const Window& w) {
  Entry s = std::max(min_shift(a, w), min_shift(b, w));
  for (const auto& [c, f] : f_poly(a, b)) s = std::max(s, min_shift(c, w));
  return s + 1;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t n = 0;
  std::vector<std::pair<Window, Entry>> cases{{Window(1, 2), 1}, {Window(1, 2), 2}, {Window(1, 2), 3}, {Window(1, 3), 2}};
  for (const auto& [w, r] : cases) {
    Report rep = oracle_report(w, r, {2, 3});
    for (const auto& c : rep.claims) {
      n += c.instances;
      if (!c.pass) o.fail(c.params + ": " + c.witness);
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " (A,B,C,q) counts agree";
  return o;
}

Outcome counterexample() {
  Outcome o;
  KinfTerms got = kinf_multiply({{M("E12"), 1}}, {{M("E21"), 1}});
  KinfTerms want{{M("E11"), 1}, {M("E12+E21-E22"), 1}};
  if (!(got == want)) o.fail("K(inf) product is " + kinf_str(got));
  Window w(1, 2);
  SchurElem finite = multiply(SchurElem::basis(w, M("E12")), SchurElem::basis(w, M("E21")));
  if (!(finite == SchurElem::basis(w, M("E11")))) o.fail("finite product is " + finite.str());
  if (o.pass) o.detail = kinf_str(got) + " in K(inf); " + finite.str() + " at r=1";
  return o;
}

Outcome stabilization() {
  Outcome o;
  std::size_t n = 0;
  auto all = small_tilde();
  for (const Window w : {Window(1, 2), Window(0, 3)})
    for (const auto& a : all)
      for (const auto& b : all) {
        if (!(co(a) == ro(b))) continue;
        Entry a0 = base_shift(a, b, w);
        for (Entry s = a0; s <= a0 + 3; ++s) {
          IntMatZ sa = a_shift(a, s, w), sb = a_shift(b, s, w);
          Entry r = stats(sa).sigma;
          SchurElem want = multiply(SchurElem::basis(w, sa), SchurElem::basis(w, sb));
          SchurElem got(w, r);
          for (const auto& [c, f] : f_poly(a, b)) got.add(a_shift(c, s, w), f.at_vpow(static_cast<int>(s)));
          ++n;
          if (!(got == want)) o.fail(a.str() + " * " + b.str() + " shift " + std::to_string(s) + " on " + w.str());
        }
      }
  if (o.pass) o.detail = std::to_string(n) + " shifted products on [1,2] and [0,3]";
  return o;
}

Outcome triangularity() {
  Outcome o;
  Window w(1, 3);
  auto mats = enum_matrices(w, 3);
  for (const auto& a : mats) {
    std::string why;
    if (!unitriangular(chain_product(a), a, why)) o.fail("chain: " + why);
    if (!unitriangular(m_monomial(a, w, 3).terms(), a, why)) o.fail("monomial: " + why);
  }
  if (o.pass) o.detail = std::to_string(mats.size()) + " matrices, chain products and monomials";
  return o;
}

Outcome presentation() {
  Outcome o;
  std::size_t n = 0;
  for (const Window w : {Window(-1, 1), Window(-2, 2)})
    for (Entry r = 1; r <= 3; ++r)
      for (const auto& c : verify_presentation(w, r).claims) {
        n += c.instances;
        if (!c.pass) o.fail(c.id + " " + c.params + ": " + c.witness);
      }
  if (o.pass) o.detail = std::to_string(n) + " relation instances on [-1,1] and [-2,2], r<=3";
  return o;
}

Outcome generator_formulas() {
  Outcome o;
  Window w(-2, 2);
  std::vector<GenToken> gens;
  for (int h = w.lo; h < w.hi; ++h) {
    gens.push_back(GenToken::e(h));
    gens.push_back(GenToken::f(h));
  }
  for (int i = w.lo; i <= w.hi; ++i) {
    gens.push_back(GenToken::k(Composition{{i, 1}}));
    gens.push_back(GenToken::k(Composition{{i, -1}}));
  }
  std::vector<Composition> js{Composition()};
  for (int i = w.lo; i <= w.hi; ++i) {
    std::vector<Composition> next;
    for (const auto& j : js)
      for (Entry x = -1; x <= 1; ++x) {
        Composition k = j;
        k.set(i, x);
        next.push_back(k);
      }
    js = std::move(next);
  }
  auto keys = enum_offdiag(w, 2);
  std::size_t n = 0;
  for (Entry r = 0; r <= 3; ++r) {
    std::vector<SchurElem> images;
    for (const auto& g : gens) images.push_back(generator_image(g, w, r));
    for (const auto& a : keys)
      for (const auto& j : js) {
        VElem x = VElem::basis(a, j, r);
        SchurElem px = project_window(x, w);
        for (size_t k = 0; k < gens.size(); ++k) {
          ++n;
          if (!(project_window(act_gen(gens[k], x), w) == multiply(images[k], px)))
            o.fail(gens[k].str() + " on " + a.str() + " j=" + j.str() + " r=" + std::to_string(r));
        }
      }
  }
  if (o.pass) o.detail = std::to_string(n) + " (generator, A, j, r) checks on [-2,2]";
  return o;
}

Outcome weights() {
  Outcome o;
  std::size_t n = 0;
  for (Entry r = 1; r <= 4; ++r)
    for (const auto& mu : partitions(r))
      for (const auto& [lambda, d] : weyl_weight_dims(mu, Window(1, 3))) {
        ++n;
        if (static_cast<long long>(d) != ssyt_count(mu, lambda))
          o.fail("mu=" + mu.str() + " lambda=" + lambda.str() + ": rank " + std::to_string(d));
      }
  std::vector<std::pair<Window, Entry>> cases;
  for (Entry r = 1; r <= 4; ++r) cases.emplace_back(Window(1, 2), r);
  for (Entry r = 1; r <= 3; ++r) cases.emplace_back(Window(1, 3), r);
  for (const auto& [w, r] : cases) {
    DecompReport rep = tensor_decomp_check(w, r);
    if (!rep.ok()) o.fail(rep.str());
  }
  if (o.pass) o.detail = std::to_string(n) + " weight spaces; " + std::to_string(cases.size()) + " tensor identities";
  return o;
}

Outcome bases() {
  Outcome o;
  for (Entry r = 1; r <= 3; ++r)
    for (const auto& c : basis_report(Window(-1, 1), r).claims) {
      if (!c.pass) o.fail(c.id + " " + c.params + ": " + c.witness);
    }
  if (o.pass) o.detail = "monomial, n^(A,j) and A(j,r) families independent; cardinality and determinant checks hold on [-1,1], r<=3";
  return o;
}

Outcome ring_identities() {
  Outcome o;
  std::size_t n = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++n;
    if (!ok) o.fail(what);
  };
  for (int big = 0; big <= 8; ++big)
    for (int t = 0; t <= big; ++t) {
      std::string at = "N=" + std::to_string(big) + " t=" + std::to_string(t);
      if (t >= 1 && t <= big - 1) {
        check(gauss2(big, t) == LaurentInt::v(2 * t) * gauss2(big - 1, t) + gauss2(big - 1, t - 1), "Pascal " + at);
        check(gauss2(big, t) == gauss2(big - 1, t) + LaurentInt::v(2 * (big - t)) * gauss2(big - 1, t - 1), "dual Pascal " + at);
        check(balanced_binom(big, t) == LaurentInt::v(t) * balanced_binom(big - 1, t) +
                                            LaurentInt::v(t - big) * balanced_binom(big - 1, t - 1),
              "balanced Pascal " + at);
      }
      for (int s = 0; s <= big - t; ++s)
        check(gauss2(big, t) * gauss2(big - t, s) == gauss2(big, s) * gauss2(big - s, t), "symmetry " + at);
      check(gauss2(big, t) == gauss2(big, big - t), "reflection " + at);
    }
  for (int q : {2, 3})
    for (int big = 0; big <= 4; ++big)
      for (int t = 0; t <= big; ++t)
        check(eval_q(gauss2(big, t), q) == BigRat(oracle::count_subspaces(q, big, t)), "subspace count");

  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> coef(-5, 5), expo(-6, 6), len(0, 5);
  auto random_poly = [&] {
    LaurentInt p;
    for (int k = len(rng); k > 0; --k) p += LaurentInt::monomial(expo(rng), coef(rng));
    return p;
  };
  for (int k = 0; k < 500; ++k) {
    LaurentInt p = random_poly(), q = random_poly();
    check((p * q).bar() == p.bar() * q.bar(), "bar(pq) for " + p.str() + ", " + q.str());
    check(p.bar().bar() == p, "bar involution");
  }

  for (int t = 1; t <= 3; ++t)
    for (int m = -3; m <= 3; ++m)
      for (int a = 0; a <= 4; ++a) {
        if (m + a < 0) continue;
        std::vector<long long> c;
        for (int j = 1; j <= t; ++j) c.push_back(m + t - j + 1);
        check(stab_binom(c).at_vpow(a) == gauss2(m + a + t, t).bar(), "stab_binom specialization");
      }

  // Every stabilized constant of the stabilization corpus specializes exactly.
  auto all = small_tilde();
  for (const auto& a : all)
    for (const auto& b : all) {
      if (!(co(a) == ro(b))) continue;
      Entry a0 = base_shift(a, b, Window(1, 2));
      for (const auto& [c, f] : f_poly(a, b)) {
        try {
          f.at_one();
          for (Entry s = a0; s <= a0 + 3; ++s) f.at_vpow(static_cast<int>(s));
          check(true, "");
        } catch (const std::exception& e) {
          check(false, "specializing f for " + a.str() + " * " + b.str() + " -> " + c.str() + ": " + e.what());
        }
      }
    }
  if (o.pass) o.detail = std::to_string(n) + " identities and exact specializations";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"stable-limit counterexample", counterexample},
      {"stabilization", stabilization},
      {"triangularity", triangularity},
      {"presentation relations", presentation},
      {"generator formulas", generator_formulas},
      {"weight multiplicities", weights},
      {"basis reports", bases},
      {"ring identities", ring_identities},
  };
  bool all = true;
  for (size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && out.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (out.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].name << ": " << out.detail << " ("
              << timing << ")" << std::endl;
  }
  return all ? 0 : 1;
}
