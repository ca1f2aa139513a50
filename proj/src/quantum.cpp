#include "qschur/quantum.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qschur {

namespace {

[[noreturn]] void malformed(std::string_view tok) {
  throw std::invalid_argument("malformed word token '" + std::string(tok) + "'");
}

long long to_int(std::string_view s, std::string_view tok) {
  long long x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size()) malformed(tok);
  return x;
}

GenToken parse_token(std::string_view tok) {
  if (tok.starts_with("KB(")) {
    if (!tok.ends_with(")")) malformed(tok);
    std::string_view body = tok.substr(3, tok.size() - 4);
    auto p1 = body.find(';');
    auto p2 = body.find(';', p1 == std::string_view::npos ? p1 : p1 + 1);
    if (p1 == std::string_view::npos || p2 == std::string_view::npos) malformed(tok);
    long long t = to_int(body.substr(p2 + 1), tok);
    if (t < 0) malformed(tok);
    return GenToken::kbinom(static_cast<int>(to_int(body.substr(0, p1), tok)), to_int(body.substr(p1 + 1, p2 - p1 - 1), tok),
                            static_cast<int>(t));
  }
  if (tok.starts_with("K[")) {
    if (!tok.ends_with("]")) malformed(tok);
    std::string_view body = tok.substr(2, tok.size() - 3);
    Composition j;
    while (!body.empty()) {
      auto comma = body.find(',');
      std::string_view part = body.substr(0, comma);
      auto colon = part.find(':');
      if (colon == std::string_view::npos) malformed(tok);
      int i = static_cast<int>(to_int(part.substr(0, colon), tok));
      if (j[i] != 0) malformed(tok);
      j.set(i, to_int(part.substr(colon + 1), tok));
      body = comma == std::string_view::npos ? std::string_view() : body.substr(comma + 1);
    }
    return GenToken::k(j);
  }
  if (tok.empty() || (tok[0] != 'E' && tok[0] != 'F')) malformed(tok);
  std::string_view rest = tok.substr(1);
  Entry m = 1;
  if (auto hat = rest.find("^("); hat != std::string_view::npos) {
    if (!rest.ends_with(")")) malformed(tok);
    m = to_int(rest.substr(hat + 2, rest.size() - hat - 3), tok);
    rest = rest.substr(0, hat);
    if (m < 1) malformed(tok);
  }
  int h = static_cast<int>(to_int(rest, tok));
  return tok[0] == 'E' ? GenToken::e(h, m) : GenToken::f(h, m);
}

struct TermsLess {
  bool operator()(const LaurentInt& p, const LaurentInt& q) const { return p.terms() < q.terms(); }
};

Entry row_sum(const IntMatZ& a, int row, auto pred) {
  Entry s = 0;
  for (const auto& c : a.cells())
    if (c.i == row && pred(c.j)) s += c.a;
  return s;
}

}  // namespace

std::string GenToken::str() const {
  std::string power = m == 1 ? "" : "^(" + std::to_string(m) + ")";
  switch (kind) {
    case Kind::e:
      return "E" + std::to_string(h) + power;
    case Kind::f:
      return "F" + std::to_string(h) + power;
    case Kind::k: {
      std::string out = "K[";
      bool first = true;
      for (const auto& [i, x] : j.parts()) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(i) + ":" + std::to_string(x);
      }
      return out + "]";
    }
    case Kind::kbinom:
      return "KB(" + std::to_string(h) + ";" + std::to_string(c) + ";" + std::to_string(t) + ")";
  }
  return "";
}

GenWord GenWord::parse(std::string_view text) {
  GenWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) w.tokens.push_back(parse_token(tok));
  return w;
}

std::string GenWord::str() const {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += " ";
    out += t.str();
  }
  return out;
}

GenWord pbw_word(const IntMatZ& a, const Composition& j) {
  if (!a.offdiag_nonneg()) throw std::invalid_argument("pbw_word: negative entry in " + a.str());
  for (const auto& c : a.cells())
    if (c.i == c.j) throw std::invalid_argument("pbw_word: nonzero diagonal in " + a.str());
  GenWord w;
  auto steps = factor_order(a);
  for (const auto& s : steps)
    if (s.dir == Direction::upper) w.tokens.push_back(GenToken::e(s.h, s.b));
  if (!j.is_zero()) w.tokens.push_back(GenToken::k(j));
  for (const auto& s : steps)
    if (s.dir == Direction::lower) w.tokens.push_back(GenToken::f(s.h, s.b));
  return w;
}

VElem VElem::basis(const IntMatZ& a, const Composition& j, Entry r, const LaurentFrac& c) {
  VElem x(r);
  x.add(a, j, c);
  return x;
}

void VElem::add(const IntMatZ& a, const Composition& j, const LaurentFrac& c) {
  if (!a.is_nonneg()) throw std::invalid_argument("VElem: negative entry in " + a.str());
  for (const auto& cell : a.cells())
    if (cell.i == cell.j) throw std::invalid_argument("VElem: nonzero diagonal in " + a.str());
  if (c.is_zero() || stats(a).sigma > r_) return;
  auto [it, inserted] = terms_.try_emplace({a, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string VElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string cs = c.str();
    if (cs != "1") out += "(" + cs + ")*";
    out += "(" + key.first.str() + ")(" + key.second.str() + "," + std::to_string(r_) + ")";
  }
  return out;
}

VElem act_gen(const GenToken& g, const VElem& x) {
  VElem out(x.degree());
  if (g.kind == GenToken::Kind::k) {
    for (const auto& [key, c] : x.terms()) {
      const auto& [a, j] = key;
      out.add(a, g.j + j, c.shifted(static_cast<int>(g.j.dot(ro(a)))));
    }
    return out;
  }
  if (g.kind == GenToken::Kind::kbinom || g.m != 1) throw std::invalid_argument("act_gen: expects K^j, E_h or F_h");
  const int h = g.h;
  const Composition alpha = Composition::alpha(h), beta = Composition::beta(h);
  // 1/(1 - v^-2) = v^2/(v^2 - 1)
  const LaurentFrac inv_diff(LaurentInt::v(2), LaurentInt::v(2) - LaurentInt(1));
  auto v = [](Entry e) { return LaurentInt::v(static_cast<int>(e)); };
  for (const auto& [key, c] : x.terms()) {
    const auto& [a, j] = key;
    if (g.kind == GenToken::Kind::e) {
      auto f = [&](int i) {
        return row_sum(a, h, [&](int col) { return col >= i; }) - row_sum(a, h + 1, [&](int col) { return col > i; });
      };
      for (const auto& cell : a.cells()) {
        if (cell.i != h + 1) continue;
        const int i = cell.j;
        if (i < h || i > h + 1) {
          IntMatZ b = a;
          b.add(h, i, 1);
          b.add(h + 1, i, -1);
          LaurentInt coef = v(f(i)) * gauss2_bar(a(h, i) + 1, 1);
          out.add(b, i < h ? j + alpha : j, c * LaurentFrac(coef));
        } else if (i == h) {
          IntMatZ b = a;
          b.add(h + 1, h, -1);
          LaurentFrac coef = c * inv_diff * LaurentFrac(v(f(h) - j[h] - 1));
          out.add(b, j + alpha, coef);
          out.add(b, j + beta, -coef);
        }
      }
      IntMatZ b = a;
      b.add(h, h + 1, 1);
      out.add(b, j, c * LaurentFrac(v(f(h + 1) + j[h + 1]) * gauss2_bar(a(h, h + 1) + 1, 1)));
    } else {
      auto f = [&](int i) {
        return row_sum(a, h + 1, [&](int col) { return col <= i; }) - row_sum(a, h, [&](int col) { return col < i; });
      };
      for (const auto& cell : a.cells()) {
        if (cell.i != h) continue;
        const int i = cell.j;
        if (i < h || i > h + 1) {
          IntMatZ b = a;
          b.add(h, i, -1);
          b.add(h + 1, i, 1);
          LaurentInt coef = v(f(i)) * gauss2_bar(a(h + 1, i) + 1, 1);
          out.add(b, i < h ? j : j - alpha, c * LaurentFrac(coef));
        } else if (i == h + 1) {
          IntMatZ b = a;
          b.add(h, h + 1, -1);
          LaurentFrac coef = c * inv_diff * LaurentFrac(v(f(h + 1) - j[h + 1] - 1));
          out.add(b, j - alpha, coef);
          out.add(b, j + beta, -coef);
        }
      }
      IntMatZ b = a;
      b.add(h + 1, h, 1);
      out.add(b, j, c * LaurentFrac(v(f(h) + j[h]) * gauss2_bar(a(h + 1, h) + 1, 1)));
    }
  }
  return out;
}

SchurElem project_window(const VElem& x, const Window& w) {
  // Numerators grouped by denominator so that each matrix needs one fraction sum at the end.
  std::map<IntMatZ, std::map<LaurentInt, LaurentInt, TermsLess>> acc;
  for (const auto& [key, c] : x.terms()) {
    const auto& [a, j] = key;
    if (!a.supported_in(w)) throw std::invalid_argument("project_window: " + a.str() + " escapes " + w.str());
    Entry rest = x.degree() - stats(a).sigma;
    for (const auto& lam : enum_compositions(w, rest)) {
      IntMatZ m = a + IntMatZ::diag(lam);
      auto& slot = acc[m];
      auto [it, inserted] = slot.try_emplace(c.den(), c.num().shifted(static_cast<int>(lam.dot(j))));
      if (!inserted) it->second += c.num().shifted(static_cast<int>(lam.dot(j)));
    }
  }
  SchurElem out(w, x.degree());
  for (const auto& [m, by_den] : acc) {
    LaurentFrac total;
    for (const auto& [den, num] : by_den)
      if (!num.is_zero()) total += LaurentFrac(num, den);
    try {
      out.add(m, total.to_laurent());
    } catch (const InexactDivision&) {
      throw InexactDivision("project_window: coefficient of " + m.str() + " is not a Laurent polynomial");
    }
  }
  return out;
}

SchurElem generator_image(const GenToken& g, const Window& w, Entry r) {
  auto need = [&](bool ok) {
    if (!ok) throw std::invalid_argument("generator " + g.str() + " lies outside window " + w.str());
  };
  switch (g.kind) {
    case GenToken::Kind::e:
    case GenToken::Kind::f: {
      need(w.contains(g.h) && w.contains(g.h + 1));
      IntMatZ a;
      if (g.kind == GenToken::Kind::e)
        a.set(g.h, g.h + 1, g.m);
      else
        a.set(g.h + 1, g.h, g.m);
      return project_window(VElem::basis(a, {}, r), w);
    }
    case GenToken::Kind::k:
      need(g.j.supported_in(w));
      return project_window(VElem::basis(IntMatZ(), g.j, r), w);
    case GenToken::Kind::kbinom: {
      need(w.contains(g.h));
      SchurElem out(w, r);
      for (const auto& lam : enum_compositions(w, r)) out.add(IntMatZ::diag(lam), balanced_binom(lam[g.h] + g.c, g.t));
      return out;
    }
  }
  return SchurElem(w, r);
}

SchurElem evaluate_word(const GenWord& word, const Window& w, Entry r) {
  SchurElem out = SchurElem::identity(w, r);
  for (const auto& g : word.tokens) out = multiply(out, generator_image(g, w, r));
  return out;
}

SchurElem m_monomial(const IntMatZ& a, const Window& w, Entry r) {
  if (!a.is_nonneg() || !a.supported_in(w) || stats(a).sigma != r)
    throw std::invalid_argument("m_monomial: " + a.str() + " is not in Xi(" + w.str() + ", " + std::to_string(r) + ")");
  PmSplit parts = split_pm(a);
  SchurElem mid = SchurElem::basis(w, IntMatZ::diag(bold_sigma(a)));
  return multiply(multiply(evaluate_word(pbw_word(parts.plus), w, r), mid), evaluate_word(pbw_word(parts.minus), w, r));
}

SchurElem h_element(const Composition& lambda, int n, const Window& w, Entry r) {
  SchurElem out(w, r);
  for (const auto& mu : enum_compositions(w, r)) {
    bool agree = true;
    for (int i = -n; i <= n - 1 && agree; ++i) agree = mu[i] == lambda[i];
    if (agree) out.add(IntMatZ::diag(mu), 1);
  }
  return out;
}

}  // namespace qschur
