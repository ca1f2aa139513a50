#include "qschur/ring.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace qschur {

namespace {

using Poly = std::vector<BigInt>;  // ascending coefficients

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly to_poly(const LaurentInt& a) {
  Poly p;
  if (a.is_zero()) return p;
  int lo = a.min_exp();
  p.assign(a.max_exp() - lo + 1, BigInt(0));
  for (const auto& [e, c] : a.terms()) p[e - lo] = c;
  return p;
}

BigInt poly_content(const Poly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    if (c != 0) g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Poly& p) {
  BigInt g = poly_content(p);
  if (g > 1)
    for (auto& c : p) c /= g;
}

Poly pseudo_rem(Poly a, const Poly& b) {
  const BigInt& lc = b.back();
  const size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    BigInt lead = a.back();
    size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lc;
    for (size_t i = 0; i <= db; ++i) a[i + shift] -= lead * b[i];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  BigInt c = boost::multiprecision::gcd(poly_content(a), poly_content(b));
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = Poly{1};
      break;
    }
    Poly r = pseudo_rem(a, b);
    a = std::move(b);
    make_primitive(r);
    b = std::move(r);
  }
  make_primitive(a);
  for (auto& x : a) x *= c;
  return a;
}

LaurentInt from_poly(const Poly& p, int shift) {
  LaurentInt out;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) out += LaurentInt::monomial(static_cast<int>(i) + shift, p[i]);
  return out;
}

}  // namespace

LaurentInt::LaurentInt(long long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

LaurentInt::LaurentInt(const BigInt& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentInt LaurentInt::monomial(int e, const BigInt& c) {
  LaurentInt out;
  if (c != 0) out.terms_.emplace_back(e, c);
  return out;
}

bool LaurentInt::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

int LaurentInt::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.front().first;
}

int LaurentInt::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.back().first;
}

BigInt LaurentInt::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

LaurentInt LaurentInt::bar() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) t.emplace_back(-it->first, it->second);
  return LaurentInt(std::move(t));
}

LaurentInt LaurentInt::shifted(int k) const {
  LaurentInt out = *this;
  for (auto& t : out.terms_) t.first += k;
  return out;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == ae || b->first < a->first) {
      out.push_back(*b++);
    } else {
      BigInt c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) { return *this += -o; }

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentInt out = a;
    for (auto& t : out.terms_) {
      t.first += b.terms_[0].first;
      t.second *= b.terms_[0].second;
    }
    return out;
  }
  if (a.terms_.size() == 1) return b * a;
  const int lo = a.min_exp() + b.min_exp();
  std::vector<BigInt> acc(a.max_exp() + b.max_exp() - lo + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb - lo] += ca * cb;
  std::vector<LaurentInt::Term> out;
  for (size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.emplace_back(static_cast<int>(i) + lo, std::move(acc[i]));
  return LaurentInt(std::move(out));
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& o) { return *this = *this * o; }

bool LaurentInt::try_divide(const LaurentInt& d, LaurentInt& quotient) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) {
    quotient = LaurentInt();
    return true;
  }
  if (d.terms_.size() == 1) {
    const auto& [de, dc] = d.terms_[0];
    std::vector<Term> q;
    q.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
      if (c % dc != 0) return false;
      q.emplace_back(e - de, c / dc);
    }
    quotient = LaurentInt(std::move(q));
    return true;
  }
  Poly r = to_poly(*this);
  Poly dp = to_poly(d);
  if (r.size() < dp.size()) return false;
  const BigInt& lc = dp.back();
  const size_t dd = dp.size() - 1;
  Poly q(r.size() - dd, BigInt(0));
  for (size_t k = r.size(); k-- > dd;) {
    if (r[k] == 0) continue;
    if (r[k] % lc != 0) return false;
    BigInt c = r[k] / lc;
    for (size_t i = 0; i <= dd; ++i) r[k - dd + i] -= c * dp[i];
    q[k - dd] = std::move(c);
  }
  for (const auto& c : r)
    if (c != 0) return false;
  quotient = from_poly(q, min_exp() - d.min_exp());
  return true;
}

LaurentInt LaurentInt::exact_div(const LaurentInt& d) const {
  LaurentInt q;
  if (!try_divide(d, q)) throw InexactDivision("inexact division: (" + str() + ") / (" + d.str() + ")");
  return q;
}

BigRat LaurentInt::eval(const BigRat& x) const {
  BigRat out = 0;
  for (const auto& [e, c] : terms_) {
    BigRat p = 1;
    BigRat base = e >= 0 ? x : BigRat(1) / x;
    for (int k = 0; k < std::abs(e); ++k) p *= base;
    out += BigRat(c) * p;
  }
  return out;
}

BigInt LaurentInt::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) g = boost::multiprecision::gcd(g, t.second);
  return g;
}

std::string LaurentInt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentInt LaurentInt::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
  size_t i = 0;
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("bad Laurent polynomial '") + std::string(text) + "': " + why);
  };
  auto read_int = [&](bool allow_sign) {
    size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail("expected digits");
    return s.substr(start, i - start);
  };
  LaurentInt out;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    BigInt coef = 1;
    bool has_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = BigInt(read_int(false));
      has_coef = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != 'v') fail("expected 'v' after '*'");
      }
    }
    int e = 0;
    if (i < s.size() && s[i] == 'v') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool paren = i < s.size() && s[i] == '(';
        if (paren) ++i;
        e = std::stoi(read_int(true));
        if (paren) {
          if (i >= s.size() || s[i] != ')') fail("expected ')'");
          ++i;
        }
      }
    } else if (!has_coef) {
      fail("expected a term");
    }
    out += monomial(e, sign * coef);
  }
  return out;
}

LaurentFrac::LaurentFrac(LaurentInt n, LaurentInt d) : num_(std::move(n)), den_(std::move(d)) {
  normalize();
}

void LaurentFrac::normalize() {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const int s = -den_.min_exp();
  num_ = num_.shifted(s);
  den_ = den_.shifted(s);
  if (den_.is_constant()) {
    BigInt c = den_.coeff(0);
    BigInt g = boost::multiprecision::gcd(num_.content(), c);
    if (c < 0) g = -g;
    num_ = num_.exact_div(LaurentInt(g));
    den_ = LaurentInt(c / g);
    return;
  }
  Poly g = poly_gcd(to_poly(num_), to_poly(den_));
  if (!(g.size() == 1 && g[0] == 1)) {
    LaurentInt gl = from_poly(g, 0);
    num_ = num_.exact_div(gl);
    den_ = den_.exact_div(gl);
  }
  if (den_.terms().front().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

LaurentInt LaurentFrac::to_laurent() const {
  if (!is_laurent()) throw InexactDivision("not a Laurent polynomial: " + str());
  return num_;
}

LaurentFrac& LaurentFrac::operator+=(const LaurentFrac& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

LaurentFrac LaurentFrac::operator-() const { return LaurentFrac(-num_, den_, Reduced{}); }

LaurentFrac& LaurentFrac::operator-=(const LaurentFrac& o) { return *this += -o; }

LaurentFrac& LaurentFrac::operator*=(const LaurentFrac& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

LaurentFrac& LaurentFrac::operator/=(const LaurentFrac& o) {
  if (o.is_zero()) throw std::domain_error("division by zero fraction");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string LaurentFrac::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

BiLaurent::BiLaurent(long long c) : BiLaurent(LaurentFrac(c)) {}
BiLaurent::BiLaurent(const LaurentInt& c) : BiLaurent(LaurentFrac(c)) {}
BiLaurent::BiLaurent(const LaurentFrac& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

BiLaurent BiLaurent::monomial(int e, const LaurentFrac& c) {
  if (e < 0 || e % 2 != 0) throw std::invalid_argument("v' exponent must be even and nonnegative");
  BiLaurent out;
  if (!c.is_zero()) out.terms_.emplace(e, c);
  return out;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

BiLaurent BiLaurent::operator-() const {
  BiLaurent out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) { return *this += -o; }

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  BiLaurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out += BiLaurent::monomial(ea + eb, ca * cb);
  return out;
}

BiLaurent operator*(const LaurentInt& a, const BiLaurent& b) {
  BiLaurent out;
  if (a.is_zero()) return out;
  for (const auto& [e, c] : b.terms_) out.terms_.emplace(e, LaurentFrac(a * c.num(), c.den()));
  return out;
}

LaurentInt BiLaurent::at_vpow(int a) const {
  LaurentFrac sum;
  for (const auto& [e, c] : terms_) sum += c.shifted(-a * e);
  if (!sum.is_laurent())
    throw InexactDivision("not in Z1 at this specialization (v' = v^" + std::to_string(-a) + "): " + str());
  return sum.num();
}

LaurentInt BiLaurent::at_one() const {
  LaurentFrac sum;
  for (const auto& [e, c] : terms_) sum += c;
  if (!sum.is_laurent()) throw InexactDivision("not in Z1 at this specialization (v' = 1): " + str());
  return sum.num();
}

std::string BiLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string c = it->second.str();
    bool compound = c.find(' ') != std::string::npos || c.find('/') != std::string::npos;
    if (it->first == 0) {
      out += compound && terms_.size() > 1 ? "(" + c + ")" : c;
      continue;
    }
    if (c != "1") out += (compound ? "(" + c + ")" : c) + "*";
    out += "v'^" + std::to_string(it->first);
  }
  return out;
}

LaurentInt qint(int t) {
  if (t < 0) throw std::invalid_argument("qint: negative argument");
  LaurentInt out;
  for (int k = 0; k < t; ++k) out += LaurentInt::v(t - 1 - 2 * k);
  return out;
}

LaurentInt qfact(int m) {
  LaurentInt out = 1;
  for (int t = 1; t <= m; ++t) out *= qint(t);
  return out;
}

LaurentInt gauss2(long long n, int t) {
  if (t < 0) throw std::invalid_argument("gauss2: negative t");
  LaurentInt num = 1, den = 1;
  for (int i = 1; i <= t; ++i) {
    num *= LaurentInt::v(static_cast<int>(2 * (n - i + 1))) - 1;
    den *= LaurentInt::v(2 * i) - 1;
  }
  return num.exact_div(den);
}

const LaurentInt& gauss2_bar(long long n, int t) {
  static std::mutex mu;
  static std::map<std::pair<long long, int>, LaurentInt> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, t);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, gauss2(n, t).bar()).first;
  return it->second;
}

LaurentInt balanced_binom(long long a, int t) {
  if (t < 0) throw std::invalid_argument("balanced_binom: negative t");
  LaurentInt num = 1, den = 1;
  for (int s = 1; s <= t; ++s) {
    int e = static_cast<int>(a - s + 1);
    num *= LaurentInt::v(e) - LaurentInt::v(-e);
    den *= LaurentInt::v(s) - LaurentInt::v(-s);
  }
  return num.exact_div(den);
}

LaurentInt bracket_fact_eval(long long lambda, int t) {
  if (t < 0) throw std::invalid_argument("bracket_fact_eval: negative t");
  LaurentInt out = 1;
  for (int s = 0; s < t; ++s) out *= LaurentInt::v(static_cast<int>(lambda)) - LaurentInt::v(s);
  return out;
}

BiLaurent stab_binom(const std::vector<long long>& c) {
  // Numerator as a polynomial in v'^2 with Laurent coefficients, one common denominator.
  std::vector<LaurentInt> num{LaurentInt(1)};
  LaurentInt den = 1;
  for (size_t j = 1; j <= c.size(); ++j) {
    LaurentInt lead = LaurentInt::v(static_cast<int>(-2 * c[j - 1]));
    std::vector<LaurentInt> next(num.size() + 1);
    for (size_t k = 0; k < num.size(); ++k) {
      next[k + 1] += lead * num[k];
      next[k] -= num[k];
    }
    num = std::move(next);
    den *= LaurentInt::v(-2 * static_cast<int>(j)) - 1;
  }
  BiLaurent out;
  for (size_t k = 0; k < num.size(); ++k)
    out += BiLaurent::monomial(static_cast<int>(2 * k), LaurentFrac(num[k], den));
  return out;
}

BigRat eval_q(const LaurentInt& p, long long q) {
  BigRat out = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) throw std::domain_error("eval_q: odd exponent in " + p.str());
    BigRat x = 1;
    BigRat base = e >= 0 ? BigRat(q) : BigRat(1, q);
    for (int k = 0; k < std::abs(e) / 2; ++k) x *= base;
    out += BigRat(c) * x;
  }
  return out;
}

}  // namespace qschur
