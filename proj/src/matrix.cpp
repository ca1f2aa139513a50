#include "qschur/matrix.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qschur {

Window::Window(int m, int n) : lo(m), hi(n) {
  if (m > n) throw std::invalid_argument("empty window " + std::to_string(m) + ":" + std::to_string(n));
}

Window Window::all() {
  Window w;
  w.infinite = true;
  return w;
}

Window Window::parse(std::string_view text) {
  std::string s(text);
  auto colon = s.find(':', s.empty() || s[0] != '-' ? 0 : 1);
  if (colon == std::string::npos) throw std::invalid_argument("window must be m:n, got '" + s + "'");
  try {
    size_t p1 = 0, p2 = 0;
    int m = std::stoi(s.substr(0, colon), &p1);
    int n = std::stoi(s.substr(colon + 1), &p2);
    if (p1 != colon || p2 != s.size() - colon - 1) throw std::invalid_argument("trailing characters");
    return Window(m, n);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("window must be m:n, got '" + s + "'");
  }
}

std::string Window::str() const {
  if (infinite) return "Z";
  return std::to_string(lo) + ":" + std::to_string(hi);
}

Composition::Composition(std::initializer_list<Part> parts) {
  for (const auto& [i, x] : parts) add(i, x);
}

Composition Composition::from_sequence(int first, const std::vector<Entry>& seq) {
  Composition c;
  for (size_t k = 0; k < seq.size(); ++k) c.set(first + static_cast<int>(k), seq[k]);
  return c;
}

Composition Composition::alpha(int h) { return Composition{{h, 1}, {h + 1, -1}}; }
Composition Composition::beta(int h) { return Composition{{h, -1}, {h + 1, -1}}; }

Composition Composition::varpi(int r) {
  Composition c;
  for (int i = 1; i <= r; ++i) c.set(i, 1);
  return c;
}

Entry Composition::operator[](int i) const {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), i,
                             [](const Part& p, int x) { return p.first < x; });
  return it != parts_.end() && it->first == i ? it->second : 0;
}

void Composition::set(int i, Entry x) {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), i,
                             [](const Part& p, int y) { return p.first < y; });
  if (it != parts_.end() && it->first == i) {
    if (x == 0)
      parts_.erase(it);
    else
      it->second = x;
  } else if (x != 0) {
    parts_.insert(it, {i, x});
  }
}

Entry Composition::sum() const {
  Entry s = 0;
  for (const auto& p : parts_) s += p.second;
  return s;
}

bool Composition::is_nonneg() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Part& p) { return p.second >= 0; });
}

bool Composition::supported_in(const Window& w) const {
  return std::all_of(parts_.begin(), parts_.end(), [&](const Part& p) { return w.contains(p.first); });
}

bool Composition::leq(const Composition& o) const {
  Composition d = o - *this;
  return d.is_nonneg();
}

Entry Composition::dot(const Composition& o) const {
  Entry s = 0;
  for (const auto& [i, x] : parts_) s += x * o[i];
  return s;
}

Composition& Composition::operator+=(const Composition& o) {
  for (const auto& [i, x] : o.parts_) add(i, x);
  return *this;
}

Composition& Composition::operator-=(const Composition& o) {
  for (const auto& [i, x] : o.parts_) add(i, -x);
  return *this;
}

Composition Composition::operator-() const {
  Composition c;
  c -= *this;
  return c;
}

std::vector<Entry> Composition::on(const Window& w) const {
  std::vector<Entry> out;
  for (int i = w.lo; i <= w.hi; ++i) out.push_back((*this)[i]);
  return out;
}

std::string Composition::str() const {
  std::string out = "[";
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ",";
    out += "[" + std::to_string(parts_[k].first) + "," + std::to_string(parts_[k].second) + "]";
  }
  return out + "]";
}

IntMatZ::IntMatZ(std::initializer_list<Cell> cells) {
  for (const auto& c : cells) add(c.i, c.j, c.a);
}

IntMatZ IntMatZ::unit(int i, int j, Entry a) {
  IntMatZ m;
  m.set(i, j, a);
  return m;
}

IntMatZ IntMatZ::diag(const Composition& d) {
  IntMatZ m;
  for (const auto& [i, x] : d.parts()) m.set(i, i, x);
  return m;
}

IntMatZ IntMatZ::identity(const Window& w) {
  IntMatZ m;
  for (int i = w.lo; i <= w.hi; ++i) m.set(i, i, 1);
  return m;
}

namespace {
bool cell_before(const IntMatZ::Cell& c, std::pair<int, int> key) {
  return std::make_pair(c.i, c.j) < key;
}
}  // namespace

Entry IntMatZ::operator()(int i, int j) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), std::make_pair(i, j), cell_before);
  return it != cells_.end() && it->i == i && it->j == j ? it->a : 0;
}

void IntMatZ::set(int i, int j, Entry x) {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), std::make_pair(i, j), cell_before);
  if (it != cells_.end() && it->i == i && it->j == j) {
    if (x == 0)
      cells_.erase(it);
    else
      it->a = x;
  } else if (x != 0) {
    cells_.insert(it, Cell{i, j, x});
  }
}

bool IntMatZ::is_nonneg() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.a >= 0; });
}

bool IntMatZ::is_diagonal() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.i == c.j; });
}

bool IntMatZ::offdiag_nonneg() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.i == c.j || c.a >= 0; });
}

bool IntMatZ::has_zero_diagonal() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.i != c.j; });
}

std::optional<Window> IntMatZ::hull() const {
  if (cells_.empty()) return std::nullopt;
  int lo = cells_.front().i, hi = lo;
  for (const auto& c : cells_) {
    lo = std::min({lo, c.i, c.j});
    hi = std::max({hi, c.i, c.j});
  }
  return Window(lo, hi);
}

bool IntMatZ::supported_in(const Window& w) const {
  return std::all_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return w.contains(c.i) && w.contains(c.j); });
}

IntMatZ IntMatZ::transpose() const {
  IntMatZ t;
  for (const auto& c : cells_) t.set(c.j, c.i, c.a);
  return t;
}

IntMatZ& IntMatZ::operator+=(const IntMatZ& o) {
  for (const auto& c : o.cells_) add(c.i, c.j, c.a);
  return *this;
}

IntMatZ& IntMatZ::operator-=(const IntMatZ& o) {
  for (const auto& c : o.cells_) add(c.i, c.j, -c.a);
  return *this;
}

IntMatZ operator*(Entry k, const IntMatZ& a) {
  IntMatZ out;
  for (const auto& c : a.cells_) out.set(c.i, c.j, k * c.a);
  return out;
}

std::string IntMatZ::str() const {
  if (cells_.empty()) return "0";
  std::string out;
  for (const auto& c : cells_) {
    Entry mag = c.a < 0 ? -c.a : c.a;
    if (c.a < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (mag != 1) out += std::to_string(mag);
    bool compact = c.i >= 1 && c.i <= 9 && c.j >= 1 && c.j <= 9;
    out += compact ? "E" + std::to_string(c.i) + std::to_string(c.j)
                   : "E(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
  }
  return out;
}

Composition ro(const IntMatZ& a) {
  Composition c;
  for (const auto& cell : a.cells()) c.add(cell.i, cell.a);
  return c;
}

Composition co(const IntMatZ& a) {
  Composition c;
  for (const auto& cell : a.cells()) c.add(cell.j, cell.a);
  return c;
}

Entry d_twist(const IntMatZ& a) {
  Entry d = 0;
  for (const auto& x : a.cells())
    for (const auto& y : a.cells())
      if (x.i >= y.i && x.j < y.j) d += x.a * y.a;
  return d;
}

Entry norm(const IntMatZ& a) {
  Entry n = 0;
  for (const auto& c : a.cells()) {
    if (c.i == c.j) continue;
    Entry k = std::abs(c.j - c.i) + 1;
    n += k * (k - 1) / 2 * c.a;
  }
  return n;
}

MatStats stats(const IntMatZ& a) {
  MatStats s;
  for (const auto& c : a.cells()) {
    s.sigma += c.a;
    s.deg += std::abs(c.j - c.i) * c.a;
  }
  s.norm = norm(a);
  s.d = d_twist(a);
  return s;
}

Entry corner_sum(const IntMatZ& a, int i, int j) {
  Entry s = 0;
  for (const auto& c : a.cells()) {
    if (i < j && c.i <= i && c.j >= j) s += c.a;
    if (i > j && c.i >= i && c.j <= j) s += c.a;
  }
  return s;
}

Order preceq(const IntMatZ& b, const IntMatZ& a) {
  auto hb = b.hull(), ha = a.hull();
  if (!hb && !ha) return Order::equal;
  int lo = std::min(hb ? hb->lo : ha->lo, ha ? ha->lo : hb->lo);
  int hi = std::max(hb ? hb->hi : ha->hi, ha ? ha->hi : hb->hi);
  bool le = true, ge = true;
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j) {
      if (i == j) continue;
      Entry sb = corner_sum(b, i, j), sa = corner_sum(a, i, j);
      if (sb > sa) le = false;
      if (sb < sa) ge = false;
    }
  if (le && ge) return Order::equal;
  if (le) return Order::less;
  if (ge) return Order::greater;
  return Order::incomparable;
}

bool strictly_below(const IntMatZ& b, const IntMatZ& a) { return preceq(b, a) == Order::less; }

bool report_before(const IntMatZ& a, const IntMatZ& b) {
  Entry na = norm(a), nb = norm(b);
  if (na != nb) return na < nb;
  return a < b;
}

PmSplit split_pm(const IntMatZ& a) {
  PmSplit s;
  for (const auto& c : a.cells()) {
    if (c.i < c.j)
      s.plus.set(c.i, c.j, c.a);
    else if (c.i > c.j)
      s.minus.set(c.i, c.j, c.a);
    else
      s.zero.set(c.i, c.j, c.a);
  }
  return s;
}

Composition bold_sigma(const IntMatZ& a) {
  Composition s;
  for (const auto& c : a.cells()) s.add(std::max(c.i, c.j), c.a);
  return s;
}

IntMatZ a_shift(const IntMatZ& a, Entry shift, const Window& w) {
  if (!a.supported_in(w)) throw std::invalid_argument("a_shift: window " + w.str() + " does not contain support");
  IntMatZ out = a;
  for (int i = w.lo; i <= w.hi; ++i) out.add(i, i, shift);
  return out;
}

IntMatZ restrict_to(const IntMatZ& a, const Window& w) {
  IntMatZ out;
  for (const auto& c : a.cells())
    if (w.contains(c.i) && w.contains(c.j)) out.set(c.i, c.j, c.a);
  return out;
}

std::vector<Composition> enum_compositions(const Window& w, Entry r, const std::optional<Composition>& bound) {
  std::vector<Composition> out;
  if (w.infinite) throw std::invalid_argument("enum_compositions needs a finite window");
  if (r < 0) return out;
  std::vector<Entry> cur(w.size(), 0);
  std::function<void(int, Entry)> rec = [&](int k, Entry left) {
    int idx = w.lo + k;
    if (k == w.size() - 1) {
      if (bound && left > (*bound)[idx]) return;
      cur[k] = left;
      out.push_back(Composition::from_sequence(w.lo, cur));
      return;
    }
    Entry top = bound ? std::min(left, (*bound)[idx]) : left;
    for (Entry x = top; x >= 0; --x) {
      cur[k] = x;
      rec(k + 1, left - x);
    }
  };
  rec(0, r);
  return out;
}

namespace {

std::vector<IntMatZ> fill_cells(const std::vector<std::pair<int, int>>& cells, Entry r, bool exact) {
  std::vector<IntMatZ> out;
  IntMatZ cur;
  std::function<void(size_t, Entry)> rec = [&](size_t k, Entry left) {
    if (k == cells.size()) {
      if (!exact || left == 0) out.push_back(cur);
      return;
    }
    for (Entry x = 0; x <= left; ++x) {
      cur.set(cells[k].first, cells[k].second, x);
      rec(k + 1, left - x);
    }
    cur.set(cells[k].first, cells[k].second, 0);
  };
  rec(0, r);
  return out;
}

}  // namespace

std::vector<IntMatZ> enum_matrices(const Window& w, Entry r) {
  std::vector<std::pair<int, int>> cells;
  for (int i = w.lo; i <= w.hi; ++i)
    for (int j = w.lo; j <= w.hi; ++j) cells.emplace_back(i, j);
  return fill_cells(cells, r, true);
}

std::vector<IntMatZ> enum_matrices(const Composition& rows, const Composition& cols) {
  std::vector<IntMatZ> out;
  if (rows.sum() != cols.sum() || !rows.is_nonneg() || !cols.is_nonneg()) return out;
  std::vector<int> ri, cj;
  for (const auto& p : rows.parts()) ri.push_back(p.first);
  for (const auto& p : cols.parts()) cj.push_back(p.first);
  std::vector<Entry> col_left;
  for (const auto& p : cols.parts()) col_left.push_back(p.second);
  IntMatZ cur;
  std::function<void(size_t, size_t, Entry)> rec = [&](size_t r, size_t c, Entry row_left) {
    if (r == ri.size()) {
      out.push_back(cur);
      return;
    }
    if (c == cj.size() - 1) {
      if (row_left > col_left[c]) return;
      cur.set(ri[r], cj[c], row_left);
      col_left[c] -= row_left;
      if (r + 1 < ri.size())
        rec(r + 1, 0, rows[ri[r + 1]]);
      else
        rec(r + 1, 0, 0);
      col_left[c] += row_left;
      cur.set(ri[r], cj[c], 0);
      return;
    }
    for (Entry x = std::min(row_left, col_left[c]); x >= 0; --x) {
      cur.set(ri[r], cj[c], x);
      col_left[c] -= x;
      rec(r, c + 1, row_left - x);
      col_left[c] += x;
    }
    cur.set(ri[r], cj[c], 0);
  };
  if (ri.empty()) return {IntMatZ()};
  rec(0, 0, rows[ri[0]]);
  return out;
}

std::vector<IntMatZ> enum_offdiag(const Window& w, Entry max_sigma) {
  std::vector<std::pair<int, int>> cells;
  for (int i = w.lo; i <= w.hi; ++i)
    for (int j = w.lo; j <= w.hi; ++j)
      if (i != j) cells.emplace_back(i, j);
  auto out = fill_cells(cells, max_sigma, false);
  std::sort(out.begin(), out.end(), report_before);
  return out;
}

namespace {

[[noreturn]] void bad_literal(std::string_view text, const std::string& why) {
  throw std::invalid_argument("malformed literal '" + std::string(text) + "': " + why);
}

std::vector<long long> int_list(std::string_view text, size_t& i, std::string_view whole) {
  std::vector<long long> out;
  if (i >= text.size() || text[i] != '(') bad_literal(whole, "expected '('");
  ++i;
  while (true) {
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (digits == i) bad_literal(whole, "expected integer");
    out.push_back(std::stoll(std::string(text.substr(start, i - start))));
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ')') {
      ++i;
      return out;
    }
    bad_literal(whole, "expected ',' or ')'");
  }
}

}  // namespace

IntMatZ parse_matrix(std::string_view text, int diag_start) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) bad_literal(text, "empty");
  if (s[0] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      bad_literal(text, e.what());
    }
    if (!j.is_array()) bad_literal(text, "expected a list of [i,j,a] triples");
    IntMatZ m;
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
          !t[2].is_number_integer())
        bad_literal(text, "expected [i,j,a] integer triples");
      m.add(t[0].get<int>(), t[1].get<int>(), t[2].get<Entry>());
    }
    return m;
  }
  if (s == "0") return IntMatZ();
  IntMatZ m;
  size_t i = 0;
  while (i < s.size()) {
    Entry sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      bad_literal(text, "expected '+' or '-'");
    }
    Entry mult = 1;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > digits) mult = std::stoll(s.substr(digits, i - digits));
    if (i >= s.size()) bad_literal(text, "expected 'E' or 'D'");
    char kind = s[i++];
    if (kind == 'E') {
      int r, c;
      if (i < s.size() && s[i] == '(') {
        auto v = int_list(s, i, text);
        if (v.size() != 2) bad_literal(text, "E(i,j) takes two indices");
        r = static_cast<int>(v[0]);
        c = static_cast<int>(v[1]);
      } else {
        if (i + 1 >= s.size() + 0 || !std::isdigit(static_cast<unsigned char>(s[i])) ||
            !std::isdigit(static_cast<unsigned char>(s[i + 1])))
          bad_literal(text, "E needs two digits or E(i,j)");
        r = s[i] - '0';
        c = s[i + 1] - '0';
        i += 2;
      }
      m.add(r, c, sign * mult);
    } else if (kind == 'D') {
      auto v = int_list(s, i, text);
      for (size_t k = 0; k < v.size(); ++k) {
        int idx = diag_start + static_cast<int>(k);
        m.add(idx, idx, sign * mult * v[k]);
      }
    } else {
      bad_literal(text, std::string("unknown symbol '") + kind + "'");
    }
  }
  return m;
}

Composition parse_composition(std::string_view text, int start) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) bad_literal(text, "empty composition");
  if (s[0] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      bad_literal(text, e.what());
    }
    if (!j.is_array()) bad_literal(text, "expected a list");
    Composition c;
    std::vector<Entry> seq;
    bool pairs = !j.empty() && j[0].is_array();
    for (const auto& t : j) {
      if (pairs) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_number_integer())
          bad_literal(text, "expected [i,x] integer pairs");
        c.add(t[0].get<int>(), t[1].get<Entry>());
      } else {
        if (!t.is_number_integer()) bad_literal(text, "expected integers");
        seq.push_back(t.get<Entry>());
      }
    }
    return pairs ? c : Composition::from_sequence(start, seq);
  }
  if (s.front() != '(') s = "(" + s + ")";
  size_t i = 0;
  auto v = int_list(s, i, text);
  if (i != s.size()) bad_literal(text, "trailing characters");
  return Composition::from_sequence(start, std::vector<Entry>(v.begin(), v.end()));
}

std::string matrix_json(const IntMatZ& a) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : a.cells()) j.push_back({c.i, c.j, c.a});
  return j.dump();
}

}  // namespace qschur
