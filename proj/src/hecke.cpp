#include "qschur/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qschur {

namespace {

template <class Map, class Key, class Coef>
void add_term(Map& m, const Key& key, const Coef& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

std::string coef_prefix(const LaurentInt& c) {
  if (c == LaurentInt(1)) return "";
  if (c == LaurentInt(-1)) return "-";
  return "(" + c.str() + ")*";
}

// v - v^-1
const LaurentInt& quad() {
  static const LaurentInt q = LaurentInt::v(1) - LaurentInt::v(-1);
  return q;
}

}  // namespace

Perm::Perm(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<int> seen(w_.size() + 1, 0);
  for (int x : w_) {
    if (x < 1 || x > size() || seen[x]++) throw std::invalid_argument("not a permutation");
  }
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (w_[i] > w_[j]) ++len_;
}

Perm Perm::identity(int r) {
  std::vector<int> w(r);
  std::iota(w.begin(), w.end(), 1);
  return Perm(w);
}

Perm Perm::simple(int r, int i) {
  if (i < 1 || i >= r) throw std::invalid_argument("simple reflection out of range");
  std::vector<int> w(r);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i - 1], w[i]);
  return Perm(w);
}

std::vector<Perm> Perm::all(int r) {
  std::vector<Perm> out;
  std::vector<int> w(r);
  std::iota(w.begin(), w.end(), 1);
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Perm Perm::inverse() const {
  std::vector<int> inv(w_.size());
  for (int k = 0; k < size(); ++k) inv[w_[k] - 1] = k + 1;
  return Perm(inv);
}

Perm operator*(const Perm& u, const Perm& w) {
  if (u.size() != w.size()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> out(w.size());
  for (int k = 1; k <= w.size(); ++k) out[k - 1] = u(w(k));
  return Perm(out);
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> word;
  std::vector<int> cur = w_;
  // Peel left descents: if i+1 precedes i, then w = s_i (s_i w) with l(s_i w) = l(w) - 1.
  while (true) {
    std::vector<int> pos(cur.size() + 1);
    for (size_t k = 0; k < cur.size(); ++k) pos[cur[k]] = static_cast<int>(k);
    int found = 0;
    for (int i = 1; i < size() && !found; ++i)
      if (pos[i + 1] < pos[i]) found = i;
    if (!found) break;
    word.push_back(found);
    std::swap(cur[pos[found]], cur[pos[found + 1]]);
  }
  return word;
}

std::string Perm::str() const {
  std::string out = "[";
  for (size_t k = 0; k < w_.size(); ++k) out += (k ? "," : "") + std::to_string(w_[k]);
  return out + "]";
}

HeckeElem HeckeElem::one(int r) { return script(Perm::identity(r)); }

HeckeElem HeckeElem::script(const Perm& w, const LaurentInt& c) {
  HeckeElem x(w.size());
  x.add(w, c);
  return x;
}

HeckeElem HeckeElem::capital(const Perm& w, const LaurentInt& c) { return script(w, c.shifted(w.length())); }

std::map<Perm, LaurentInt> HeckeElem::capital_terms() const {
  std::map<Perm, LaurentInt> out;
  for (const auto& [w, c] : terms_) out.emplace(w, c.shifted(-w.length()));
  return out;
}

void HeckeElem::add(const Perm& w, const LaurentInt& c) {
  if (w.size() != r_) throw std::invalid_argument("Hecke degree mismatch");
  add_term(terms_, w, c);
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElem operator*(const LaurentInt& c, const HeckeElem& x) {
  HeckeElem out(x.r_);
  for (const auto& [w, y] : x.terms_) out.add(w, c * y);
  return out;
}

std::string HeckeElem::str(HeckeBasis basis) const {
  if (terms_.empty()) return "0";
  auto terms = basis == HeckeBasis::capital ? capital_terms() : terms_;
  std::string out;
  for (const auto& [w, c] : terms) {
    if (!out.empty()) out += " + ";
    out += coef_prefix(c) + (basis == HeckeBasis::capital ? "T" : "t") + w.str();
  }
  return out;
}

namespace {

// script-T_s * x for s = s_i.
HeckeElem left_simple(int i, const HeckeElem& x) {
  HeckeElem out(x.degree());
  const Perm s = Perm::simple(x.degree(), i);
  for (const auto& [w, c] : x.terms()) {
    Perm sw = s * w;
    if (sw.length() > w.length()) {
      out.add(sw, c);
    } else {
      out.add(w, c * quad());
      out.add(sw, c);
    }
  }
  return out;
}

// x * script-T_s on the tensor space.
TensorElem right_simple(const TensorElem& x, int j) {
  TensorElem out(x.window(), x.degree());
  for (const auto& [word, c] : x.terms()) {
    Word swapped = word;
    std::swap(swapped[j - 1], swapped[j]);
    if (word[j - 1] < word[j]) {
      out.add(swapped, c);
    } else if (word[j - 1] == word[j]) {
      out.add(word, c.shifted(1));
    } else {
      out.add(word, c * quad());
      out.add(swapped, c);
    }
  }
  return out;
}

}  // namespace

HeckeElem hecke_mult(const HeckeElem& x, const HeckeElem& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("hecke_mult: degree mismatch");
  HeckeElem out(x.degree());
  for (const auto& [u, c] : x.terms()) {
    HeckeElem part = y;
    auto word = u.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) part = left_simple(*it, part);
    out += c * part;
  }
  return out;
}

TensorElem TensorElem::basis(Window w, const Word& word, const LaurentInt& c) {
  TensorElem x(w, static_cast<int>(word.size()));
  x.add(word, c);
  return x;
}

LaurentInt TensorElem::coeff(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? LaurentInt() : it->second;
}

void TensorElem::add(const Word& word, const LaurentInt& c) {
  if (static_cast<int>(word.size()) != r_) throw std::invalid_argument("tensor word has the wrong length");
  for (int i : word)
    if (!window_.contains(i)) throw std::invalid_argument("tensor letter outside window " + window_.str());
  add_term(terms_, word, c);
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  if (!(o.window_ == window_) || o.r_ != r_) throw std::invalid_argument("tensor window/degree mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

std::string TensorElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [word, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += coef_prefix(c);
    for (size_t k = 0; k < word.size(); ++k) out += (k ? "." : "") + ("w" + std::to_string(word[k]));
  }
  return out;
}

TensorElem tensor_act(const TensorElem& x, const HeckeElem& h) {
  if (x.degree() != h.degree()) throw std::invalid_argument("tensor_act: degree mismatch");
  TensorElem out(x.window(), x.degree());
  for (const auto& [w, c] : h.terms()) {
    TensorElem part = x;
    for (int j : w.reduced_word()) part = right_simple(part, j);
    for (const auto& [word, y] : part.terms()) out.add(word, c * y);
  }
  return out;
}

std::map<int, std::vector<int>> row_sets(const Composition& lambda) {
  if (!lambda.is_nonneg()) throw std::invalid_argument("row_sets: negative part");
  std::map<int, std::vector<int>> out;
  int next = 1;
  for (const auto& [i, x] : lambda.parts())
    for (Entry k = 0; k < x; ++k) out[i].push_back(next++);
  return out;
}

namespace {

// Block index of each position 1..r.
std::vector<int> block_of(const Composition& lambda) {
  std::vector<int> out{0};
  for (const auto& [i, rows] : row_sets(lambda))
    for (size_t k = 0; k < rows.size(); ++k) out.push_back(i);
  return out;
}

bool increasing_on_blocks(const Perm& w, const std::vector<int>& blocks) {
  for (int k = 1; k < w.size(); ++k)
    if (blocks[k] == blocks[k + 1] && w(k) > w(k + 1)) return false;
  return true;
}

}  // namespace

bool is_distinguished(const Composition& lambda, const Perm& d, const Composition& mu) {
  return increasing_on_blocks(d.inverse(), block_of(lambda)) && increasing_on_blocks(d, block_of(mu));
}

std::vector<Perm> double_reps(const Composition& lambda, const Composition& mu) {
  if (lambda.sum() != mu.sum()) throw std::invalid_argument("double_reps: degree mismatch");
  std::vector<Perm> out;
  for (const auto& d : Perm::all(static_cast<int>(lambda.sum())))
    if (is_distinguished(lambda, d, mu)) out.push_back(d);
  return out;
}

IntMatZ jmath(const Composition& lambda, const Perm& d, const Composition& mu) {
  if (lambda.sum() != d.size() || mu.sum() != d.size()) throw std::invalid_argument("jmath: degree mismatch");
  auto rows = block_of(lambda), cols = block_of(mu);
  IntMatZ a;
  for (int k = 1; k <= d.size(); ++k) a.add(rows[d(k)], cols[k], 1);
  return a;
}

std::tuple<Composition, Perm, Composition> jmath_inv(const IntMatZ& a) {
  if (!a.is_nonneg()) throw std::invalid_argument("jmath_inv: negative entry");
  Composition lambda = ro(a), mu = co(a);
  for (const auto& d : double_reps(lambda, mu))
    if (jmath(lambda, d, mu) == a) return {lambda, d, mu};
  throw std::logic_error("jmath_inv: no representative for " + a.str());
}

HeckeElem x_element(const Composition& lambda) {
  int r = static_cast<int>(lambda.sum());
  auto blocks = block_of(lambda);
  HeckeElem out(r);
  for (const auto& w : Perm::all(r)) {
    bool inside = true;
    for (int k = 1; k <= r; ++k) inside = inside && blocks[w(k)] == blocks[k];
    if (inside) out += HeckeElem::capital(w);
  }
  return out;
}

HeckeElem y_element(const Composition& lambda) {
  HeckeElem out(static_cast<int>(lambda.sum()));
  for (const auto& [w, c] : x_element(lambda).capital_terms()) {
    // (-v^2)^{-l(w)} T_w
    LaurentInt sign = w.length() % 2 ? LaurentInt(-1) : LaurentInt(1);
    out += HeckeElem::capital(w, sign.shifted(-2 * w.length()));
  }
  return out;
}

Composition transpose_partition(const Composition& lambda) {
  Composition out;
  Entry top = 0;
  for (const auto& [i, x] : lambda.parts()) top = std::max(top, x);
  for (Entry i = 1; i <= top; ++i) {
    Entry n = 0;
    for (const auto& [j, x] : lambda.parts()) n += x >= i;
    out.set(static_cast<int>(i), n);
  }
  return out;
}

Perm w_element(const Composition& mu) {
  Composition mut = transpose_partition(mu);
  std::vector<Perm> hits;
  for (const auto& d : double_reps(mu, mut)) {
    IntMatZ a = jmath(mu, d, mut);
    bool trivial = true;
    for (const auto& c : a.cells()) trivial = trivial && c.a <= 1;
    if (trivial) hits.push_back(d);
  }
  if (hits.size() != 1) throw std::logic_error("w_element: expected a unique representative for " + mu.str());
  return hits.front();
}

HeckeElem z_element(const Composition& mu) {
  return hecke_mult(hecke_mult(x_element(mu), HeckeElem::capital(w_element(mu))), y_element(transpose_partition(mu)));
}

Word sorted_word(const Composition& lambda) {
  Word out;
  for (const auto& [i, x] : lambda.parts())
    for (Entry k = 0; k < x; ++k) out.push_back(i);
  return out;
}

Composition word_weight(const Word& word) {
  Composition out;
  for (int i : word) out.add(i, 1);
  return out;
}

namespace {

Entry twist(const Composition& lambda) {
  Entry s = lambda.sum(), sq = 0;
  for (const auto& [i, x] : lambda.parts()) sq += x * x;
  return (s * s - sq) / 2;
}

LaurentInt poincare(const Composition& lambda) {
  LaurentInt out;
  for (const auto& [w, c] : x_element(lambda).capital_terms()) out += LaurentInt::v(2 * w.length());
  return out;
}

struct TensorTables {
  std::mutex mu;
  // Per weight: word -> distinguished d with sorted_word * script-T_d = word.
  std::map<Composition, std::map<Word, Perm>> coset_words;
  // Per matrix: v^{-d_A} times the sum of T_x over the double coset.
  std::map<IntMatZ, HeckeElem> phi;
};

TensorTables& tables() {
  static TensorTables t;
  return t;
}

const Perm& coset_rep(const Composition& mu, const Word& word) {
  auto& t = tables();
  std::lock_guard lock(t.mu);
  auto it = t.coset_words.find(mu);
  if (it == t.coset_words.end()) {
    std::map<Word, Perm> m;
    Word base = sorted_word(mu);
    Window w(base.front(), base.back());
    int r = static_cast<int>(mu.sum());
    for (const auto& d : Perm::all(r)) {
      if (!increasing_on_blocks(d.inverse(), block_of(mu))) continue;
      auto image = tensor_act(TensorElem::basis(w, base), HeckeElem::script(d));
      if (image.terms().size() != 1 || !(image.terms().begin()->second == LaurentInt(1)))
        throw std::logic_error("coset_rep: place permutation is not a single word");
      m.emplace(image.terms().begin()->first, d);
    }
    it = t.coset_words.emplace(mu, std::move(m)).first;
  }
  return it->second.at(word);
}

HeckeElem phi_element(const IntMatZ& a) {
  auto& t = tables();
  {
    std::lock_guard lock(t.mu);
    auto it = t.phi.find(a);
    if (it != t.phi.end()) return it->second;
  }
  Composition lambda = ro(a), mu = co(a);
  int r = static_cast<int>(lambda.sum());
  HeckeElem out(r);
  for (const auto& x : Perm::all(r))
    if (jmath(lambda, x, mu) == a) out += HeckeElem::capital(x, LaurentInt::v(-static_cast<int>(d_twist(a))));
  std::lock_guard lock(t.mu);
  return t.phi.emplace(a, out).first->second;
}

}  // namespace

TensorElem schur_on_tensor(const SchurElem& x, const TensorElem& t) {
  if (!(x.window() == t.window()) || x.degree() != t.degree())
    throw std::invalid_argument("schur_on_tensor: window/degree mismatch");
  TensorElem out(t.window(), t.degree());
  if (t.degree() == 0) {
    for (const auto& [a, c] : x.terms())
      for (const auto& [word, e] : t.terms()) out.add(word, c * e);
    return out;
  }
  for (const auto& [word, e] : t.terms()) {
    Composition mu = word_weight(word);
    const Perm& d = coset_rep(mu, word);
    for (const auto& [a, c] : x.terms()) {
      if (!(co(a) == mu)) continue;
      Composition lambda = ro(a);
      // word = v^{-l(d)} w_mu T_d; the image lies in x_lambda H and is read back through w_lambda.
      HeckeElem y = hecke_mult(phi_element(a), HeckeElem::capital(d));
      TensorElem img = tensor_act(TensorElem::basis(t.window(), sorted_word(lambda)), y);
      LaurentInt p = poincare(lambda);
      int shift = static_cast<int>(twist(mu) - twist(lambda) - d.length());
      for (const auto& [w2, y2] : img.terms()) out.add(w2, (c * e * y2.exact_div(p)).shifted(shift));
    }
  }
  return out;
}

}  // namespace qschur
