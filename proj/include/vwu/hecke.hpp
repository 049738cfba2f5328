#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vwu/rootsys.hpp"

namespace vwu {

// Laurent polynomial in u with int64 coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c, int e = 0) {
    if (c) c_[e] = c;
  }
  static LaurentPoly u(int e = 1) { return LaurentPoly(1, e); }

  const std::map<int, std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }
  std::int64_t at(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? 0 : it->second;
  }
  std::int64_t eval_at_one() const {
    std::int64_t s = 0;
    for (auto& [e, c] : c_) s = add(s, c);
    return s;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) put(e, add(at(e), c));
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) put(e, sub(at(e), c));
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.c_)
      for (auto& [eb, cb] : b.c_) r.put(ea + eb, add(r.at(ea + eb), mul(ca, cb)));
    return r;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // e.g. "u^2-3*u+1-u^-1"
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      auto [e, c] = *it;
      std::uint64_t mag = c < 0 ? 0 - (std::uint64_t)c : (std::uint64_t)c;
      if (!s.empty()) s += c < 0 ? "-" : "+";
      else if (c < 0) s += "-";
      std::string mono = e == 0 ? "" : e == 1 ? "u" : "u^" + std::to_string(e);
      if (mono.empty()) s += std::to_string(mag);
      else if (mag == 1) s += mono;
      else s += std::to_string(mag) + "*" + mono;
    }
    return s;
  }

 private:
  std::map<int, std::int64_t> c_;

  void put(int e, std::int64_t c) {
    if (c) c_[e] = c;
    else c_.erase(e);
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
  }
};

// Finite Weyl group of a Cartan matrix, elements keyed by w(rho) in
// fundamental-weight coordinates. Element 0 is the identity.
class WeylGroupCache {
 public:
  explicit WeylGroupCache(IMat cartan) : a_(std::move(cartan)) {
    int n = rank();
    for (auto& row : a_)
      if ((int)row.size() != n) throw std::invalid_argument("Cartan matrix must be square");
    IVec rho(n, 1);
    add(rho, {});
    // breadth-first by left multiplication, so words come out by length
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (elems_.size() > 200000) throw std::invalid_argument("Weyl group too large (not of finite type?)");
      for (int i = 0; i < n; ++i) {
        IVec v = reflect(i, elems_[k]);
        if (!index_.count(v)) {
          // lexmin reduced word: smallest left descent, then the word of s_i w
          WeylWord w;
          int d = first_descent(v);
          w.push_back(d);
          IVec rest = reflect(d, v);
          const WeylWord& tail = words_[index_.at(rest)];
          w.insert(w.end(), tail.begin(), tail.end());
          add(v, w);
        }
      }
    }
    int m = size();
    lmul_.assign(n, std::vector<int>(m));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < m; ++k) lmul_[i][k] = index_.at(reflect(i, elems_[k]));
  }

  int rank() const { return (int)a_.size(); }
  int size() const { return (int)elems_.size(); }
  const IMat& cartan() const { return a_; }
  const WeylWord& word(int w) const { return words_.at(w); }
  int length(int w) const { return (int)words_.at(w).size(); }
  int left_mult(int i, int w) const { return lmul_.at(i).at(w); }
  // s_i is a left descent of w iff (w rho)_i < 0
  bool left_descent(int i, int w) const { return elems_.at(w)[i] < 0; }
  int from_word(const WeylWord& word) const {
    int w = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it < 0 || *it >= rank()) throw std::invalid_argument("simple reflection index out of range");
      w = left_mult(*it, w);
    }
    return w;
  }
  int longest() const {
    int best = 0;
    for (int w = 0; w < size(); ++w)
      if (length(w) > length(best)) best = w;
    return best;
  }
  // simple root alpha_i in fundamental-weight coordinates
  IVec simple_root(int i) const {
    IVec v(rank());
    for (int j = 0; j < rank(); ++j) v[j] = a_[j][i];
    return v;
  }
  IVec reflect(int i, IVec mu) const {
    int c = mu[i];
    if (c)
      for (int j = 0; j < rank(); ++j) mu[j] -= c * a_[j][i];
    return mu;
  }
  IVec act(int w, IVec mu) const {
    const WeylWord& word = words_.at(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) mu = reflect(*it, mu);
    return mu;
  }

  // Every reduced word of w.
  std::vector<WeylWord> reduced_words(int w) const {
    std::vector<WeylWord> out;
    WeylWord cur;
    auto rec = [&](auto&& self, int x) -> void {
      if (x == 0) {
        out.push_back(cur);
        return;
      }
      for (int i = 0; i < rank(); ++i)
        if (left_descent(i, x)) {
          cur.push_back(i);
          self(self, left_mult(i, x));
          cur.pop_back();
        }
    };
    rec(rec, w);
    return out;
  }

 private:
  IMat a_;
  std::vector<IVec> elems_;
  std::vector<WeylWord> words_;
  std::map<IVec, int> index_;
  std::vector<std::vector<int>> lmul_;

  void add(const IVec& v, WeylWord w) {
    index_[v] = (int)elems_.size();
    elems_.push_back(v);
    words_.push_back(std::move(w));
  }
  static int first_descent(const IVec& v) {
    for (int i = 0; i < (int)v.size(); ++i)
      if (v[i] < 0) return i;
    return -1;
  }
};

// Element of the Hecke algebra in the normal form sum c * t_mu T_w.
struct HeckeElement {
  std::map<std::pair<IVec, int>, LaurentPoly> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const IVec& mu, int w, const LaurentPoly& c) {
    auto key = std::make_pair(mu, w);
    auto it = terms.find(key);
    if (it == terms.end()) {
      if (!c.is_zero()) terms.emplace(key, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  HeckeElement& operator+=(const HeckeElement& o) {
    for (auto& [k, c] : o.terms) add_term(k.first, k.second, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    for (auto& [k, c] : o.terms) add_term(k.first, k.second, -c);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& p, const HeckeElement& x) {
    HeckeElement r;
    for (auto& [k, c] : x.terms) r.add_term(k.first, k.second, p * c);
    return r;
  }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;
};

// Extended affine Hecke algebra of the simply connected root datum of a Cartan
// matrix (lattice = weight lattice, fundamental-weight coordinates).
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(IMat cartan) : w_(std::make_shared<WeylGroupCache>(std::move(cartan))) {}
  explicit HeckeAlgebra(CartanType t) : HeckeAlgebra(cartan_matrix(t)) { label_ = t.name(); }

  const WeylGroupCache& weyl() const { return *w_; }
  int rank() const { return w_->rank(); }
  const std::string& label() const { return label_; }

  HeckeElement one() const { return basis(IVec(rank()), 0); }
  HeckeElement basis(const IVec& mu, int w, LaurentPoly c = 1) const {
    check_mu(mu);
    HeckeElement x;
    x.add_term(mu, w, c);
    return x;
  }
  HeckeElement t(const IVec& mu) const { return basis(mu, 0); }
  HeckeElement T(int w) const { return basis(IVec(rank()), w); }
  HeckeElement T_word(const WeylWord& word) const {
    HeckeElement x = one();
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_T(*it, x);
    return x;
  }
  HeckeElement scalar(const LaurentPoly& p) const { return p * one(); }

  // sum_{j=0}^{m-1} t_{j alpha} for m >= 0, -sum_{j=1}^{-m} t_{-j alpha} otherwise:
  // the expansion of (1 - t_{m alpha}) / (1 - t_alpha)
  HeckeElement geometric(int i, int m) const {
    HeckeElement x;
    IVec a = w_->simple_root(i);
    if (m >= 0)
      for (int j = 0; j < m; ++j) x.add_term(scale(a, j), 0, 1);
    else
      for (int j = 1; j <= -m; ++j) x.add_term(scale(a, -j), 0, -1);
    return x;
  }

  // T_i * x, using T_s t_nu = t_{s nu} T_s + (1 - u) t_{s nu} Q(<nu, alpha^vee>)
  HeckeElement left_T(int i, const HeckeElement& x) const {
    if (i < 0 || i >= rank()) throw std::invalid_argument("simple reflection index out of range");
    HeckeElement r;
    IVec a = w_->simple_root(i);
    const LaurentPoly one_minus_u = LaurentPoly(1) - LaurentPoly::u();
    for (auto& [k, c] : x.terms) {
      const IVec& nu = k.first;
      int w = k.second;
      IVec snu = w_->reflect(i, nu);
      int sw = w_->left_mult(i, w);
      if (!w_->left_descent(i, w)) {
        r.add_term(snu, sw, c);
      } else {
        // T_s T_w = (u - 1) T_w + u T_{sw}
        r.add_term(snu, w, c * (LaurentPoly::u() - LaurentPoly(1)));
        r.add_term(snu, sw, c * LaurentPoly::u());
      }
      int m = nu[i];
      if (m > 0)
        for (int j = 0; j < m; ++j) r.add_term(add(snu, scale(a, j)), w, one_minus_u * c);
      else
        for (int j = 1; j <= -m; ++j) r.add_term(add(snu, scale(a, -j)), w, -(one_minus_u * c));
    }
    return r;
  }

  HeckeElement mul(const HeckeElement& x, const HeckeElement& y) const {
    HeckeElement r;
    for (auto& [k, c] : x.terms) {
      HeckeElement z = y;
      const WeylWord& word = w_->word(k.second);
      for (auto it = word.rbegin(); it != word.rend(); ++it) z = left_T(*it, z);
      for (auto& [k2, c2] : z.terms) r.add_term(add(k.first, k2.first), k2.second, c * c2);
    }
    return r;
  }

  // Parses e.g. "u^2*t[1,-1]*T[1,2] + (u-1)*T[]"; T indices are 1-based.
  HeckeElement parse(std::string_view text) const;

  std::string format(const HeckeElement& x) const {
    if (x.is_zero()) return "0";
    std::vector<std::pair<std::pair<IVec, int>, LaurentPoly>> items(x.terms.begin(), x.terms.end());
    std::stable_sort(items.begin(), items.end(), [&](auto& p, auto& q) {
      int lp = w_->length(p.first.second), lq = w_->length(q.first.second);
      if (lp != lq) return lp > lq;
      const WeylWord &wp = w_->word(p.first.second), &wq = w_->word(q.first.second);
      if (wp != wq) return wp < wq;
      return p.first.first > q.first.first;
    });
    std::string s;
    for (auto& [k, c] : items) {
      std::string body;
      if (std::any_of(k.first.begin(), k.first.end(), [](int v) { return v != 0; })) body += "t" + ivec_str(k.first);
      if (k.second != 0) body += (body.empty() ? "T" : "*T") + ivec_str(one_based(w_->word(k.second)));
      bool neg = c.coeffs().rbegin()->second < 0;
      LaurentPoly mag = neg ? -c : c;
      std::string coef;
      bool plain = mag.is_monomial() && mag.coeffs().begin()->second > 0;
      if (body.empty()) coef = plain ? mag.str() : "(" + mag.str() + ")";
      else if (!(mag == LaurentPoly(1))) coef = (plain ? mag.str() : "(" + mag.str() + ")") + "*";
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      s += coef + body;
    }
    return s;
  }

 private:
  std::shared_ptr<const WeylGroupCache> w_;
  std::string label_;

  void check_mu(const IVec& mu) const {
    if ((int)mu.size() != rank())
      throw std::invalid_argument("lattice vector needs " + std::to_string(rank()) + " coordinates");
  }
  static IVec scale(const IVec& v, int k) {
    IVec r = v;
    for (auto& x : r) x *= k;
    return r;
  }
  static IVec add(IVec a, const IVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  }
  static IVec one_based(const WeylWord& w) {
    IVec r = w;
    for (auto& x : r) ++x;
    return r;
  }
  static std::string ivec_str(const IVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  }
};

namespace detail {

class HeckeParser {
 public:
  HeckeParser(const HeckeAlgebra& h, std::string_view s) : h_(h), s_(s) {}

  HeckeElement run() {
    HeckeElement x = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return x;
  }

 private:
  const HeckeAlgebra& h_;
  std::string_view s_;
  std::size_t p_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse Hecke element at position " + std::to_string(p_) + ": " + why);
  }
  void skip() {
    while (p_ < s_.size() && std::isspace((unsigned char)s_[p_])) ++p_;
  }
  bool peek(char c) {
    skip();
    return p_ < s_.size() && s_[p_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++p_;
  }
  bool starts_atom() {
    skip();
    if (p_ >= s_.size()) return false;
    char c = s_[p_];
    return std::isdigit((unsigned char)c) || c == 'u' || c == 't' || c == 'T' || c == '(';
  }
  std::int64_t integer() {
    skip();
    bool neg = false;
    if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) neg = s_[p_++] == '-';
    skip();
    if (p_ >= s_.size() || !std::isdigit((unsigned char)s_[p_])) fail("expected an integer");
    std::int64_t v = 0;
    while (p_ < s_.size() && std::isdigit((unsigned char)s_[p_])) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, s_[p_] - '0', &v)) fail("integer too large");
      ++p_;
    }
    return neg ? -v : v;
  }
  IVec int_list() {
    expect('[');
    IVec v;
    if (peek(']')) {
      ++p_;
      return v;
    }
    while (true) {
      v.push_back((int)integer());
      if (peek(',')) {
        ++p_;
        continue;
      }
      expect(']');
      return v;
    }
  }
  HeckeElement expr() {
    HeckeElement x;
    bool neg = false;
    if (peek('-')) {
      ++p_;
      neg = true;
    } else if (peek('+')) {
      ++p_;
    }
    x = term();
    if (neg) x = LaurentPoly(-1) * x;
    while (true) {
      if (peek('+')) {
        ++p_;
        x += term();
      } else if (peek('-')) {
        ++p_;
        x -= term();
      } else {
        return x;
      }
    }
  }
  HeckeElement term() {
    HeckeElement x = atom();
    while (true) {
      if (peek('*')) {
        ++p_;
        x = h_.mul(x, atom());
      } else if (starts_atom()) {
        x = h_.mul(x, atom());
      } else {
        return x;
      }
    }
  }
  HeckeElement atom() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end of input");
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      HeckeElement x = expr();
      expect(')');
      return x;
    }
    if (c == 'u') {
      ++p_;
      int e = 1;
      if (peek('^')) {
        ++p_;
        if (peek('(')) {
          ++p_;
          e = (int)integer();
          expect(')');
        } else {
          e = (int)integer();
        }
      }
      return h_.scalar(LaurentPoly::u(e));
    }
    if (c == 't') {
      ++p_;
      IVec mu = int_list();
      if ((int)mu.size() != h_.rank()) fail("t[...] needs " + std::to_string(h_.rank()) + " entries");
      return h_.t(mu);
    }
    if (c == 'T') {
      ++p_;
      IVec w = int_list();
      for (auto& i : w) {
        if (i < 1 || i > h_.rank()) fail("T index out of range");
        --i;
      }
      return h_.T_word(w);
    }
    if (std::isdigit((unsigned char)c)) return h_.scalar(LaurentPoly(integer()));
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace detail

inline HeckeElement HeckeAlgebra::parse(std::string_view text) const { return detail::HeckeParser(*this, text).run(); }

enum class IntertwinerKind { Shriek, Star };

// Shriek: -T_s + (u - 1)(1 - t_{-floor(p) alpha})/(1 - t_alpha).
// Star: -u^-1 T_s + (1 - u^-1)(1 - t_{-ceil(p - 1) alpha})/(1 - t_alpha).
// p is the pairing of the parameter with the simple coroot.
inline HeckeElement intertwiner_class(const HeckeAlgebra& h, IntertwinerKind kind, int i, const Rational& pairing) {
  if (i < 0 || i >= h.rank()) throw std::invalid_argument("simple index out of range");
  HeckeElement Ts = h.T(h.weyl().left_mult(i, 0));
  if (kind == IntertwinerKind::Shriek) {
    int m = (int)-pairing.floor();
    return LaurentPoly(-1) * Ts + (LaurentPoly::u() - LaurentPoly(1)) * h.geometric(i, m);
  }
  int m = (int)-(pairing - Rational(1)).ceil();
  return LaurentPoly(-1, -1) * Ts + (LaurentPoly(1) - LaurentPoly::u(-1)) * h.geometric(i, m);
}

struct InversePairRow {
  int k = 0;
  std::string product;
  bool monomial = false;  // product = c u^e
  std::int64_t coefficient = 0;
  int u_exponent = 0;
};

// shriek at pairing -k times star at pairing k, for k in [kmin, kmax].
inline std::vector<InversePairRow> verify_inverse_pairs(const HeckeAlgebra& h, int i, int kmin, int kmax) {
  std::vector<InversePairRow> out;
  for (int k = kmin; k <= kmax; ++k) {
    InversePairRow row;
    row.k = k;
    if (h.rank() == 0) {
      row.product = h.format(h.one());
      row.monomial = true;
      row.coefficient = 1;
      out.push_back(row);
      continue;
    }
    HeckeElement p = h.mul(intertwiner_class(h, IntertwinerKind::Shriek, i, Rational(-k)),
                           intertwiner_class(h, IntertwinerKind::Star, i, Rational(k)));
    row.product = h.format(p);
    if (p.terms.size() == 1) {
      auto& [key, c] = *p.terms.begin();
      bool scalar = key.second == 0 && std::all_of(key.first.begin(), key.first.end(), [](int v) { return v == 0; });
      if (scalar && c.is_monomial()) {
        row.monomial = true;
        row.coefficient = c.coeffs().begin()->second;
        row.u_exponent = c.coeffs().begin()->first;
      }
    }
    out.push_back(row);
  }
  return out;
}

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

struct PresentationReport {
  std::string datum;
  std::vector<CheckResult> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
  }
};

namespace detail {

// Group algebra of W x| X over Z, elements keyed by (mu, w). Reflections act
// through explicit integer matrices, independently of the Hecke code path.
class GroupAlgebra {
 public:
  explicit GroupAlgebra(const WeylGroupCache& w) : w_(w) {
    int n = w.rank();
    for (int i = 0; i < n; ++i) {
      IMat m(n, IVec(n));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m[r][c] = (r == c) - (c == i ? w.cartan()[r][i] : 0);
      refl_.push_back(m);
    }
    for (int x = 0; x < w.size(); ++x) {
      IMat m = identity(n);
      for (int i : w.word(x)) m = matmul(m, refl_[i]);
      key_[m] = x;
      mats_.push_back(m);
    }
  }
  using Elem = std::map<std::pair<IVec, int>, std::int64_t>;
  Elem mul(const Elem& a, const Elem& b) const {
    Elem r;
    for (auto& [ka, ca] : a)
      for (auto& [kb, cb] : b) {
        const IMat& ma = mats_[ka.second];
        IVec mu = ka.first;
        IVec wnu = matvec(ma, kb.first);
        for (std::size_t j = 0; j < mu.size(); ++j) mu[j] += wnu[j];
        int prod = key_.at(matmul(ma, mats_[kb.second]));
        auto& slot = r[{mu, prod}];
        slot += ca * cb;
        if (!slot) r.erase({mu, prod});
      }
    return r;
  }

 private:
  const WeylGroupCache& w_;
  std::vector<IMat> refl_, mats_;
  std::map<IMat, int> key_;

  static IMat identity(int n) {
    IMat m(n, IVec(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }
  static IMat matmul(const IMat& a, const IMat& b) {
    int n = (int)a.size();
    IMat c(n, IVec(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (a[i][k])
          for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  }
  static IVec matvec(const IMat& a, const IVec& v) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
  }
};

inline GroupAlgebra::Elem specialize(const HeckeElement& x) {
  GroupAlgebra::Elem r;
  for (auto& [k, c] : x.terms) {
    auto& slot = r[k];
    slot += c.eval_at_one();
    if (!slot) r.erase(k);
  }
  return r;
}

inline HeckeElement random_element(const HeckeAlgebra& h, std::mt19937_64& rng, int max_terms, int coord) {
  std::uniform_int_distribution<int> nterms(1, max_terms), cd(-coord, coord), wd(0, h.weyl().size() - 1),
      coef(-3, 3), ex(-2, 2);
  HeckeElement x;
  int k = nterms(rng);
  for (int j = 0; j < k; ++j) {
    IVec mu(h.rank());
    for (auto& v : mu) v = cd(rng);
    int c = coef(rng);
    x.add_term(mu, wd(rng), LaurentPoly(c == 0 ? 1 : c, ex(rng)));
  }
  return x;
}

inline void record(CheckResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (ok) return;
  if (!r.failures) r.first_failure = what;
  ++r.failures;
}

}  // namespace detail

struct PresentationOptions {
  int depth = 4;           // braid words up to this length
  int mu_bound = 3;        // Bernstein check over [-mu_bound, mu_bound]^r
  int assoc_samples = 500;
  int special_samples = 500;
  std::uint64_t seed = 20240601;
};

inline PresentationReport verify_presentation(const HeckeAlgebra& h, const PresentationOptions& opt = {}) {
  PresentationReport rep;
  rep.datum = h.label().empty() ? "rank " + std::to_string(h.rank()) : h.label();
  const WeylGroupCache& W = h.weyl();
  int n = h.rank();
  IVec zero(n);
  HeckeElement one = h.one();
  auto u = LaurentPoly::u();

  CheckResult id("identity");
  detail::record(id, h.T(0) == one && h.t(zero) == one && h.T_word({}) == one, "T_1 = t_0 = 1");
  detail::record(id, h.parse("T[]") == one && h.parse("1") == one, "parsed identity");
  rep.checks.push_back(id);

  CheckResult braid("braid");
  for (int w = 0; w < W.size(); ++w) {
    if (W.length(w) > opt.depth) continue;
    for (const WeylWord& word : W.reduced_words(w))
      detail::record(braid, h.T_word(word) == h.T(w), "T along " + word_string(word) + " differs from T_w");
  }
  rep.checks.push_back(braid);

  CheckResult quad("quadratic");
  for (int i = 0; i < n; ++i) {
    HeckeElement Ts = h.T_word({i});
    HeckeElement lhs = h.mul(Ts - h.scalar(u), Ts + one);
    detail::record(quad, lhs.is_zero(), "(T_s - u)(T_s + 1) != 0 for s = " + std::to_string(i + 1));
    detail::record(quad, h.mul(Ts, Ts) == (u - LaurentPoly(1)) * Ts + h.scalar(u), "T_s^2 for s = " + std::to_string(i + 1));
  }
  rep.checks.push_back(quad);

  // t_{s mu} T_s t_{-mu} - T_s = (1 - u) X with (1 - t_alpha) X = 1 - t_{-<mu,alpha^vee> alpha}
  CheckResult bern("bernstein");
  if (n > 0) {
    IVec mu(n, -opt.mu_bound);
    while (true) {
      for (int i = 0; i < n; ++i) {
        IVec a = W.simple_root(i);
        IVec smu = W.reflect(i, mu), neg = mu;
        for (auto& v : neg) v = -v;
        HeckeElement Ts = h.T_word({i});
        HeckeElement d = h.mul(h.mul(h.t(smu), Ts), h.t(neg)) - Ts;
        bool ok = true;
        HeckeElement x;
        for (auto& [k, c] : d.terms) {
          if (k.second != 0) {
            ok = false;
            break;
          }
          // c must be (1 - u) times an integer
          if (c.coeffs().size() != 2 || c.at(0) != -c.at(1) || c.at(0) == 0) {
            ok = false;
            break;
          }
          x.add_term(k.first, 0, c.at(0));
        }
        if (ok) {
          HeckeElement lhs;
          for (auto& [k, c] : x.terms) {
            lhs.add_term(k.first, 0, c);
            IVec shifted = k.first;
            for (int j = 0; j < n; ++j) shifted[j] += a[j];
            lhs.add_term(shifted, 0, -c);
          }
          HeckeElement rhs = one;
          IVec m = a;
          for (auto& v : m) v *= -mu[i];
          rhs.add_term(m, 0, -1);
          ok = lhs == rhs;
        }
        std::string mus = "(";
        for (int j = 0; j < n; ++j) mus += (j ? "," : "") + std::to_string(mu[j]);
        detail::record(bern, ok, "s = " + std::to_string(i + 1) + ", mu = " + mus + ")");
      }
      int j = 0;
      while (j < n && mu[j] == opt.mu_bound) mu[j++] = -opt.mu_bound;
      if (j == n) break;
      ++mu[j];
    }
  }
  rep.checks.push_back(bern);

  std::mt19937_64 rng(opt.seed);
  CheckResult lat("lattice");
  for (int s = 0; s < 50 && n > 0; ++s) {
    std::uniform_int_distribution<int> cd(-4, 4);
    IVec a(n), b(n), c(n);
    for (int j = 0; j < n; ++j) {
      a[j] = cd(rng);
      b[j] = cd(rng);
      c[j] = a[j] + b[j];
    }
    detail::record(lat, h.mul(h.t(a), h.t(b)) == h.t(c), "t_mu t_nu != t_{mu+nu}");
  }
  rep.checks.push_back(lat);

  CheckResult assoc("associativity");
  for (int s = 0; s < opt.assoc_samples; ++s) {
    HeckeElement a = detail::random_element(h, rng, 3, 2), b = detail::random_element(h, rng, 3, 2),
                 c = detail::random_element(h, rng, 3, 2);
    detail::record(assoc, h.mul(h.mul(a, b), c) == h.mul(a, h.mul(b, c)),
                   "(ab)c != a(bc) for a = " + h.format(a) + ", b = " + h.format(b) + ", c = " + h.format(c));
  }
  rep.checks.push_back(assoc);

  CheckResult special("specialization");
  detail::GroupAlgebra g(W);
  for (int s = 0; s < opt.special_samples; ++s) {
    HeckeElement a = detail::random_element(h, rng, 3, 3), b = detail::random_element(h, rng, 3, 3);
    detail::record(special, detail::specialize(h.mul(a, b)) == g.mul(detail::specialize(a), detail::specialize(b)),
                   "u -> 1 fails for a = " + h.format(a) + ", b = " + h.format(b));
  }
  rep.checks.push_back(special);
  return rep;
}

}  // namespace vwu
