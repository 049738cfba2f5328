#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vwu {

// Exact rational over int64 with overflow detection. Intermediate products are
// formed in 128 bits and reduced before narrowing.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  std::int64_t ceil() const { return -Rational(-num_, den_).floor(); }
  // x - floor(x), in [0, 1)
  Rational frac() const { return *this - Rational(floor()); }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from128(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from128(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rational operator-() const {
    if (num_ == INT64_MIN) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = (__int128)a.num_ * b.den_;
    __int128 r = (__int128)b.num_ * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "3", "-3", "1/2", "-7/4" and plain decimals such as "0.25".
  static Rational parse(std::string_view s) {
    auto trim = [](std::string_view t) {
      while (!t.empty() && std::isspace((unsigned char)t.front())) t.remove_prefix(1);
      while (!t.empty() && std::isspace((unsigned char)t.back())) t.remove_suffix(1);
      return t;
    };
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
      return Rational(parse_int(trim(s.substr(0, slash))), parse_int(trim(s.substr(slash + 1))));
    }
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
      std::string digits(s.substr(0, dot));
      std::string tail(s.substr(dot + 1));
      if (tail.size() > 15) throw std::invalid_argument("too many decimals: " + std::string(s));
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
      bool neg = !digits.empty() && digits[0] == '-';
      std::int64_t ip = (digits.empty() || digits == "-" || digits == "+") ? 0 : parse_int(digits);
      std::int64_t fp = tail.empty() ? 0 : parse_int(tail);
      if (tail.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad rational: " + std::string(s));
      Rational r = Rational(ip) + Rational(fp, scale) * (neg ? -1 : 1);
      return r;
    }
    return Rational(parse_int(s));
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  static std::int64_t parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("bad rational component");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad rational component: " + std::string(s));
    __int128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational component: " + std::string(s));
      v = v * 10 + (s[i] - '0');
      if (v > INT64_MAX) throw std::overflow_error("rational literal out of range");
    }
    return (std::int64_t)(neg ? -v : v);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = (std::int64_t)n;
    r.den_ = (std::int64_t)d;
    return r;
  }

  void assign(std::int64_t n, std::int64_t d) { *this = from128(n, d); }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;

inline Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in pairing");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RVec operator+(RVec a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline RVec operator-(RVec a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline RVec operator*(const Rational& c, RVec a) {
  for (auto& x : a) x *= c;
  return a;
}
inline RVec operator-(RVec a) {
  for (auto& x : a) x = -x;
  return a;
}

inline bool is_zero(const RVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline std::string to_string(const RVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

// Comma separated list of rationals, optional surrounding brackets.
inline RVec parse_rvec(std::string_view s) {
  RVec out;
  std::string t(s);
  for (auto& c : t)
    if (c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  std::size_t start = 0;
  bool any = false;
  for (char c : t)
    if (!std::isspace((unsigned char)c)) any = true;
  if (!any) return out;
  while (true) {
    auto comma = t.find(',', start);
    out.push_back(Rational::parse(std::string_view(t).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Inverse of a square rational matrix by Gauss-Jordan elimination.
inline RMat invert(const RMat& m) {
  std::size_t n = m.size();
  RMat a = m;
  RMat inv(n, RVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("matrix not square");
    inv[i][i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline RVec mat_vec(const RMat& m, const RVec& v) {
  RVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

}  // namespace vwu

template <>
struct std::hash<vwu::Rational> {
  std::size_t operator()(const vwu::Rational& r) const noexcept {
    return std::hash<std::int64_t>()(r.num()) * 1000003u ^ std::hash<std::int64_t>()(r.den());
  }
};
