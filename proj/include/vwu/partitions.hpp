#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vwu {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Sorts and drops zeros.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return (int)parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  // 0-based part, zero past the end
  int operator[](int i) const { return i < (int)parts_.size() ? parts_[i] : 0; }
  int multiplicity(int v) const { return (int)std::count(parts_.begin(), parts_.end(), v); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  // Exponent form, e.g. [3,2^(2),1].
  std::string exponent_str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (i) s += ",";
      s += std::to_string(parts_[i]);
      if (j - i > 1) s += "^(" + std::to_string(j - i) + ")";
      i = j;
    }
    return s + "]";
  }
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  // Accepts "[3,2,2,1]", "3,2,2,1", "[3,2^(2),1]" and "[3,2^2,1]".
  static Partition parse(std::string_view text) {
    std::string t;
    for (char c : text)
      if (!std::isspace((unsigned char)c) && c != '[' && c != ']') t += c;
    std::vector<int> parts;
    if (t.empty()) return Partition();
    std::size_t start = 0;
    while (start <= t.size()) {
      std::size_t comma = t.find(',', start);
      std::string item = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      int mult = 1;
      auto caret = item.find('^');
      std::string base = item.substr(0, caret);
      if (caret != std::string::npos) {
        std::string e = item.substr(caret + 1);
        std::erase(e, '(');
        std::erase(e, ')');
        mult = to_int(e);
      }
      int v = to_int(base);
      if (v < 0 || mult < 0) throw std::invalid_argument("bad partition '" + std::string(text) + "'");
      for (int k = 0; k < mult; ++k) parts.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (parts[i] > parts[i - 1]) throw std::invalid_argument("partition not weakly decreasing: " + std::string(text));
    return Partition(std::move(parts));
  }

 private:
  std::vector<int> parts_;

  static int to_int(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad partition entry '" + s + "'");
    return std::stoi(s);
  }
};

inline bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("dominance_leq: size mismatch");
  int sp = 0, sq = 0;
  int len = std::max(p.length(), q.length());
  for (int i = 0; i < len; ++i) {
    sp += p[i];
    sq += q[i];
    if (sp > sq) return false;
  }
  return true;
}

inline Partition transpose(const Partition& p) {
  std::vector<int> t;
  for (int j = 1; j <= p[0]; ++j) {
    int c = 0;
    for (int x : p.parts())
      if (x >= j) ++c;
    t.push_back(c);
  }
  return Partition(std::move(t));
}

inline Partition concat(const Partition& p, const Partition& q) {
  if (!p.empty() && !q.empty() && p.parts().back() < q[0])
    throw std::invalid_argument("concat: last part of the first partition is smaller than the first part of the second");
  std::vector<int> v = p.parts();
  v.insert(v.end(), q.parts().begin(), q.parts().end());
  return Partition(std::move(v));
}

namespace detail {
inline void check_parity(const Partition& p, char t) {
  if (t != 'B' && t != 'C' && t != 'D') throw std::invalid_argument(std::string("unknown classical type ") + t);
  bool odd = p.size() % 2 == 1;
  if ((t == 'B') != odd)
    throw std::invalid_argument(std::string("partition of ") + std::to_string(p.size()) + " has the wrong parity for type " + t);
}
// parts of this parity must have even multiplicity
inline int restricted_parity(char t) { return t == 'C' ? 1 : 0; }
}  // namespace detail

inline bool is_type(const Partition& p, char t) {
  detail::check_parity(p, t);
  int bad = detail::restricted_parity(t);
  for (int v : p.parts())
    if (v % 2 == bad && p.multiplicity(v) % 2 == 1) return false;
  return true;
}

// Largest type-t partition dominated by p: take the largest part q of the
// restricted parity with odd multiplicity, lower its last occurrence by one and
// raise the first later part below q - 1 by one; repeat.
inline Partition collapse(const Partition& p, char t) {
  detail::check_parity(p, t);
  int bad = detail::restricted_parity(t);
  std::vector<int> v = p.parts();
  while (true) {
    Partition cur(v);
    int q = -1;
    for (int x : v)
      if (x % 2 == bad && cur.multiplicity(x) % 2 == 1) {
        q = x;
        break;
      }
    if (q < 0) return cur;
    int last = -1;
    for (int i = 0; i < (int)v.size(); ++i)
      if (v[i] == q) last = i;
    v[last] -= 1;
    int j = last + 1;
    while (j < (int)v.size() && v[j] >= q - 1) ++j;
    if (j == (int)v.size()) v.push_back(1);
    else v[j] += 1;
    std::erase(v, 0);
  }
}

// All partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxp) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  if (n < 0) return out;
  rec(rec, n, n);
  return out;
}

// A partition of 2n of the form [mu_1^(2), ..., 2 mu_0, ..., mu_r^(2)] with
// mu_1 >= ... >= mu_r. pivot_index is the position of the part 2 mu_0 (the
// first copy of it), or -1 when mu_0 = 0.
struct StarPartition {
  Partition underlying;
  int pivot_index = -1;

  int mu0() const { return pivot_index < 0 ? 0 : underlying[pivot_index] / 2; }
  // mu_1 >= mu_2 >= ... >= mu_r
  std::vector<int> doubled() const {
    std::vector<int> v = underlying.parts();
    if (pivot_index >= 0) v.erase(v.begin() + pivot_index);
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); i += 2) out.push_back(v[i]);
    return out;
  }
  bool double_star() const {
    auto d = doubled();
    return d.empty() || 2 * mu0() >= d[0];
  }
  friend bool operator==(const StarPartition&, const StarPartition&) = default;
};

// The parse is unique: every value has even multiplicity except possibly one
// even value with odd multiplicity, which is 2 mu_0.
inline std::optional<StarPartition> parse_star(const Partition& p) {
  if (p.size() % 2) return std::nullopt;
  int odd_value = -1;
  for (int i = 0; i < p.length();) {
    int v = p[i], j = i;
    while (j < p.length() && p[j] == v) ++j;
    if ((j - i) % 2 == 1) {
      if (odd_value >= 0 || v % 2 == 1) return std::nullopt;
      odd_value = i;
    }
    i = j;
  }
  return StarPartition{p, odd_value};
}

inline bool in_p_star(const Partition& p) { return parse_star(p).has_value(); }
inline bool in_p_double_star(const Partition& p) {
  auto s = parse_star(p);
  return s && s->double_star();
}

inline std::vector<StarPartition> star_partitions(int n, bool double_star) {
  std::vector<StarPartition> out;
  for (const Partition& p : partitions_of(2 * n)) {
    auto s = parse_star(p);
    if (s && (!double_star || s->double_star())) out.push_back(*s);
  }
  return out;
}

// The set of type C partitions r with: r_i even at odd i forces r_{i+1} even;
// r_i even at even i forces r_i >= r_{i+1} + 1 (positions counted from 1).
inline bool in_p_prime(const Partition& r) {
  if (r.size() % 2 || !is_type(r, 'C')) return false;
  for (int i = 1; i <= r.length(); ++i) {
    int ri = r[i - 1], rn = r[i];
    if (ri % 2 == 0) {
      if (i % 2 == 1 && rn % 2 != 0) return false;
      if (i % 2 == 0 && ri < rn + 1) return false;
    }
  }
  return true;
}

inline Partition tilde(const Partition& r) {
  if (!in_p_prime(r)) throw std::invalid_argument("tilde: " + r.str() + " is outside its domain");
  std::vector<int> out = r.parts();
  for (int i = 1; i <= r.length(); ++i) {
    int ri = r[i - 1];
    if (ri % 2 == 0) out[i - 1] = i % 2 == 1 ? ri + 1 : ri - 1;
  }
  return Partition::from_unsorted(out);
}

}  // namespace vwu
