#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vwu/partitions.hpp"
#include "vwu/rational.hpp"

namespace vwu {

enum class LatticeKind { Eps, Z, Half, Quarter, Residual };

inline std::string kind_name(LatticeKind k) {
  switch (k) {
    case LatticeKind::Eps: return "eps";
    case LatticeKind::Z: return "Z";
    case LatticeKind::Half: return "1/2Z";
    case LatticeKind::Quarter: return "1/4Z";
    case LatticeKind::Residual: return "residual";
  }
  return "?";
}

struct SortedSequence {
  RVec values;  // weakly decreasing
  LatticeKind kind = LatticeKind::Eps;
  Rational eps;  // only for kind Eps

  std::string str() const {
    std::string s = kind_name(kind);
    if (kind == LatticeKind::Eps) s += "(" + eps.str() + ")";
    return s + ":" + to_string(values);
  }
};

namespace detail {

inline void sort_desc(RVec& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

inline bool is_sorted_desc(const RVec& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

inline void check_eps(const Rational& eps) {
  if (!(eps > Rational(-1, 2) && eps < Rational(1, 2)))
    throw std::invalid_argument("epsilon " + eps.str() + " is outside (-1/2, 1/2)");
}

// Sorted multiplicities of the distinct values of v.
inline Partition multiplicity_partition(const RVec& v) {
  std::map<Rational, int> m;
  for (auto& x : v) ++m[x];
  std::vector<int> parts;
  for (auto& [k, c] : m) parts.push_back(c);
  return Partition::from_unsorted(parts);
}

}  // namespace detail

// Part k (0-based) of p sits at eps for k = 0, at eps -+ j for k = 2j-1 and at
// eps +- j for k = 2j (upper signs for eps >= 0).
inline RVec v_eps(const Partition& p, const Rational& eps) {
  detail::check_eps(eps);
  RVec out;
  int sgn = eps >= 0 ? 1 : -1;
  for (int k = 0; k < p.length(); ++k) {
    Rational val = eps;
    if (k > 0) {
      int j = (k + 1) / 2;
      val = k % 2 == 1 ? eps - Rational(sgn * j) : eps + Rational(sgn * j);
    }
    for (int c = 0; c < p[k]; ++c) out.push_back(val);
  }
  detail::sort_desc(out);
  return out;
}

inline Partition p_eps(const RVec& v, const Rational& eps) {
  detail::check_eps(eps);
  for (auto& x : v)
    if (!(x - eps).is_integer()) throw std::invalid_argument("value " + x.str() + " is not in " + eps.str() + " + Z");
  return detail::multiplicity_partition(v);
}

inline bool is_eps_triangular(const RVec& v, const Rational& eps) {
  Partition p = p_eps(v, eps);
  return detail::is_sorted_desc(v) && v_eps(p, eps) == v;
}

// (r^(mu_r), ..., 1^(mu_1), 0^(mu_0))
inline RVec v_Z(const StarPartition& s) {
  auto mu = s.doubled();
  RVec out;
  for (int j = (int)mu.size(); j >= 1; --j)
    for (int c = 0; c < mu[j - 1]; ++c) out.push_back(Rational(j));
  for (int c = 0; c < s.mu0(); ++c) out.push_back(Rational(0));
  return out;
}

// [2 m(0), m(1)^(2), m(2)^(2), ...]_+
inline Partition p_Z(const RVec& v) {
  std::map<std::int64_t, int> m;
  for (auto& x : v) {
    if (!x.is_integer() || x < 0) throw std::invalid_argument("value " + x.str() + " is not a nonnegative integer");
    ++m[x.num()];
  }
  std::vector<int> parts;
  for (auto& [k, c] : m) {
    if (k == 0) parts.push_back(2 * c);
    else {
      parts.push_back(c);
      parts.push_back(c);
    }
  }
  return Partition::from_unsorted(parts);
}

inline bool is_Z_triangular(const RVec& v) {
  Partition p = p_Z(v);
  auto s = parse_star(p);
  if (!s || !s->double_star()) return false;
  return detail::is_sorted_desc(v) && v_Z(*s) == v;
}

namespace detail {
// value (2j-1)/den with multiplicity nu_j
inline RVec v_odd_over(const Partition& nu, int den) {
  RVec out;
  for (int j = nu.length(); j >= 1; --j)
    for (int c = 0; c < nu[j - 1]; ++c) out.push_back(Rational(2 * j - 1, den));
  return out;
}
inline Partition p_odd_over(const RVec& v, int den) {
  for (auto& x : v) {
    Rational y = x * Rational(den);
    if (!y.is_integer() || y.num() % 2 == 0 || y < 0)
      throw std::invalid_argument("value " + x.str() + " is not in the lattice class of 1/" + std::to_string(den));
  }
  return multiplicity_partition(v);
}
}  // namespace detail

inline RVec v_half(const Partition& nu) { return detail::v_odd_over(nu, 2); }
inline Partition p_half(const RVec& v) { return detail::p_odd_over(v, 2); }
inline bool is_half_triangular(const RVec& v) { return detail::is_sorted_desc(v) && v_half(p_half(v)) == v; }

inline RVec v_quarter(const Partition& nu) { return detail::v_odd_over(nu, 4); }
inline Partition p_quarter(const RVec& v) { return detail::p_odd_over(v, 4); }
inline bool is_quarter_triangular(const RVec& v) { return detail::is_sorted_desc(v) && v_quarter(p_quarter(v)) == v; }

// Whether every value lies in the class declared by kind.
inline bool in_class(const SortedSequence& s) {
  for (auto& x : s.values) {
    switch (s.kind) {
      case LatticeKind::Eps:
        if (!(x - s.eps).is_integer()) return false;
        break;
      case LatticeKind::Z:
        if (!x.is_integer() || x < 0) return false;
        break;
      case LatticeKind::Half:
      case LatticeKind::Quarter: {
        Rational y = x * Rational(s.kind == LatticeKind::Half ? 2 : 4);
        if (!y.is_integer() || y.num() % 2 == 0 || y < 0) return false;
        break;
      }
      case LatticeKind::Residual:
        return false;
    }
  }
  return true;
}

// False (rather than an error) when the values leave the declared class.
inline bool is_triangular(const SortedSequence& s) {
  if (!in_class(s)) return false;
  switch (s.kind) {
    case LatticeKind::Eps: return is_eps_triangular(s.values, s.eps);
    case LatticeKind::Z: return is_Z_triangular(s.values);
    case LatticeKind::Half: return is_half_triangular(s.values);
    case LatticeKind::Quarter: return is_quarter_triangular(s.values);
    case LatticeKind::Residual: return false;
  }
  return false;
}

// Residue of x mod Z in (-1/2, 1/2].
inline Rational residue(const Rational& x) {
  Rational f = x.frac();
  return f > Rational(1, 2) ? f - Rational(1) : f;
}

// Group coordinates by lattice class. Family 'A' groups by residue mod Z
// (residue 1/2 goes to the 1/2Z kind); B, C, D fold signs and split into
// Z, 1/2 + Z, 1/4 + 1/2 Z and a residual class.
inline std::vector<SortedSequence> decompose_concatenation(const RVec& v, char family) {
  std::vector<SortedSequence> out;
  if (family == 'A') {
    std::map<Rational, RVec> groups;
    for (auto& x : v) groups[residue(x)].push_back(x);
    for (auto& [r, vals] : groups) {
      SortedSequence s;
      s.values = vals;
      detail::sort_desc(s.values);
      if (r == Rational(1, 2)) s.kind = LatticeKind::Half;
      else {
        s.kind = LatticeKind::Eps;
        s.eps = r;
      }
      out.push_back(s);
    }
    return out;
  }
  if (family != 'B' && family != 'C' && family != 'D') throw std::invalid_argument("decompose_concatenation: bad family");
  SortedSequence z{{}, LatticeKind::Z, 0}, h{{}, LatticeKind::Half, 0}, q{{}, LatticeKind::Quarter, 0},
      rest{{}, LatticeKind::Residual, 0};
  for (auto& x0 : v) {
    Rational x = x0.abs();
    Rational x4 = x * Rational(4);
    if (x.is_integer()) z.values.push_back(x);
    else if ((x * Rational(2)).is_integer()) h.values.push_back(x);
    else if (x4.is_integer() && x4.num() % 2 != 0) q.values.push_back(x);
    else rest.values.push_back(x);
  }
  for (SortedSequence* s : {&z, &h, &q, &rest}) {
    if (s->values.empty()) continue;
    detail::sort_desc(s->values);
    out.push_back(*s);
  }
  return out;
}

}  // namespace vwu
