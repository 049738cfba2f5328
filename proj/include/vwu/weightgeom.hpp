#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "vwu/rootsys.hpp"

namespace vwu {

struct DCircSet {
  Weight base;
  std::vector<Weight> members_plus;
  // lambda - gamma = sum k_i alpha_i; the k_i are integers when lambda is
  // integral and may be fractional otherwise (other cosets of W lambda + Z Phi)
  std::vector<RVec> root_coefficients;
};

// gamma in Conv(W lambda) iff lambda - gamma_+ is a nonnegative combination of simple roots.
inline bool in_hull(const RootSystem& rs, const Weight& gamma, const Weight& lambda) {
  rs.check_dim(gamma);
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("in_hull: lambda must be dominant");
  Weight g = rs.dominant_representative(gamma).first;
  RVec x;
  try {
    x = rs.root_coordinates(lambda - g);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v >= 0; });
}

namespace detail {

// Offsets (mod 1) of w lambda - lambda in simple-root coordinates, over all w.
inline std::vector<RVec> coset_offsets(const RootSystem& rs, const RVec& c) {
  int r = rs.rank();
  const IMat& a = rs.cartan();
  std::set<RVec> seen{RVec(r)};
  std::vector<RVec> queue{RVec(r)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    RVec d = queue[q];
    for (int i = 0; i < r; ++i) {
      Rational p = c[i];
      for (int j = 0; j < r; ++j) p += Rational(a[i][j]) * d[j];
      RVec d2 = d;
      d2[i] = (d[i] - p).frac();
      if (seen.insert(d2).second) queue.push_back(d2);
    }
  }
  return queue;
}

}  // namespace detail

// Dominant gamma != lambda with gamma in Conv(W lambda) and gamma conjugate to a
// point of lambda + Z Phi. Searches gamma = lambda - sum q_i alpha_i over each
// coset offset, with q bounded by the root coordinates of lambda.
inline DCircSet enumerate_d_circ_plus(const RootSystem& rs, const Weight& lambda) {
  rs.check_dim(lambda);
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("enumerate_d_circ_plus: lambda must be dominant");
  int r = rs.rank();
  const IMat& a = rs.cartan();
  RVec c = rs.pairings(lambda);
  RVec ub = mat_vec(rs.inverse_cartan(), c);
  DCircSet out;
  out.base = lambda;
  std::vector<RVec> found;

  for (const RVec& delta : detail::coset_offsets(rs, c)) {
    // slack[j][i]: largest possible later gain of pairing j from coordinates > i
    std::vector<RVec> gain(r, RVec(r + 1));
    for (int j = 0; j < r; ++j)
      for (int i = r - 1; i >= 0; --i) {
        Rational g = gain[j][i + 1];
        if (i != j && ub[i] >= delta[i]) g += Rational(-a[j][i]) * ub[i];
        gain[j][i] = g;
      }
    RVec q(r);
    RVec pair = c;
    auto dfs = [&](auto&& self, int i) -> void {
      if (i == r) {
        if (is_zero(q)) return;
        for (int j = 0; j < r; ++j)
          if (pair[j] < 0) return;
        found.push_back(q);
        return;
      }
      for (Rational v = delta[i]; v <= ub[i]; v += 1) {
        q[i] = v;
        RVec saved = pair;
        for (int j = 0; j < r; ++j)
          if (a[j][i]) pair[j] -= Rational(a[j][i]) * v;
        bool dead = false;
        for (int j = 0; j <= i && !dead; ++j)
          if (pair[j] + gain[j][i + 1] < 0) dead = true;
        if (!dead) self(self, i + 1);
        pair = saved;
        // pairing i only decreases as q_i grows once the later gains are spent
        if (pair[i] - Rational(2) * v + gain[i][i + 1] < 0) break;
      }
      q[i] = 0;
    };
    if (r > 0) dfs(dfs, 0);
  }
  std::sort(found.begin(), found.end(), [](const RVec& x, const RVec& y) {
    Rational hx, hy;
    for (auto& v : x) hx += v;
    for (auto& v : y) hy += v;
    if (hx != hy) return hx < hy;
    return x < y;
  });
  for (const RVec& q : found) {
    Weight g = lambda;
    for (int i = 0; i < r; ++i)
      if (!q[i].is_zero()) g = g - q[i] * rs.simple_roots()[i];
    out.members_plus.push_back(g);
    out.root_coefficients.push_back(q);
  }
  return out;
}

inline Rational euclidean_norm_sq(const RootSystem& rs, const Weight& mu) {
  if (!rs.bourbaki()) throw std::invalid_argument("euclidean norm needs Bourbaki coordinates (classical type)");
  rs.check_dim(mu);
  Rational s;
  for (const auto& x : mu) s += x * x;
  return s;
}

// W-invariant form on the span of the roots, normalised so short roots have
// squared length 2.
inline Rational invariant_norm_sq(const RootSystem& rs, const Weight& mu) {
  int r = rs.rank();
  const IMat& a = rs.cartan();
  RVec len(r);
  std::vector<bool> set(r, false);
  for (const IVec& comp : dynkin_components(a)) {
    len[comp[0]] = 1;
    set[comp[0]] = true;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i : comp)
        for (int j : comp)
          if (set[i] && !set[j] && a[i][j] != 0) {
            len[j] = Rational(a[i][j]) * len[i] / Rational(a[j][i]);
            set[j] = true;
            progress = true;
          }
    }
    Rational mn = len[comp[0]];
    for (int i : comp) mn = std::min(mn, len[i]);
    for (int i : comp) len[i] = Rational(2) * len[i] / mn;
  }
  RVec p = rs.pairings(mu);
  RVec x = mat_vec(rs.inverse_cartan(), p);
  Rational s;
  for (int i = 0; i < r; ++i) s += x[i] * p[i] * len[i] / Rational(2);
  return s;
}

// Euclidean norm in Bourbaki coordinates, invariant norm otherwise.
inline Rational norm_sq(const RootSystem& rs, const Weight& mu) {
  return rs.bourbaki() ? euclidean_norm_sq(rs, mu) : invariant_norm_sq(rs, mu);
}

}  // namespace vwu
