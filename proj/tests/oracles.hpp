#pragma once

// Brute-force reference implementations used by the tests and the acceptance
// runner. They share only Rational, Partition and the closure tables with the
// library; roots, orbits, hulls and orbit labels are rebuilt from scratch.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vwu/orbits.hpp"
#include "vwu/partitions.hpp"
#include "vwu/rational.hpp"

namespace oracle {

using vwu::Partition;
using vwu::Rational;
using vwu::RVec;

inline RVec unit(int d, int i) {
  RVec v(d);
  v[i] = 1;
  return v;
}

inline RVec scaled(const RVec& v, const Rational& c) {
  RVec r = v;
  for (auto& x : r) x *= c;
  return r;
}

inline RVec plus(const RVec& a, const RVec& b) {
  RVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Rational dotp(const RVec& a, const RVec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// All roots written out in an explicit Euclidean model, plus a simple system
// used only to turn simple pairings into a vector.
struct Model {
  char family = 'A';  // 'A'..'D', 'G', or 'P' for A1 x A1
  int rank = 0;
  int dim = 0;
  std::vector<RVec> roots;
  std::vector<RVec> simple;

  RVec coroot(const RVec& b) const { return scaled(b, Rational(2) / dotp(b, b)); }
  Rational pair(const RVec& b, const RVec& x) const { return dotp(coroot(b), x); }
  RVec reflect(const RVec& b, const RVec& x) const { return plus(x, scaled(b, -pair(b, x))); }

  // x in the span of the simple roots with <x, alpha_i^vee> = c_i
  RVec from_pairings(const RVec& c) const {
    int n = (int)simple.size();
    std::vector<RVec> m(n, RVec(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = pair(simple[i], simple[j]);
      m[i][n] = c[i];
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (m[piv][col].is_zero()) ++piv;
      std::swap(m[piv], m[col]);
      for (int r = 0; r < n; ++r) {
        if (r == col || m[r][col].is_zero()) continue;
        Rational f = m[r][col] / m[col][col];
        for (int k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
      }
    }
    RVec x(dim);
    for (int i = 0; i < n; ++i) x = plus(x, scaled(simple[i], m[i][n] / m[i][i]));
    return x;
  }
};

inline Model model(char family, int n) {
  Model m;
  m.family = family;
  m.rank = n;
  auto add_pm = [&](const RVec& v) {
    m.roots.push_back(v);
    m.roots.push_back(scaled(v, -1));
  };
  if (family == 'A') {
    m.dim = n + 1;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) add_pm(plus(unit(m.dim, i), scaled(unit(m.dim, j), -1)));
    for (int i = 0; i < n; ++i) m.simple.push_back(plus(unit(m.dim, i), scaled(unit(m.dim, i + 1), -1)));
    return m;
  }
  if (family == 'G') {
    m.dim = 3;
    RVec e0 = unit(3, 0), e1 = unit(3, 1), e2 = unit(3, 2);
    RVec s1 = plus(e0, scaled(e1, -1)), s2 = plus(e1, scaled(e2, -1)), s3 = plus(e0, scaled(e2, -1));
    for (auto& s : {s1, s2, s3}) add_pm(s);
    add_pm(plus(scaled(e0, 2), scaled(plus(e1, e2), -1)));
    add_pm(plus(scaled(e1, 2), scaled(plus(e0, e2), -1)));
    add_pm(plus(scaled(e2, 2), scaled(plus(e0, e1), -1)));
    m.simple = {s1, plus(scaled(e0, -2), plus(e1, e2))};
    return m;
  }
  if (family == 'P') {  // A1 x A1 as the D2 roots
    m.dim = 2;
    add_pm(RVec{1, -1});
    add_pm(RVec{1, 1});
    m.simple = {RVec{1, -1}, RVec{1, 1}};
    return m;
  }
  m.dim = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      add_pm(plus(unit(n, i), scaled(unit(n, j), -1)));
      add_pm(plus(unit(n, i), unit(n, j)));
    }
  for (int i = 0; i < n; ++i) {
    if (family == 'B') add_pm(unit(n, i));
    if (family == 'C') add_pm(scaled(unit(n, i), 2));
  }
  for (int i = 0; i + 1 < n; ++i) m.simple.push_back(plus(unit(n, i), scaled(unit(n, i + 1), -1)));
  if (family == 'B') m.simple.push_back(unit(n, n - 1));
  if (family == 'C') m.simple.push_back(scaled(unit(n, n - 1), 2));
  if (family == 'D') m.simple.push_back(plus(unit(n, n - 2), unit(n, n - 1)));
  return m;
}

// Exact phase-one simplex (Bland's rule): is there x >= 0 with A x = b?
inline bool feasible(std::vector<RVec> a, RVec b) {
  int rows = (int)a.size(), cols = rows ? (int)a[0].size() : 0;
  for (int i = 0; i < rows; ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  // tableau: original columns, one artificial per row, rhs
  int total = cols + rows;
  std::vector<RVec> t(rows, RVec(total + 1));
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1;
    t[i][total] = b[i];
    basis[i] = cols + i;
  }
  while (true) {
    // reduced costs of minimising the artificial sum
    int enter = -1;
    for (int j = 0; j < total && enter < 0; ++j) {
      bool basic = std::find(basis.begin(), basis.end(), j) != basis.end();
      if (basic) continue;
      Rational rc = j >= cols ? Rational(1) : Rational(0);
      for (int i = 0; i < rows; ++i)
        if (basis[i] >= cols) rc -= t[i][j];
      if (rc < 0) enter = j;
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < rows; ++i) {
      if (!(t[i][enter] > 0)) continue;
      Rational ratio = t[i][total] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction cannot occur in phase one
    Rational p = t[leave][enter];
    for (auto& v : t[leave]) v /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      Rational f = t[i][enter];
      for (int j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  for (int i = 0; i < rows; ++i)
    if (basis[i] >= cols && !t[i][total].is_zero()) return false;
  return true;
}

inline bool in_convex_hull(const std::vector<RVec>& vertices, const RVec& p) {
  int d = (int)p.size(), m = (int)vertices.size();
  std::vector<RVec> a(d + 1, RVec(m));
  RVec b(d + 1);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < d; ++i) a[i][j] = vertices[j][i];
    a[d][j] = 1;
  }
  for (int i = 0; i < d; ++i) b[i] = p[i];
  b[d] = 1;
  return feasible(a, b);
}

// Orbit data: one label per factor of the integral coroot system, keyed so the
// same factor gets the same key for lambda and for every gamma in lambda + Z Phi.
using OrbitTuple = std::map<std::string, vwu::OrbitLabel>;

inline vwu::CartanType ct(char f, int n) { return vwu::CartanType{f, n}; }

inline Partition mult_partition(const std::vector<Rational>& vals) {
  std::map<Rational, int> m;
  for (auto& v : vals) ++m[v];
  std::vector<int> parts;
  for (auto& [k, c] : m) parts.push_back(c);
  return Partition::from_unsorted(parts);
}

// Richardson orbit of the coordinate Levi in a classical algebra, written
// straight from the partition recipe: [2z(+1), m_x, m_x, ...]^t, collapsed.
inline vwu::OrbitLabel classical_from_values(char fam, const std::vector<Rational>& vals) {
  int n = (int)vals.size();
  if (fam == 'A') return {ct('A', n - 1), vwu::transpose(mult_partition(vals)), ""};
  int zeros = 0;
  std::map<Rational, int> m;
  for (auto& v : vals) {
    if (v.is_zero()) ++zeros;
    else ++m[v.abs()];
  }
  std::vector<int> parts{fam == 'B' ? 2 * zeros + 1 : 2 * zeros};
  for (auto& [k, c] : m) {
    parts.push_back(c);
    parts.push_back(c);
  }
  Partition p = vwu::collapse(vwu::transpose(Partition::from_unsorted(parts)), fam);
  return {ct(fam, n), p, ""};
}

// Classical ambient: split coordinates into Z, 1/2 + Z and the classes {r, -r}.
inline OrbitTuple classical_orbits(const Model& m, const RVec& x) {
  OrbitTuple out;
  if (m.family == 'A') {
    std::map<Rational, std::vector<Rational>> cls;
    for (auto& v : x) cls[v.frac()].push_back(v);
    for (auto& [r, vals] : cls) out["A" + r.str()] = classical_from_values('A', vals);
    return out;
  }
  std::vector<Rational> z, h;
  std::map<Rational, std::vector<Rational>> gl;
  for (auto& v : x) {
    Rational f = v.frac();
    if (f.is_zero()) z.push_back(v);
    else if (f == Rational(1, 2)) h.push_back(v);
    else {
      Rational key = std::min(f, Rational(1) - f);
      gl[key].push_back(f == key ? v : -v);
    }
  }
  // coroot system of each piece: B ambient -> C, C ambient -> B (Z) and D (1/2),
  // D ambient -> D
  auto piece = [&](const std::string& key, char fam, const std::vector<Rational>& vals) {
    int k = (int)vals.size();
    if (k == 0) return;
    if (fam == 'D' && k == 1) return;  // no roots
    if (fam == 'D' && k == 2) {
      // D2 = A1 x A1 on e1 - e2 and e1 + e2
      out[key + "-"] = {ct('A', 1), (vals[0] - vals[1]).is_zero() ? Partition{1, 1} : Partition{2}, ""};
      out[key + "+"] = {ct('A', 1), (vals[0] + vals[1]).is_zero() ? Partition{1, 1} : Partition{2}, ""};
      return;
    }
    out[key] = classical_from_values(fam, vals);
  };
  char zf = m.family == 'B' ? 'C' : m.family == 'C' ? 'B' : 'D';
  char hf = m.family == 'B' ? 'C' : 'D';
  piece("Z", zf, z);
  piece("H", hf, h);
  for (auto& [r, vals] : gl) out["gl" + r.str()] = classical_from_values('A', vals);
  return out;
}

// G2 ambient: components of the integral coroots, orbit read off from the
// number of coroots vanishing on x.
inline OrbitTuple g2_orbits(const Model& m, const RVec& x) {
  std::vector<RVec> pos;
  for (std::size_t k = 0; k < m.roots.size(); k += 2) {
    RVec co = m.coroot(m.roots[k]);
    if (dotp(co, x).is_integer()) pos.push_back(co);
  }
  int n = (int)pos.size();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> st{s};
    comp[s] = nc;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && !dotp(pos[u], pos[v]).is_zero()) {
          comp[v] = nc;
          st.push_back(v);
        }
    }
    ++nc;
  }
  OrbitTuple out;
  for (int c = 0; c < nc; ++c) {
    std::vector<RVec> mem;
    int zeros = 0;
    for (int k = 0; k < n; ++k)
      if (comp[k] == c) {
        mem.push_back(pos[k]);
        if (dotp(pos[k], x).is_zero()) ++zeros;
      }
    std::sort(mem.begin(), mem.end());
    std::string key = vwu::to_string(mem[0]) + "#" + std::to_string(mem.size());
    if (mem.size() == 1) out[key] = {ct('A', 1), zeros ? Partition{1, 1} : Partition{2}, ""};
    else if (mem.size() == 3) {
      Partition p = zeros == 0 ? Partition{3} : zeros == 1 ? Partition{2, 1} : Partition{1, 1, 1};
      out[key] = {ct('A', 2), p, ""};
    } else {
      std::string lab = zeros == 0 ? "G2" : zeros == 1 ? "G2(a1)" : "0";
      out[key] = {ct('G', 2), Partition(), lab};
    }
  }
  return out;
}

inline OrbitTuple orbits(const Model& m, const RVec& x) {
  return m.family == 'G' ? g2_orbits(m, x) : classical_orbits(m, x);
}

inline bool tuple_leq(const OrbitTuple& a, const OrbitTuple& b, const vwu::TableSet* tables) {
  if (a.size() != b.size()) throw std::logic_error("oracle: factor structure changed inside lambda + Z Phi");
  for (auto& [k, oa] : a) {
    auto it = b.find(k);
    if (it == b.end()) throw std::logic_error("oracle: factor " + k + " missing");
    const vwu::OrbitLabel& ob = it->second;
    bool leq = oa.exceptional() ? tables->find(oa.type)->leq(oa.label, ob.label)
                                : vwu::dominance_leq(oa.partition, ob.partition);
    if (!leq) return false;
  }
  return true;
}

struct BruteResult {
  bool is_vwu = true;
  int d_circ = 0;          // all of D°(lambda), not only dominant points
  bool norm_guard = true;  // every member has |gamma| < |lambda|
};

// Very weak unipotence by brute force over the integral Weyl group W_lambda.
inline BruteResult vwu_bruteforce(const Model& m, const RVec& lambda, const vwu::TableSet* tables) {
  std::vector<RVec> phi;
  for (auto& b : m.roots)
    if (m.pair(b, lambda).is_integer()) phi.push_back(b);
  // W_lambda orbit through reflections in every integral root
  std::set<RVec> orbit{lambda};
  std::deque<RVec> q{lambda};
  while (!q.empty()) {
    RVec x = q.front();
    q.pop_front();
    for (auto& b : phi) {
      RVec y = m.reflect(b, x);
      if (orbit.insert(y).second) q.push_back(y);
    }
  }
  std::vector<RVec> verts(orbit.begin(), orbit.end());
  Rational lam_norm = dotp(lambda, lambda);
  // lattice points of lambda + Z Phi_lambda inside the norm ball
  std::set<RVec> seen{lambda};
  std::deque<RVec> q2{lambda};
  std::vector<RVec> ball;
  while (!q2.empty()) {
    RVec x = q2.front();
    q2.pop_front();
    ball.push_back(x);
    for (auto& b : phi) {
      RVec y = plus(x, b);
      if (dotp(y, y) <= lam_norm && seen.insert(y).second) q2.push_back(y);
    }
  }
  BruteResult r;
  OrbitTuple ol = orbits(m, lambda);
  for (auto& g : ball) {
    if (orbit.count(g) || !in_convex_hull(verts, g)) continue;
    ++r.d_circ;
    if (!(dotp(g, g) < lam_norm)) r.norm_guard = false;
    if (tuple_leq(ol, orbits(m, g), tables)) r.is_vwu = false;
  }
  return r;
}

// Largest type-t partition dominated by p, by exhaustive search.
inline Partition collapse_bruteforce(const Partition& p, char t) {
  std::vector<Partition> cands;
  for (auto& q : vwu::partitions_of(p.size()))
    if (vwu::is_type(q, t) && vwu::dominance_leq(q, p)) cands.push_back(q);
  for (auto& c : cands) {
    bool top = true;
    for (auto& d : cands)
      if (!vwu::dominance_leq(d, c)) top = false;
    if (top) return c;
  }
  throw std::logic_error("no unique collapse");
}

}  // namespace oracle
