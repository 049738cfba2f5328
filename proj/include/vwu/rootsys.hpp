#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vwu/rational.hpp"

namespace vwu {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;

struct CartanType {
  char family = 'A';
  int rank = 1;

  bool classical() const { return family >= 'A' && family <= 'D'; }
  std::string name() const { return std::string(1, family) + std::to_string(rank); }

  void validate() const {
    bool ok = false;
    switch (family) {
      case 'A': case 'B': case 'C': ok = rank >= 1; break;
      case 'D': ok = rank >= 2; break;
      case 'E': ok = rank >= 6 && rank <= 8; break;
      case 'F': ok = rank == 4; break;
      case 'G': ok = rank == 2; break;
      default: break;
    }
    if (!ok) throw std::invalid_argument("inadmissible Cartan type " + name());
  }

  static CartanType parse(std::string_view s) {
    if (s.size() < 2) throw std::invalid_argument("bad Cartan type '" + std::string(s) + "'");
    CartanType t;
    t.family = (char)std::toupper((unsigned char)s[0]);
    std::string digits(s.substr(1));
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3)
      throw std::invalid_argument("bad Cartan type '" + std::string(s) + "'");
    t.rank = std::stoi(digits);
    t.validate();
    return t;
  }

  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

// Langlands dual type (B <-> C); the node order is kept.
inline CartanType dual_type(CartanType t) {
  if (t.family == 'B') t.family = 'C';
  else if (t.family == 'C') t.family = 'B';
  return t;
}

inline int positive_root_count(CartanType t) {
  int n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B': case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

// Cartan matrix a_ij = <alpha_i^vee, alpha_j>, Bourbaki numbering.
inline IMat cartan_matrix(CartanType t) {
  t.validate();
  int n = t.rank;
  IMat a(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) a[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      if (n >= 3) link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2); link(2, 3); link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1); link(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

using Weight = RVec;
// s_{w[0]} s_{w[1]} ... ; the rightmost letter acts first. Letters are 0-based.
using WeylWord = IVec;

inline std::string word_string(const WeylWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i] + 1);
  }
  return s + "]";
}

class RootSystem {
 public:
  RootSystem() = default;

  // simple roots and coroots given in a common ambient space; the pairing is
  // the dot product of ambient coordinate vectors.
  RootSystem(CartanType type, bool bourbaki, RMat simple_roots, RMat simple_coroots)
      : type_(type), bourbaki_(bourbaki), simple_(std::move(simple_roots)),
        simple_co_(std::move(simple_coroots)) {
    int n = (int)simple_.size();
    if ((int)simple_co_.size() != n) throw std::invalid_argument("root/coroot count mismatch");
    dim_ = n ? (int)simple_[0].size() : 0;
    cartan_.assign(n, IVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational v = dot(simple_co_[i], simple_[j]);
        if (!v.is_integer()) throw std::invalid_argument("non-integral Cartan entry");
        cartan_[i][j] = (int)v.num();
      }
    generate();
  }

  const CartanType& type() const { return type_; }
  bool bourbaki() const { return bourbaki_; }
  int rank() const { return (int)simple_.size(); }
  int dim() const { return dim_; }
  const RMat& simple_roots() const { return simple_; }
  const RMat& simple_coroots() const { return simple_co_; }
  const RMat& positive_roots() const { return pos_; }
  const RMat& positive_coroots() const { return pos_co_; }
  // simple-root coefficients of each positive root
  const IMat& positive_coefficients() const { return pos_coeff_; }
  const IMat& cartan() const { return cartan_; }

  void check_dim(const Weight& w) const {
    if ((int)w.size() != dim_)
      throw std::invalid_argument("weight has dimension " + std::to_string(w.size()) + ", expected " +
                                  std::to_string(dim_));
  }
  void check_index(int i) const {
    if (i < 0 || i >= rank()) throw std::out_of_range("simple index " + std::to_string(i + 1) + " out of range");
  }

  Weight zero() const { return Weight(dim_); }

  Rational pair(const RVec& coroot, const Weight& w) const {
    check_dim(w);
    return dot(coroot, w);
  }
  Rational pair_simple(int i, const Weight& w) const {
    check_index(i);
    return pair(simple_co_[i], w);
  }
  // <alpha_i^vee, w> for all i, i.e. fundamental-weight coordinates.
  RVec pairings(const Weight& w) const {
    RVec p(rank());
    for (int i = 0; i < rank(); ++i) p[i] = pair_simple(i, w);
    return p;
  }

  Weight reflect(int i, const Weight& w) const {
    Rational c = pair_simple(i, w);
    if (c.is_zero()) return w;
    return w - c * simple_[i];
  }
  Weight act(const WeylWord& word, Weight w) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = reflect(*it, w);
    return w;
  }

  bool is_dominant(const Weight& w) const {
    for (int i = 0; i < rank(); ++i)
      if (pair_simple(i, w) < 0) return false;
    return true;
  }

  // Repeated ascent through the lowest-index negative simple pairing. The word
  // satisfies act(word, w) == result.
  std::pair<Weight, WeylWord> dominant_representative(Weight w) const {
    WeylWord applied;
    while (true) {
      int hit = -1;
      for (int i = 0; i < rank(); ++i)
        if (pair_simple(i, w) < 0) {
          hit = i;
          break;
        }
      if (hit < 0) break;
      w = reflect(hit, w);
      applied.push_back(hit);
    }
    std::reverse(applied.begin(), applied.end());
    return {w, applied};
  }

  // The weight in the span of the roots with the given simple pairings.
  Weight from_fundamental(const RVec& c) const {
    if ((int)c.size() != rank()) throw std::invalid_argument("expected " + std::to_string(rank()) + " coordinates");
    RVec x = mat_vec(inverse_cartan(), c);
    Weight w = zero();
    for (int i = 0; i < rank(); ++i) w = w + x[i] * simple_[i];
    return w;
  }

  // x with w = sum x_i alpha_i; throws if w is not in the span of the roots.
  RVec root_coordinates(const Weight& w) const {
    RVec x = mat_vec(inverse_cartan(), pairings(w));
    Weight back = zero();
    for (int i = 0; i < rank(); ++i) back = back + x[i] * simple_[i];
    if (back != w) throw std::invalid_argument("weight is not in the span of the roots");
    return x;
  }

  // Inverse Cartan matrix: root coordinates x of a weight with pairings p are A^{-1} p.
  const RMat& inverse_cartan() const { return inv_cartan_; }

  int positive_index(const IVec& coeffs) const {
    auto it = coeff_index_.find(coeffs);
    return it == coeff_index_.end() ? -1 : it->second;
  }

  // Simple-root coefficients of w applied to the root with coefficients c.
  IVec act_on_root(const WeylWord& word, IVec c) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      int i = *it;
      check_index(i);
      int p = 0;
      for (int j = 0; j < rank(); ++j) p += c[j] * cartan_[i][j];
      c[i] -= p;
    }
    return c;
  }

  // Positive roots sent to negative roots by the word.
  IVec inversions(const WeylWord& word) const {
    IVec out;
    for (int k = 0; k < (int)pos_.size(); ++k) {
      IVec c = act_on_root(word, pos_coeff_[k]);
      bool neg = std::any_of(c.begin(), c.end(), [](int x) { return x < 0; });
      if (neg) out.push_back(k);
    }
    return out;
  }

  int length(const WeylWord& word) const { return (int)inversions(word).size(); }

  // True iff <mu, alpha^vee> < 0 for every positive alpha with w alpha negative.
  bool cone_membership(const WeylWord& word, const Weight& mu) const {
    check_dim(mu);
    for (int k : inversions(word))
      if (!(pair(pos_co_[k], mu) < 0)) return false;
    return true;
  }

 private:
  CartanType type_;
  bool bourbaki_ = false;
  int dim_ = 0;
  RMat simple_, simple_co_;
  RMat pos_, pos_co_;
  IMat pos_coeff_;
  IMat cartan_;
  RMat inv_cartan_;
  std::map<IVec, int> coeff_index_;

  void generate() {
    int n = rank();
    // (root coefficients, coroot coefficients), closed under simple reflections
    std::map<IVec, IVec> found;
    std::vector<std::pair<IVec, IVec>> queue;
    for (int i = 0; i < n; ++i) {
      IVec e(n, 0);
      e[i] = 1;
      found[e] = e;
      queue.push_back({e, e});
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto [c, d] = queue[q];
      for (int i = 0; i < n; ++i) {
        int p = 0, pc = 0;
        for (int j = 0; j < n; ++j) {
          p += c[j] * cartan_[i][j];
          pc += d[j] * cartan_[j][i];
        }
        IVec c2 = c, d2 = d;
        c2[i] -= p;
        d2[i] -= pc;
        if (std::any_of(c2.begin(), c2.end(), [](int x) { return x < 0; })) continue;
        if (found.count(c2)) continue;
        found[c2] = d2;
        queue.push_back({c2, d2});
      }
    }
    std::vector<std::pair<IVec, IVec>> all(found.begin(), found.end());
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      int ha = 0, hb = 0;
      for (int x : a.first) ha += x;
      for (int x : b.first) hb += x;
      if (ha != hb) return ha < hb;
      return a.first > b.first;
    });
    for (auto& [c, d] : all) {
      Weight r(dim_), rc(dim_);
      for (int j = 0; j < n; ++j) {
        if (c[j]) r = r + Rational(c[j]) * simple_[j];
        if (d[j]) rc = rc + Rational(d[j]) * simple_co_[j];
      }
      coeff_index_[c] = (int)pos_.size();
      pos_.push_back(r);
      pos_co_.push_back(rc);
      pos_coeff_.push_back(c);
    }
    RMat a(n, RVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = cartan_[i][j];
    inv_cartan_ = n ? invert(a) : RMat{};
  }
};

// Bourbaki ambient realisation for A-D; fundamental-weight coordinates (roots are
// Cartan matrix columns, coroots unit vectors) for E, F, G.
inline RootSystem build_root_system(CartanType t) {
  t.validate();
  int n = t.rank;
  RMat roots, coroots;
  auto unit = [](int dim, int i) {
    RVec v(dim);
    v[i] = 1;
    return v;
  };
  if (t.family == 'A') {
    for (int i = 0; i < n; ++i) {
      RVec v = unit(n + 1, i) - unit(n + 1, i + 1);
      roots.push_back(v);
      coroots.push_back(v);
    }
    return RootSystem(t, true, roots, coroots);
  }
  if (t.classical()) {
    for (int i = 0; i + 1 < n; ++i) {
      RVec v = unit(n, i) - unit(n, i + 1);
      roots.push_back(v);
      coroots.push_back(v);
    }
    if (t.family == 'B') {
      roots.push_back(unit(n, n - 1));
      coroots.push_back(Rational(2) * unit(n, n - 1));
    } else if (t.family == 'C') {
      roots.push_back(Rational(2) * unit(n, n - 1));
      coroots.push_back(unit(n, n - 1));
    } else {
      RVec v = unit(n, n - 2) + unit(n, n - 1);
      roots.push_back(v);
      coroots.push_back(v);
    }
    return RootSystem(t, true, roots, coroots);
  }
  IMat a = cartan_matrix(t);
  for (int j = 0; j < n; ++j) {
    RVec col(n);
    for (int i = 0; i < n; ++i) col[i] = a[i][j];
    roots.push_back(col);
    coroots.push_back(unit(n, j));
  }
  return RootSystem(t, false, roots, coroots);
}

// Root system in fundamental-weight coordinates from a Cartan matrix
// a_ij = <alpha_i^vee, alpha_j>.
inline RootSystem root_system_from_cartan(CartanType label, const IMat& a) {
  int n = (int)a.size();
  RMat roots, coroots;
  for (int j = 0; j < n; ++j) {
    RVec col(n), e(n);
    for (int i = 0; i < n; ++i) col[i] = a[i][j];
    e[j] = 1;
    roots.push_back(col);
    coroots.push_back(e);
  }
  return RootSystem(label, false, roots, coroots);
}

// Connected components of the Dynkin graph of a Cartan-like matrix.
inline std::vector<IVec> dynkin_components(const IMat& a) {
  int n = (int)a.size();
  std::vector<int> comp(n, -1);
  std::vector<IVec> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    IVec members{s};
    comp[s] = (int)out.size();
    for (std::size_t q = 0; q < members.size(); ++q) {
      int u = members[q];
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && (a[u][v] != 0 || a[v][u] != 0)) {
          comp[v] = comp[s];
          members.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

struct Classification {
  CartanType type;
  IVec order;  // order[k] = input index of Bourbaki node k
};

// Identify an irreducible Cartan matrix (a_ij = <alpha_i^vee, alpha_j>). A rank-2
// double bond is always reported as C2 and a D3 diagram as A3.
inline Classification classify_cartan(const IMat& a) {
  int n = (int)a.size();
  if (n == 0) throw std::invalid_argument("empty Cartan matrix");
  if (dynkin_components(a).size() != 1) throw std::invalid_argument("Cartan matrix is reducible");
  Classification res;
  auto adj = [&](int u) {
    IVec v;
    for (int w = 0; w < n; ++w)
      if (w != u && a[u][w] != 0) v.push_back(w);
    return v;
  };
  auto walk = [&](int start, int prev) {
    IVec path{start};
    int cur = start;
    while (true) {
      IVec next;
      for (int w : adj(cur))
        if (w != prev) next.push_back(w);
      if (next.size() != 1) break;
      prev = cur;
      cur = next[0];
      path.push_back(cur);
    }
    return path;
  };
  int branch = -1;
  bool triple = false;
  int dbl_u = -1, dbl_v = -1;
  for (int u = 0; u < n; ++u) {
    if (adj(u).size() >= 3) branch = u;
    for (int v : adj(u)) {
      int b = a[u][v] * a[v][u];
      if (b == 3) triple = true;
      if (b == 2 && u < v) {
        dbl_u = u;
        dbl_v = v;
      }
    }
  }
  if (n == 1) {
    res.type = {'A', 1};
    res.order = {0};
  } else if (triple) {
    int s = a[0][1] == -3 ? 0 : 1;
    res.type = {'G', 2};
    res.order = {s, 1 - s};
  } else if (branch >= 0) {
    std::vector<IVec> arms;
    for (int w : adj(branch)) arms.push_back(walk(w, branch));
    std::sort(arms.begin(), arms.end(), [](const IVec& x, const IVec& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x < y;
    });
    std::size_t l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
    if (l0 == 1 && l1 == 1) {
      res.type = {'D', n};
      IVec lng = arms[2];
      std::reverse(lng.begin(), lng.end());
      res.order = lng;
      res.order.push_back(branch);
      res.order.push_back(arms[0][0]);
      res.order.push_back(arms[1][0]);
    } else if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
      res.type = {'E', n};
      res.order = {arms[1][1], arms[0][0], arms[1][0], branch};
      for (int w : arms[2]) res.order.push_back(w);
    } else {
      throw std::invalid_argument("unrecognised Dynkin diagram");
    }
  } else {
    IVec ends;
    for (int u = 0; u < n; ++u)
      if (adj(u).size() <= 1) ends.push_back(u);
    if (dbl_u < 0) {
      res.type = {'A', n};
      res.order = walk(ends[0], -1);
    } else if (n == 2) {
      int s = a[0][1] == -2 ? 0 : 1;
      res.type = {'C', 2};
      res.order = {s, 1 - s};
    } else {
      bool at_end = adj(dbl_u).size() == 1 || adj(dbl_v).size() == 1;
      if (at_end) {
        int leaf = adj(dbl_u).size() == 1 ? dbl_u : dbl_v;
        int other_end = ends[0] == leaf ? ends[1] : ends[0];
        res.order = walk(other_end, -1);
        int other = res.order[n - 2];
        bool leaf_short = a[leaf][other] == -2;
        res.type = {leaf_short ? 'B' : 'C', n};
      } else {
        // F4: start from the long end
        int lng = a[dbl_u][dbl_v] == -1 ? dbl_u : dbl_v;  // a_{long,short} = -1
        int start = -1;
        for (int e : ends) {
          IVec p = walk(e, -1);
          if (p[1] == lng) start = e;
        }
        res.type = {'F', 4};
        res.order = walk(start, -1);
      }
    }
  }
  if ((int)res.order.size() != n) throw std::logic_error("classification failed to order nodes");
  IMat ref = cartan_matrix(res.type);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[res.order[i]][res.order[j]] != ref[i][j])
        throw std::logic_error("classification mismatch for " + res.type.name());
  return res;
}

struct Factor {
  CartanType type;     // type of the factor as a system of coroots
  IVec simple;         // positive (co)root indices, Bourbaki order of `type`
  IVec members;        // positive coroot indices in this factor
  IMat cartan;         // <alpha_j, beta_k> for simple coroots beta (Bourbaki order)
  std::vector<std::int64_t> pairings;  // <beta_j, lambda>
};

struct SubsystemDecomposition {
  IVec members;       // positive coroots with integral pairing
  IVec zero_members;  // positive coroots with zero pairing
  IVec simple;        // indecomposable members
  std::vector<Factor> factors;
};

inline SubsystemDecomposition integral_coroot_subsystem(const RootSystem& rs, const Weight& lambda) {
  rs.check_dim(lambda);
  SubsystemDecomposition out;
  const auto& co = rs.positive_coroots();
  const auto& roots = rs.positive_roots();
  std::set<RVec> member_set;
  for (int k = 0; k < (int)co.size(); ++k) {
    Rational p = rs.pair(co[k], lambda);
    if (p.is_integer()) {
      out.members.push_back(k);
      member_set.insert(co[k]);
      if (p.is_zero()) out.zero_members.push_back(k);
    }
  }
  for (int k : out.members) {
    bool decomposable = false;
    for (int i : out.members) {
      if (i == k) continue;
      RVec rest = co[k] - co[i];
      if (member_set.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.simple.push_back(k);
  }
  int m = (int)out.simple.size();
  // coroot-side Cartan matrix: entry (j,k) = <alpha_j, beta_k>
  IMat c(m, IVec(m));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) c[j][k] = (int)dot(co[out.simple[k]], roots[out.simple[j]]).num();
  for (const IVec& comp : dynkin_components(c)) {
    IMat sub(comp.size(), IVec(comp.size()));
    for (std::size_t j = 0; j < comp.size(); ++j)
      for (std::size_t k = 0; k < comp.size(); ++k) sub[j][k] = c[comp[j]][comp[k]];
    Classification cl = classify_cartan(sub);
    Factor f;
    f.type = cl.type;
    for (int idx : cl.order) f.simple.push_back(out.simple[comp[idx]]);
    int r = (int)f.simple.size();
    f.cartan.assign(r, IVec(r));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) f.cartan[j][k] = (int)dot(co[f.simple[k]], roots[f.simple[j]]).num();
    for (int s : f.simple) f.pairings.push_back(rs.pair(co[s], lambda).num());
    out.factors.push_back(f);
  }
  // assign members to factors: a member lies in the factor whose simple coroots span it
  for (int k : out.members) {
    for (auto& f : out.factors) {
      bool hit = false;
      for (int s : f.simple)
        if (!dot(co[k], roots[s]).is_zero() || co[k] == co[s]) hit = true;
      if (hit) {
        f.members.push_back(k);
        break;
      }
    }
  }
  return out;
}

}  // namespace vwu
