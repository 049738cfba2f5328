#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vwu/partitions.hpp"
#include "vwu/rootsys.hpp"

namespace vwu {

// Size of the defining representation whose Jordan types label the orbits.
inline int orbit_partition_size(CartanType t) {
  switch (t.family) {
    case 'A': return t.rank + 1;
    case 'B': return 2 * t.rank + 1;
    case 'C': case 'D': return 2 * t.rank;
  }
  throw std::invalid_argument("no partition parameterisation for " + t.name());
}

struct OrbitLabel {
  CartanType type;
  Partition partition;  // classical types
  std::string label;    // exceptional types

  bool exceptional() const { return !type.classical(); }
  std::string str() const { return exceptional() ? label : partition.str(); }
  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

inline OrbitLabel classical_orbit(CartanType t, const Partition& p) {
  if (p.size() != orbit_partition_size(t))
    throw std::invalid_argument("partition " + p.str() + " does not parameterise an orbit of " + t.name());
  if (t.family != 'A' && !is_type(p, t.family))
    throw std::invalid_argument("partition " + p.str() + " is not of type " + std::string(1, t.family));
  return {t, p, ""};
}

inline OrbitLabel zero_orbit_classical(CartanType t) {
  return {t, Partition(std::vector<int>(orbit_partition_size(t), 1)), ""};
}

// Closure order data for one exceptional type, read from a text file:
//   type G2
//   orbit <label> dim <d>
//   cover <smaller> <larger>
//   richardson <comma separated 1-based simple indices, or -> <label>
class ClosureTable {
 public:
  CartanType type;
  std::vector<std::string> labels;
  std::map<std::string, int> dims;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<IVec, std::string> richardson;  // 0-based sorted subsets
  std::string source;

  static ClosureTable parse(std::istream& in, const std::string& source = "<stream>") {
    ClosureTable t;
    t.source = source;
    bool have_type = false;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error(source + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::istringstream ls(line);
      std::string kw;
      if (!(ls >> kw)) continue;
      if (kw == "type") {
        std::string ty;
        ls >> ty;
        t.type = CartanType::parse(ty);
        if (t.type.classical()) fail("closure tables are for exceptional types");
        have_type = true;
      } else if (kw == "orbit") {
        std::string lab, dimkw;
        int d = -1;
        ls >> lab >> dimkw >> d;
        if (lab.empty() || dimkw != "dim" || d < 0) fail("expected: orbit <label> dim <d>");
        if (t.dims.count(lab)) fail("duplicate orbit " + lab);
        t.labels.push_back(lab);
        t.dims[lab] = d;
      } else if (kw == "cover") {
        std::string a, b;
        ls >> a >> b;
        if (!t.dims.count(a) || !t.dims.count(b)) fail("cover references an unknown orbit");
        if (t.dims[a] >= t.dims[b]) fail("cover " + a + " < " + b + " does not increase dimension");
        t.covers.push_back({a, b});
      } else if (kw == "richardson") {
        std::string subset, lab;
        ls >> subset >> lab;
        if (!t.dims.count(lab)) fail("richardson references an unknown orbit " + lab);
        IVec key;
        if (subset != "-") {
          std::stringstream ss(subset);
          std::string item;
          while (std::getline(ss, item, ',')) {
            int k = std::stoi(item) - 1;
            if (!have_type || k < 0 || k >= t.type.rank) fail("bad simple index " + item);
            key.push_back(k);
          }
        }
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end()) fail("repeated simple index");
        if (t.richardson.count(key)) fail("duplicate richardson entry");
        t.richardson[key] = lab;
      } else {
        fail("unknown keyword " + kw);
      }
    }
    if (!have_type) fail("missing type header");
    t.validate();
    return t;
  }

  static ClosureTable load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open closure table " + path);
    return parse(f, path);
  }

  void validate() const {
    // acyclic: dimension strictly increases along covers, checked at parse time
    if (labels.empty()) throw std::runtime_error(source + ": no orbits");
    int n = type.rank;
    for (int mask = 0; mask < (1 << n); ++mask) {
      IVec key;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) key.push_back(i);
      if (!richardson.count(key))
        throw std::runtime_error(source + ": richardson entry missing for a subset of size " + std::to_string(key.size()));
    }
  }

  bool has(const std::string& lab) const { return dims.count(lab) > 0; }

  bool leq(const std::string& a, const std::string& b) const {
    if (!has(a) || !has(b)) throw std::invalid_argument("unknown orbit label in " + type.name() + " table");
    std::set<std::string> seen{a};
    std::vector<std::string> stack{a};
    while (!stack.empty()) {
      std::string x = stack.back();
      stack.pop_back();
      if (x == b) return true;
      for (auto& [s, l] : covers)
        if (s == x && seen.insert(l).second) stack.push_back(l);
    }
    return false;
  }

  const std::string& richardson_for(IVec subset) const {
    std::sort(subset.begin(), subset.end());
    auto it = richardson.find(subset);
    if (it == richardson.end()) throw std::invalid_argument("no richardson entry for subset");
    return it->second;
  }
};

class TableSet {
 public:
  void add(ClosureTable t) { tables_[t.type.name()] = std::move(t); }

  // Loads every *.tbl file in a directory.
  void load_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw std::runtime_error("table directory not found: " + dir);
    std::vector<fs::path> files;
    for (auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".tbl") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (auto& p : files) add(ClosureTable::load(p.string()));
  }

  const ClosureTable* find(CartanType t) const {
    auto it = tables_.find(t.name());
    return it == tables_.end() ? nullptr : &it->second;
  }
  std::vector<std::string> sources() const {
    std::vector<std::string> s;
    for (auto& [k, v] : tables_) s.push_back(v.source);
    return s;
  }

 private:
  std::map<std::string, ClosureTable> tables_;
};

inline bool closure_leq(const OrbitLabel& a, const OrbitLabel& b, const TableSet* tables = nullptr) {
  if (!(a.type == b.type)) throw std::invalid_argument("closure_leq: orbits of different algebras");
  if (!a.exceptional()) return dominance_leq(a.partition, b.partition);
  const ClosureTable* t = tables ? tables->find(a.type) : nullptr;
  if (!t) throw std::runtime_error("no closure table loaded for " + a.type.name());
  return t->leq(a.label, b.label);
}

struct LeviDatum {
  IVec gl_blocks;     // gl(a_1) x ... x gl(a_k)
  int remainder = 0;  // rank m of the classical factor (types B, C, D)
  CartanType ambient;
  IVec subset;        // simple indices of the Levi, used for exceptional ambients

  void validate() const {
    ambient.validate();
    if (!ambient.classical()) return;
    int s = 0;
    for (int a : gl_blocks) {
      if (a <= 0) throw std::invalid_argument("gl block sizes must be positive");
      s += a;
    }
    if (remainder < 0) throw std::invalid_argument("negative classical remainder");
    if (ambient.family == 'A') {
      if (remainder != 0 || s != ambient.rank + 1)
        throw std::invalid_argument("gl blocks must sum to " + std::to_string(ambient.rank + 1) + " in type A");
    } else if (s + remainder != ambient.rank) {
      throw std::invalid_argument("block sizes plus remainder must equal the rank " + std::to_string(ambient.rank));
    }
  }
};

// Levi datum of the standard Levi with the given simple nodes (Bourbaki order).
inline LeviDatum levi_from_subset(CartanType t, const std::vector<bool>& in) {
  t.validate();
  int n = t.rank;
  if ((int)in.size() != n) throw std::invalid_argument("subset size does not match rank");
  LeviDatum L;
  L.ambient = t;
  for (int i = 0; i < n; ++i)
    if (in[i]) L.subset.push_back(i);
  if (!t.classical()) return L;
  int coords = t.family == 'A' ? n + 1 : n;
  // joins[i]: coordinates i and i+1 lie in one block
  std::vector<bool> joins(std::max(coords - 1, 0), false);
  bool tail_classical = false;
  if (t.family == 'A') {
    for (int i = 0; i < n; ++i) joins[i] = in[i];
  } else if (t.family == 'B' || t.family == 'C') {
    for (int i = 0; i + 1 < n; ++i) joins[i] = in[i];
    tail_classical = in[n - 1];
  } else {
    for (int i = 0; i + 2 < n; ++i) joins[i] = in[i];
    bool a = in[n - 2], b = in[n - 1];
    joins[n - 2] = a || b;
    tail_classical = a && b;
  }
  std::vector<int> runs;
  int len = 1;
  for (int i = 0; i + 1 < coords; ++i) {
    if (joins[i]) ++len;
    else {
      runs.push_back(len);
      len = 1;
    }
  }
  runs.push_back(len);
  if (tail_classical) {
    L.remainder = runs.back();
    runs.pop_back();
  }
  L.gl_blocks = runs;
  return L;
}

inline OrbitLabel induce_zero(const LeviDatum& L, const TableSet* tables = nullptr) {
  L.validate();
  CartanType t = L.ambient;
  if (!t.classical()) {
    const ClosureTable* tab = tables ? tables->find(t) : nullptr;
    if (!tab) throw std::runtime_error("no richardson data loaded for " + t.name());
    return {t, Partition(), tab->richardson_for(L.subset)};
  }
  if (t.family == 'A') return {t, transpose(Partition::from_unsorted(L.gl_blocks)), ""};
  int base = t.family == 'B' ? 2 * L.remainder + 1 : 2 * L.remainder;
  std::vector<int> d(base, 1);
  for (int a : L.gl_blocks) {
    if ((int)d.size() < a) d.resize(a, 0);
    for (int i = 0; i < a; ++i) d[i] += 2;
    d = collapse(Partition::from_unsorted(d), t.family).parts();
  }
  return {t, Partition::from_unsorted(d), ""};
}

namespace detail {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = (unsigned __int128)a * b;
  std::uint64_t lo = (std::uint64_t)(r & kPrime), hi = (std::uint64_t)(r >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }
inline std::uint64_t from_rational(const Rational& q) {
  std::int64_t n = q.num();
  std::uint64_t un = n >= 0 ? (std::uint64_t)n % kPrime : kPrime - ((std::uint64_t)(-n) % kPrime);
  return mulmod(un % kPrime, invmod((std::uint64_t)q.den() % kPrime));
}

using ModMat = std::vector<std::vector<std::uint64_t>>;

inline ModMat matmul(const ModMat& a, const ModMat& b) {
  std::size_t n = a.size();
  ModMat c(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = addmod(c[i][j], mulmod(a[i][k], b[k][j]));
    }
  return c;
}

inline int rank_mod(ModMat m) {
  int n = (int)m.size(), r = 0;
  int cols = n ? (int)m[0].size() : 0;
  for (int c = 0; c < cols && r < n; ++c) {
    int p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    std::uint64_t inv = invmod(m[r][c]);
    for (int i = r + 1; i < n; ++i) {
      if (!m[i][c]) continue;
      std::uint64_t f = mulmod(m[i][c], inv);
      for (int j = c; j < cols; ++j) m[i][j] = submod(m[i][j], mulmod(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

// Jordan type of a nilpotent matrix from the ranks of its powers.
inline Partition jordan_type(const ModMat& x) {
  int n = (int)x.size();
  std::vector<int> ranks{n};
  ModMat p = x;
  while (ranks.back() > 0) {
    ranks.push_back(rank_mod(p));
    if (ranks.back() == ranks[ranks.size() - 2]) throw std::logic_error("matrix is not nilpotent");
    p = matmul(p, x);
  }
  std::vector<int> cols;
  for (std::size_t k = 1; k < ranks.size(); ++k) cols.push_back(ranks[k - 1] - ranks[k]);
  return transpose(Partition(cols));
}

}  // namespace detail

// Samples random elements of the nilradical of a parabolic with Levi L in the
// defining representation and returns the dominance-largest Jordan type seen.
inline OrbitLabel richardson_oracle(const LeviDatum& L, int trials, std::uint64_t seed = 20240601) {
  L.validate();
  CartanType t = L.ambient;
  if (!t.classical()) throw std::invalid_argument("richardson_oracle needs a classical ambient");
  if (trials <= 0) throw std::invalid_argument("trials must be positive");
  std::vector<int> sizes = L.gl_blocks;
  if (t.family != 'A') {
    int mid = t.family == 'B' ? 2 * L.remainder + 1 : 2 * L.remainder;
    if (mid > 0) sizes.push_back(mid);
    for (auto it = L.gl_blocks.rbegin(); it != L.gl_blocks.rend(); ++it) sizes.push_back(*it);
  }
  std::vector<int> block;
  for (int b = 0; b < (int)sizes.size(); ++b)
    for (int k = 0; k < sizes[b]; ++k) block.push_back(b);
  int n = (int)block.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numd(-6, 6), dend(1, 4);
  using detail::ModMat;
  // antidiagonal form: symmetric for orthogonal, [[0,K],[-K,0]] for symplectic
  auto jsign = [&](int r) -> int {
    if (t.family == 'C') return r < n / 2 ? 1 : -1;
    return 1;
  };
  OrbitLabel best = zero_orbit_classical(t);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::vector<Rational>> y(n, std::vector<Rational>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (block[r] < block[c]) y[r][c] = Rational(numd(rng), dend(rng));
    ModMat x(n, std::vector<std::uint64_t>(n, 0));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Rational v = y[r][c];
        if (t.family != 'A') {
          // (J Y^T J)_{rc} = J_{r,r'} Y_{c',r'}... with r' = n-1-r
          Rational m = Rational(jsign(r) * jsign(n - 1 - c)) * y[n - 1 - c][n - 1 - r];
          v = t.family == 'C' ? v + m : v - m;
        }
        x[r][c] = detail::from_rational(v);
      }
    Partition p = detail::jordan_type(x);
    if (dominance_leq(best.partition, p)) best.partition = p;
  }
  return best;
}

// Richardson orbit of the Levi cut out by the zero coordinates (type A: equal
// coordinates) of v, via transpose and collapse of the multiplicity partition.
inline OrbitLabel orbit_from_coordinates(CartanType factor, const RVec& v) {
  if (!factor.classical()) throw std::invalid_argument("orbit_from_coordinates: " + factor.name() + " is not classical");
  int expect = factor.family == 'A' ? factor.rank + 1 : factor.rank;
  if ((int)v.size() != expect) throw std::invalid_argument("expected " + std::to_string(expect) + " coordinates");
  std::map<Rational, int> mult;
  if (factor.family == 'A') {
    for (auto& x : v) ++mult[x];
    std::vector<int> parts;
    for (auto& [k, m] : mult) parts.push_back(m);
    return {factor, transpose(Partition::from_unsorted(parts)), ""};
  }
  int zeros = 0;
  for (auto& x : v) {
    if (x.is_zero()) ++zeros;
    else ++mult[x.abs()];
  }
  std::vector<int> parts{factor.family == 'B' ? 2 * zeros + 1 : 2 * zeros};
  for (auto& [k, m] : mult) {
    parts.push_back(m);
    parts.push_back(m);
  }
  return {factor, collapse(transpose(Partition::from_unsorted(parts)), factor.family), ""};
}

// Barbasch-Vogan duality: A -> A by transpose, B -> C by ((p^t)^-)_C,
// C -> B by ((p^t)^+)_B, D -> D by (p^t)_D.
inline OrbitLabel bv_dual(const OrbitLabel& a) {
  if (a.exceptional()) throw std::invalid_argument("bv_dual: exceptional types are not supported");
  CartanType t = a.type;
  Partition pt = transpose(a.partition);
  std::vector<int> v = pt.parts();
  switch (t.family) {
    case 'A':
      return {t, pt, ""};
    case 'B': {
      if (!v.empty()) v.back() -= 1;
      return {dual_type(t), collapse(Partition::from_unsorted(v), 'C'), ""};
    }
    case 'C': {
      if (v.empty()) v.push_back(1);
      else v.front() += 1;
      return {dual_type(t), collapse(Partition::from_unsorted(v), 'B'), ""};
    }
    default:
      return {t, collapse(pt, 'D'), ""};
  }
}

}  // namespace vwu
