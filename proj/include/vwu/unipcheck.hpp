#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vwu/orbits.hpp"
#include "vwu/rootsys.hpp"
#include "vwu/triangular.hpp"
#include "vwu/weightgeom.hpp"

namespace vwu {

enum class Mode { Auto, Direct, Triangular, Both };

inline Mode parse_mode(const std::string& s) {
  if (s == "auto") return Mode::Auto;
  if (s == "direct") return Mode::Direct;
  if (s == "triangular") return Mode::Triangular;
  if (s == "both") return Mode::Both;
  throw std::invalid_argument("unknown mode '" + s + "' (auto, direct, triangular, both)");
}

enum class Coords { Bourbaki, Fundamental, Pairing };

inline Coords parse_coords(const std::string& s) {
  if (s == "bourbaki") return Coords::Bourbaki;
  if (s == "fundamental") return Coords::Fundamental;
  if (s == "pairing") return Coords::Pairing;
  throw std::invalid_argument("unknown coordinates '" + s + "' (bourbaki, fundamental, pairing)");
}

// Converts user input to the internal coordinates of rs. Fundamental-weight
// coordinates and simple pairings are the same vector.
inline Weight to_weight(const RootSystem& rs, const RVec& v, Coords c) {
  if (c != Coords::Bourbaki) return rs.from_fundamental(v);
  if (!rs.bourbaki()) throw std::invalid_argument(rs.type().name() + " has no Bourbaki ambient; use fundamental or pairing coordinates");
  if (rs.type().family == 'A') {
    if ((int)v.size() != rs.dim()) throw std::invalid_argument("expected " + std::to_string(rs.dim()) + " coordinates");
    Rational mean;
    for (auto& x : v) mean += x;
    mean = mean / Rational((std::int64_t)v.size());
    RVec w = v;
    for (auto& x : w) x -= mean;
    return w;
  }
  rs.check_dim(v);
  return v;
}

class UnsupportedFactor : public std::runtime_error {
 public:
  UnsupportedFactor(CartanType t, const std::string& why)
      : std::runtime_error("unsupported factor " + t.name() + ": " + why), factor(t) {}
  CartanType factor;
};

struct Witness {
  int factor = 0;
  Weight gamma;           // ambient coordinates
  RVec factor_pairings;   // <gamma, beta_j> over the simple coroots of the factor
  RVec root_coefficients; // lambda - gamma in the simple roots of the factor
  OrbitLabel orbit_lambda, orbit_gamma;
  bool equal = false;     // the two orbits coincide
  Rational norm_sq;
};

struct FactorReport {
  CartanType type;  // of the integral coroot subsystem factor
  std::vector<std::int64_t> pairings;
  OrbitLabel orbit_lambda;
  int d_circ_size = 0;
  bool is_vwu = true;
};

struct Verdict {
  bool is_vwu = true;
  std::string method;
  Weight lambda;  // dominant representative
  std::vector<FactorReport> factors;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  std::optional<bool> triangular;  // set when the triangular test ran
  std::vector<std::string> blocks; // triangular decomposition, for reports
  std::vector<std::string> tables;
  int gammas_checked = 0;
  bool norm_guard = true;  // every gamma met |gamma| < |lambda|
};

struct CheckOptions {
  Mode mode = Mode::Auto;
  bool first_failure = false;
  const TableSet* tables = nullptr;
};

namespace detail {

inline OrbitLabel factor_orbit(CartanType t, const std::vector<bool>& zero, const TableSet* tables) {
  if (!t.classical() && !(tables && tables->find(t)))
    throw UnsupportedFactor(t, "no closure table loaded");
  return induce_zero(levi_from_subset(t, zero), tables);
}

inline void note_once(std::vector<std::string>& notes, const std::string& s) {
  if (std::find(notes.begin(), notes.end(), s) == notes.end()) notes.push_back(s);
}

inline const std::string kSubstitutionNote =
    "orbit criterion used in place of the translation-functor vanishing step";

}  // namespace detail

// Direct check: for each factor of the integral coroot subsystem, compare the
// orbit of lambda with the orbit of every gamma in D°(lambda)_+ of that factor.
inline Verdict check_vwu_direct(const RootSystem& rs, const Weight& lambda_in, const CheckOptions& opt = {}) {
  rs.check_dim(lambda_in);
  Verdict v;
  v.method = "direct";
  v.lambda = rs.dominant_representative(lambda_in).first;
  v.notes.push_back(detail::kSubstitutionNote);
  Rational lam_norm = norm_sq(rs, v.lambda);
  SubsystemDecomposition sub = integral_coroot_subsystem(rs, v.lambda);
  const auto& roots = rs.positive_roots();

  // resolve every factor first so unsupported ones fail before any work
  std::vector<FactorReport> reports;
  for (const Factor& f : sub.factors) {
    FactorReport r;
    r.type = f.type;
    r.pairings = f.pairings;
    std::vector<bool> zero;
    for (auto p : f.pairings) zero.push_back(p == 0);
    r.orbit_lambda = detail::factor_orbit(f.type, zero, opt.tables);
    if (!f.type.classical()) v.tables.push_back(opt.tables->find(f.type)->source);
    reports.push_back(r);
  }

  for (std::size_t fi = 0; fi < sub.factors.size(); ++fi) {
    const Factor& f = sub.factors[fi];
    FactorReport& rep = reports[fi];
    int r = (int)f.simple.size();
    IMat at(r, IVec(r));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) at[j][k] = f.cartan[k][j];
    RootSystem frs = root_system_from_cartan(dual_type(f.type), at);
    RVec c(r);
    for (int j = 0; j < r; ++j) c[j] = Rational(f.pairings[j]);
    DCircSet d = enumerate_d_circ_plus(frs, c);
    rep.d_circ_size = (int)d.members_plus.size();
    for (std::size_t gi = 0; gi < d.members_plus.size(); ++gi) {
      const RVec& q = d.root_coefficients[gi];
      RVec gp = frs.pairings(d.members_plus[gi]);
      Weight g = v.lambda;
      for (int j = 0; j < r; ++j)
        if (!q[j].is_zero()) g = g - q[j] * roots[f.simple[j]];
      Rational gn = norm_sq(rs, g);
      if (!(gn < lam_norm)) v.norm_guard = false;
      ++v.gammas_checked;
      std::vector<bool> zero;
      for (auto& x : gp) zero.push_back(x.is_zero());
      OrbitLabel og = detail::factor_orbit(f.type, zero, opt.tables);
      if (closure_leq(rep.orbit_lambda, og, opt.tables)) {
        rep.is_vwu = false;
        v.is_vwu = false;
        Witness w;
        w.factor = (int)fi;
        w.gamma = g;
        w.factor_pairings = gp;
        w.root_coefficients = q;
        w.orbit_lambda = rep.orbit_lambda;
        w.orbit_gamma = og;
        w.equal = rep.orbit_lambda.str() == og.str();
        w.norm_sq = gn;
        v.witnesses.push_back(w);
        if (opt.first_failure) break;
      }
    }
    if (opt.first_failure && !v.is_vwu) {
      v.notes.push_back("stopped at the first failing gamma");
      break;
    }
  }
  v.factors = std::move(reports);
  if (!v.norm_guard) v.notes.push_back("norm guard violated: some gamma has |gamma| >= |lambda|");
  return v;
}

namespace detail {

inline bool blocks_triangular(const std::vector<SortedSequence>& bs) {
  for (auto& b : bs)
    if (!is_triangular(b)) return false;
  return true;
}

}  // namespace detail

// Sufficient test: the dominant Bourbaki form of lambda splits into triangular
// blocks. In type A the coordinates are only defined up to a common shift, and
// one shift from each region between breakpoints is tried.
inline bool triangular_test(const RootSystem& rs, const Weight& lambda, std::vector<std::string>* blocks = nullptr) {
  CartanType t = rs.type();
  if (!t.classical() || !rs.bourbaki()) throw std::invalid_argument("triangular test needs a classical type");
  rs.check_dim(lambda);
  Weight x = rs.dominant_representative(lambda).first;
  auto record = [&](const std::vector<SortedSequence>& bs) {
    if (!blocks) return;
    blocks->clear();
    for (auto& b : bs) blocks->push_back(b.str());
  };
  if (t.family != 'A') {
    auto bs = decompose_concatenation(x, t.family);
    record(bs);
    return detail::blocks_triangular(bs);
  }
  // a block's pivot (its most repeated value) must land in (-1/2, 1/2), so only
  // the position of the shift relative to -x and -x +- 1/2 matters
  std::set<Rational> cuts;
  for (auto& c : x)
    for (Rational h : {Rational(-1, 2), Rational(0), Rational(1, 2)}) cuts.insert(h - c);
  std::vector<Rational> cv(cuts.begin(), cuts.end());
  std::vector<Rational> shifts = cv;
  for (std::size_t i = 0; i + 1 < cv.size(); ++i) shifts.push_back((cv[i] + cv[i + 1]) / Rational(2));
  for (auto& s : shifts) {
    RVec y = x;
    for (auto& c : y) c += s;
    auto bs = decompose_concatenation(y, 'A');
    if (detail::blocks_triangular(bs)) {
      record(bs);
      return true;
    }
  }
  record(decompose_concatenation(x, 'A'));  // unshifted, for the report
  return false;
}

inline Verdict check_vwu_triangular(const RootSystem& rs, const Weight& lambda, const CheckOptions& opt = {}) {
  Verdict v;
  v.lambda = rs.dominant_representative(lambda).first;
  bool tri = triangular_test(rs, lambda, &v.blocks);
  v.triangular = tri;
  if (tri) {
    v.method = "triangular-fast";
    v.is_vwu = true;
    v.notes.push_back("all blocks triangular; P** read as pivot >= every doubled part");
    return v;
  }
  Verdict d = check_vwu_direct(rs, lambda, opt);
  d.triangular = false;
  d.blocks = v.blocks;
  d.notes.push_back("not triangular (inconclusive); fell back to the direct check");
  return d;
}

inline Verdict check_vwu(const RootSystem& rs, const Weight& lambda, const CheckOptions& opt = {}) {
  bool classical = rs.type().classical() && rs.bourbaki();
  switch (opt.mode) {
    case Mode::Direct:
      return check_vwu_direct(rs, lambda, opt);
    case Mode::Triangular:
      if (!classical) throw std::invalid_argument("triangular mode needs a classical type");
      return check_vwu_triangular(rs, lambda, opt);
    case Mode::Auto:
      return classical ? check_vwu_triangular(rs, lambda, opt) : check_vwu_direct(rs, lambda, opt);
    case Mode::Both: {
      if (!classical) throw std::invalid_argument("both mode needs a classical type");
      std::vector<std::string> blocks;
      bool tri = triangular_test(rs, lambda, &blocks);
      CheckOptions o = opt;
      o.first_failure = false;
      Verdict d = check_vwu_direct(rs, lambda, o);
      if (tri && !d.is_vwu)
        throw std::logic_error("triangular test passed but the direct check failed for " + to_string(d.lambda));
      d.method = "both";
      d.triangular = tri;
      d.blocks = blocks;
      return d;
    }
  }
  return {};
}

}  // namespace vwu
