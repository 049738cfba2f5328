#pragma once

// JSON views of library results. Rationals are written as strings ("3/2").

#include <json.hpp>

#include "vwu/hecke.hpp"
#include "vwu/orbits.hpp"
#include "vwu/unipcheck.hpp"

namespace vwu::report {

using nlohmann::json;

inline json rvec(const RVec& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(x.str());
  return a;
}

inline json orbit(const OrbitLabel& o) { return o.str(); }

inline json witness(const Witness& w) {
  return {{"factor", w.factor},
          {"gamma", rvec(w.gamma)},
          {"factor_pairings", rvec(w.factor_pairings)},
          {"root_coefficients", rvec(w.root_coefficients)},
          {"orbit_lambda", orbit(w.orbit_lambda)},
          {"orbit_gamma", orbit(w.orbit_gamma)},
          {"equal", w.equal},
          {"norm_sq", w.norm_sq.str()}};
}

inline json factor(const FactorReport& f) {
  return {{"type", f.type.name()},
          {"pairings", f.pairings},
          {"orbit_lambda", orbit(f.orbit_lambda)},
          {"d_circ_size", f.d_circ_size},
          {"vwu", f.is_vwu}};
}

inline json verdict(const Verdict& v) {
  json j;
  j["verdict"] = v.is_vwu;
  j["method"] = v.method;
  j["lambda_dominant"] = rvec(v.lambda);
  j["factors"] = json::array();
  for (auto& f : v.factors) j["factors"].push_back(factor(f));
  j["witnesses"] = json::array();
  for (auto& w : v.witnesses) j["witnesses"].push_back(witness(w));
  j["triangular"] = v.triangular ? json(*v.triangular) : json(nullptr);
  j["blocks"] = v.blocks;
  j["gammas_checked"] = v.gammas_checked;
  j["norm_guard"] = v.norm_guard;
  j["notes"] = v.notes;
  j["tables"] = v.tables;
  return j;
}

inline json dcirc(const RootSystem& rs, const DCircSet& d) {
  json j;
  j["base"] = rvec(d.base);
  j["count"] = d.members_plus.size();
  j["members"] = json::array();
  for (std::size_t i = 0; i < d.members_plus.size(); ++i)
    j["members"].push_back({{"gamma", rvec(d.members_plus[i])},
                            {"root_coefficients", rvec(d.root_coefficients[i])},
                            {"norm_sq", norm_sq(rs, d.members_plus[i]).str()}});
  return j;
}

inline json presentation(const PresentationReport& r) {
  json j;
  j["datum"] = r.datum;
  j["passed"] = r.passed();
  j["checks"] = json::array();
  for (auto& c : r.checks)
    j["checks"].push_back(
        {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"first_failure", c.first_failure}});
  return j;
}

inline json inverse_rows(const std::vector<InversePairRow>& rows) {
  json a = json::array();
  for (auto& r : rows)
    a.push_back({{"k", r.k},
                 {"product", r.product},
                 {"monomial", r.monomial},
                 {"coefficient", r.coefficient},
                 {"u_exponent", r.u_exponent}});
  return a;
}

}  // namespace vwu::report
