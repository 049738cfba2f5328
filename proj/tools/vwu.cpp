// vwu: command-line front end for the very weak unipotence checker.
//
// exit codes: 0 true/success, 1 false/failed check, 2 unsupported factor,
// 3 bad input

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "report.hpp"

namespace {

using namespace vwu;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

enum Exit { kTrue = 0, kFalse = 1, kUnsupported = 2, kInputError = 3 };

struct Common {
  std::string type;
  std::string lambda;
  std::string coords = "bourbaki";
  std::string mode = "auto";
  std::string tables;
  std::uint64_t seed = 20240601;
  bool json = false;
  bool timing = false;
  bool first_failure = false;
};

// --tables wins over VWU_TABLES
std::optional<TableSet> load_tables(const std::string& flag, std::vector<std::string>& used_dirs) {
  std::string dir = flag;
  if (dir.empty())
    if (const char* e = std::getenv("VWU_TABLES")) dir = e;
  if (dir.empty()) return std::nullopt;
  TableSet t;
  t.load_dir(dir);
  used_dirs.push_back(dir);
  return t;
}

json inputs_json(const Common& c) {
  return {{"type", c.type}, {"lambda", c.lambda}, {"coords", c.coords}, {"mode", c.mode}, {"seed", c.seed}};
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int run_check(const Common& c) {
  auto t0 = Clock::now();
  RootSystem rs = build_root_system(CartanType::parse(c.type));
  Weight lam = to_weight(rs, parse_rvec(c.lambda), parse_coords(c.coords));
  std::vector<std::string> dirs;
  auto tables = load_tables(c.tables, dirs);
  CheckOptions opt;
  opt.mode = parse_mode(c.mode);
  opt.first_failure = c.first_failure;
  opt.tables = tables ? &*tables : nullptr;
  json j;
  j["command"] = "check";
  j["inputs"] = inputs_json(c);
  j["version"] = kVersion;
  Verdict v;
  try {
    v = check_vwu(rs, lam, opt);
  } catch (const UnsupportedFactor& e) {
    j["verdict"] = nullptr;
    j["error"] = e.what();
    emit(j, c.json, std::string("unsupported: ") + e.what() + "\n");
    return kUnsupported;
  }
  j.update(report::verdict(v));
  if (c.timing) j["timing_ms"] = ms_since(t0);

  std::string text = "type " + c.type + "\n";
  text += "lambda " + to_string(v.lambda) + "\n";
  text += "method " + v.method + "\n";
  if (v.triangular) text += std::string("triangular ") + (*v.triangular ? "yes" : "no") + "\n";
  for (auto& b : v.blocks) text += "block " + b + "\n";
  for (std::size_t i = 0; i < v.factors.size(); ++i) {
    auto& f = v.factors[i];
    text += "factor " + std::to_string(i) + " " + f.type.name() + " orbit " + f.orbit_lambda.str() + " dcirc " +
            std::to_string(f.d_circ_size) + (f.is_vwu ? " ok" : " fails") + "\n";
  }
  for (auto& w : v.witnesses)
    text += "witness factor " + std::to_string(w.factor) + " gamma " + to_string(w.gamma) + " orbit_lambda " +
            w.orbit_lambda.str() + " orbit_gamma " + w.orbit_gamma.str() + (w.equal ? " equal" : "") + "\n";
  for (auto& n : v.notes) text += "note " + n + "\n";
  for (auto& t : v.tables) text += "table " + t + "\n";
  if (c.timing) text += "time_ms " + std::to_string(ms_since(t0)) + "\n";
  text += std::string("verdict ") + (v.is_vwu ? "true" : "false") + "\n";
  emit(j, c.json, text);
  return v.is_vwu ? kTrue : kFalse;
}

int run_dcirc(const Common& c) {
  RootSystem rs = build_root_system(CartanType::parse(c.type));
  Weight lam = to_weight(rs, parse_rvec(c.lambda), parse_coords(c.coords));
  lam = rs.dominant_representative(lam).first;
  DCircSet d = enumerate_d_circ_plus(rs, lam);
  json j = report::dcirc(rs, d);
  j["command"] = "dcirc";
  j["inputs"] = inputs_json(c);
  j["version"] = kVersion;
  std::string text = "lambda " + to_string(lam) + " norm_sq " + norm_sq(rs, lam).str() + "\n";
  for (std::size_t i = 0; i < d.members_plus.size(); ++i)
    text += "gamma " + to_string(d.members_plus[i]) + " coefficients " + to_string(d.root_coefficients[i]) +
            " norm_sq " + norm_sq(rs, d.members_plus[i]).str() + "\n";
  text += "count " + std::to_string(d.members_plus.size()) + "\n";
  emit(j, c.json, text);
  return kTrue;
}

struct OrbitArgs {
  std::string type;
  std::string blocks;
  std::optional<int> remainder;
  std::string subset;
  std::string partition;
  std::string a, b;
  std::string tables;
  int trials = 50;
  std::uint64_t seed = 20240601;
  bool json = false;
};

IVec parse_ints(const std::string& s) {
  IVec out;
  for (auto& x : parse_rvec(s)) {
    if (!x.is_integer()) throw std::invalid_argument("expected integers, got " + x.str());
    out.push_back((int)x.num());
  }
  return out;
}

LeviDatum levi_from_args(const OrbitArgs& o) {
  CartanType t = CartanType::parse(o.type);
  if (!o.subset.empty() || !t.classical()) {
    std::vector<bool> in(t.rank, false);
    if (!o.subset.empty() && o.subset != "-")
      for (int i : parse_ints(o.subset)) {
        if (i < 1 || i > t.rank) throw std::invalid_argument("subset index out of range");
        in[i - 1] = true;
      }
    return levi_from_subset(t, in);
  }
  LeviDatum L;
  L.ambient = t;
  if (!o.blocks.empty()) L.gl_blocks = parse_ints(o.blocks);
  int s = 0;
  for (int a : L.gl_blocks) s += a;
  if (t.family != 'A') L.remainder = o.remainder ? *o.remainder : t.rank - s;
  L.validate();
  return L;
}

std::string levi_str(const LeviDatum& L) {
  std::string s = "gl" + to_string([&] {
    RVec v;
    for (int a : L.gl_blocks) v.push_back(Rational(a));
    return v;
  }());
  if (L.ambient.family != 'A' && L.ambient.classical()) s += " x " + std::string(1, L.ambient.family) + std::to_string(L.remainder);
  return s;
}

// "A" alone takes its rank from the partition
CartanType orbit_type(const std::string& s, const Partition& p) {
  if (s.size() != 1) return CartanType::parse(s);
  int n = p.size();
  switch (s[0]) {
    case 'A': return CartanType::parse("A" + std::to_string(n - 1));
    case 'B': return CartanType::parse("B" + std::to_string((n - 1) / 2));
    case 'C':
    case 'D': return CartanType::parse(s + std::to_string(n / 2));
  }
  throw std::invalid_argument("unknown type " + s);
}

OrbitLabel orbit_arg(CartanType t, const std::string& s, const TableSet* tables) {
  if (t.classical()) return classical_orbit(t, Partition::parse(s));
  if (!tables || !tables->find(t)) throw UnsupportedFactor(t, "no closure table loaded");
  if (!tables->find(t)->has(s)) throw std::invalid_argument("unknown orbit " + s + " for " + t.name());
  return {t, Partition(), s};
}

int run_orbit(const std::string& sub, const OrbitArgs& o) {
  std::vector<std::string> dirs;
  auto tables = load_tables(o.tables, dirs);
  const TableSet* tp = tables ? &*tables : nullptr;
  json j;
  j["command"] = "orbit " + sub;
  j["version"] = kVersion;
  j["type"] = o.type;
  std::string text;
  int code = kTrue;
  try {
    if (sub == "induce") {
      LeviDatum L = levi_from_args(o);
      OrbitLabel r = induce_zero(L, tp);
      j["levi"] = levi_str(L);
      j["orbit"] = r.str();
      text = r.str() + "\n";
    } else if (sub == "richardson") {
      LeviDatum L = levi_from_args(o);
      OrbitLabel r = richardson_oracle(L, o.trials, o.seed);
      OrbitLabel ind = induce_zero(L, tp);
      j["levi"] = levi_str(L);
      j["orbit"] = r.str();
      j["induce_zero"] = ind.str();
      j["agree"] = r.str() == ind.str();
      j["trials"] = o.trials;
      j["seed"] = o.seed;
      text = "richardson " + r.str() + "\ninduce_zero " + ind.str() + "\nagree " + (r.str() == ind.str() ? "yes" : "no") + "\n";
      if (r.str() != ind.str()) code = kFalse;
    } else if (sub == "dual") {
      Partition p = Partition::parse(o.partition);
      OrbitLabel a = classical_orbit(orbit_type(o.type, p), p);
      OrbitLabel d = bv_dual(a);
      j["orbit"] = a.str();
      j["dual_type"] = d.type.name();
      j["dual"] = d.str();
      text = d.str() + "\n";
    } else if (sub == "leq") {
      CartanType t = CartanType::parse(o.type);
      OrbitLabel a = orbit_arg(t, o.a, tp), b = orbit_arg(t, o.b, tp);
      bool r = closure_leq(a, b, tp);
      j["leq"] = r;
      text = std::string(r ? "true" : "false") + "\n";
      code = r ? kTrue : kFalse;
    }
  } catch (const UnsupportedFactor& e) {
    j["error"] = e.what();
    emit(j, o.json, std::string("unsupported: ") + e.what() + "\n");
    return kUnsupported;
  }
  if (tp) j["tables"] = tp->sources();
  emit(j, o.json, text);
  return code;
}

struct HeckeArgs {
  std::string type = "A1";
  int depth = 4;
  int mu_bound = 3;
  int samples = 500;
  std::uint64_t seed = 20240601;
  int alpha = 1;
  int kmin = -5, kmax = 5;
  std::string a, b;
  bool json = false;
};

int run_hecke(const std::string& sub, const HeckeArgs& h) {
  HeckeAlgebra alg(CartanType::parse(h.type));
  json j;
  j["command"] = "hecke " + sub;
  j["version"] = kVersion;
  j["type"] = h.type;
  std::string text;
  int code = kTrue;
  if (sub == "verify") {
    PresentationOptions opt;
    opt.depth = h.depth;
    opt.mu_bound = h.mu_bound;
    opt.assoc_samples = h.samples;
    opt.special_samples = h.samples;
    opt.seed = h.seed;
    PresentationReport r = verify_presentation(alg, opt);
    j.update(report::presentation(r));
    j["depth"] = h.depth;
    j["seed"] = h.seed;
    for (auto& c : r.checks) {
      text += c.name + " " + std::to_string(c.cases) + " cases " + (c.passed() ? "pass" : "FAIL") + "\n";
      if (!c.passed()) text += "  first failure: " + c.first_failure + "\n";
    }
    text += std::string("result ") + (r.passed() ? "pass" : "FAIL") + "\n";
    if (!r.passed()) code = kFalse;
  } else if (sub == "inverse") {
    if (h.alpha < 1 || h.alpha > alg.rank()) throw std::invalid_argument("--alpha out of range");
    auto rows = verify_inverse_pairs(alg, h.alpha - 1, h.kmin, h.kmax);
    j["alpha"] = h.alpha;
    j["rows"] = report::inverse_rows(rows);
    for (auto& r : rows) {
      text += "k " + std::to_string(r.k) + " product " + r.product;
      if (r.monomial) text += " coefficient " + std::to_string(r.coefficient) + " u_exponent " + std::to_string(r.u_exponent);
      text += "\n";
    }
  } else if (sub == "mul") {
    HeckeElement p = alg.mul(alg.parse(h.a), alg.parse(h.b));
    j["product"] = alg.format(p);
    text = alg.format(p) + "\n";
  }
  emit(j, h.json, text);
  return code;
}

void add_common(CLI::App* cmd, Common& c, bool with_mode) {
  cmd->add_option("--type", c.type, "Cartan type, e.g. B3")->required();
  cmd->add_option("--lambda", c.lambda, "comma separated rationals, e.g. 1,1/2,1/4")->required();
  cmd->add_option("--coords", c.coords, "bourbaki, fundamental or pairing")->capture_default_str();
  if (with_mode) {
    cmd->add_option("--mode", c.mode, "auto, direct, triangular or both")->capture_default_str();
    cmd->add_option("--tables", c.tables, "closure table directory (default: $VWU_TABLES)");
    cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
    cmd->add_flag("--timing", c.timing, "report wall time");
    cmd->add_flag("--first-failure", c.first_failure, "stop at the first failing gamma");
  }
  cmd->add_flag("--json", c.json, "JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"very weak unipotence checker"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common check_args, dcirc_args;
  auto* check = app.add_subcommand("check", "decide very weak unipotence of lambda");
  add_common(check, check_args, true);
  auto* dcirc = app.add_subcommand("dcirc", "list D°(lambda)_+");
  add_common(dcirc, dcirc_args, false);

  OrbitArgs orb;
  auto* orbit = app.add_subcommand("orbit", "nilpotent orbit queries");
  orbit->require_subcommand(1);
  auto levi_opts = [&](CLI::App* c) {
    c->add_option("--blocks", orb.blocks, "gl block sizes, e.g. 2,1");
    c->add_option("--remainder", orb.remainder, "rank of the classical factor (default: rank minus blocks)");
    c->add_option("--subset", orb.subset, "1-based simple nodes of the Levi (alternative to --blocks)");
  };
  auto* induce = orbit->add_subcommand("induce", "orbit induced from the zero orbit of a Levi");
  levi_opts(induce);
  auto* rich = orbit->add_subcommand("richardson", "Richardson orbit by random nilradical elements");
  levi_opts(rich);
  rich->add_option("--trials", orb.trials)->capture_default_str();
  rich->add_option("--seed", orb.seed)->capture_default_str();
  auto* dual = orbit->add_subcommand("dual", "Barbasch-Vogan dual");
  dual->add_option("--partition", orb.partition)->required();
  auto* leq = orbit->add_subcommand("leq", "closure order test a <= b");
  leq->add_option("--a", orb.a)->required();
  leq->add_option("--b", orb.b)->required();
  for (auto* c : {induce, rich, dual, leq}) {
    c->add_option("--type", orb.type, "Cartan type (dual also takes a bare family letter)")->required();
    c->add_option("--tables", orb.tables, "closure table directory (default: $VWU_TABLES)");
    c->add_flag("--json", orb.json);
  }

  HeckeArgs hk;
  auto* hecke = app.add_subcommand("hecke", "affine Hecke algebra");
  hecke->require_subcommand(1);
  auto* hverify = hecke->add_subcommand("verify", "check the Bernstein presentation");
  hverify->add_option("--depth", hk.depth, "braid words up to this length")->capture_default_str();
  hverify->add_option("--mu-bound", hk.mu_bound)->capture_default_str();
  hverify->add_option("--samples", hk.samples, "random samples for associativity and u -> 1")->capture_default_str();
  hverify->add_option("--seed", hk.seed)->capture_default_str();
  auto* hinv = hecke->add_subcommand("inverse", "shriek(-k) * star(k) products");
  hinv->add_option("--alpha", hk.alpha, "1-based simple root")->capture_default_str();
  hinv->add_option("--kmin", hk.kmin)->capture_default_str();
  hinv->add_option("--kmax", hk.kmax)->capture_default_str();
  auto* hmul = hecke->add_subcommand("mul", "product of two elements");
  hmul->add_option("--a", hk.a)->required();
  hmul->add_option("--b", hk.b)->required();
  for (auto* c : {hverify, hinv, hmul}) {
    c->add_option("--type", hk.type)->capture_default_str();
    c->add_flag("--json", hk.json);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (check->parsed()) return run_check(check_args);
    if (dcirc->parsed()) return run_dcirc(dcirc_args);
    if (orbit->parsed())
      for (auto* c : {induce, rich, dual, leq})
        if (c->parsed()) return run_orbit(c->get_name(), orb);
    if (hecke->parsed())
      for (auto* c : {hverify, hinv, hmul})
        if (c->parsed()) return run_hecke(c->get_name(), hk);
  } catch (const UnsupportedFactor& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
