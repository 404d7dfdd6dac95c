#include "vpq/suite.hpp"

#include "vpq/algebra.hpp"
#include "vpq/caseaudit.hpp"
#include "vpq/classify.hpp"
#include "vpq/modules.hpp"
#include "vpq/sampling.hpp"
#include "vpq/uqsl2.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <random>
#include <thread>

namespace vpq {

namespace {

enum class Kind { Int, Rational, Symbol, Family, Filter, Bool };

struct Param {
  std::string key;
  Kind kind;
  Json fallback;  // null: required
};

class Args {
public:
  explicit Args(const Json& j) : j_(j) {}
  long integer(const std::string& k) const { return j_.at(k).get<long>(); }
  bool flag(const std::string& k) const { return j_.at(k).get<bool>(); }
  mpq_class rational(const std::string& k) const { return parse_rational(j_.at(k).get<std::string>()); }
  Scalar scalar(const std::string& k) const { return Scalar::parse(j_.at(k).get<std::string>()); }
  CoefficientRule family(const std::string& k) const { return CoefficientRule::parse(j_.at(k).get<std::string>()); }
  PairFilter filter(const std::string& k) const {
    return j_.at(k).get<std::string>() == "generators" ? PairFilter::Generators : PairFilter::All;
  }

private:
  const Json& j_;
};

using Runner = std::function<ResidualReport(const ScalarContext&, const Args&, std::uint64_t)>;

struct CheckDef {
  std::string name;
  std::vector<Param> params;
  bool seeded;
  Runner run;
};

ResidualReport reducibility_grid(const ScalarContext& ctx, long mmax, long window) {
  ResidualReport rep("reducibility-grid", Json{{"mmax", mmax}, {"window", window}}, ctx.to_json());
  Json rows = Json::array();
  for (long m = -mmax; m <= mmax; ++m) {
    const Scalar a = -ctx.w(m);
    const std::vector<std::pair<std::string, Scalar>> branches = {{"b=-p^-m q^m", -ctx.ratio_pow(m)}, {"b=0", 0}};
    Json row{{"m", m}, {"a", a.to_string()}};
    for (std::size_t i = 0; i < branches.size(); ++i) {
      const auto& [label, b] = branches[i];
      const SubmoduleResult sub = find_submodules(ctx, CoefficientRule::mab(a, b), window);
      rep.require("closed-form-reducible", {m, static_cast<long>(i)}, !sub.subsets.empty(), label + " irreducible");
      rep.require("closed-form-witness", {m, static_cast<long>(i)},
                  is_reducible_closed_form(ctx, a, b, mmax).has_value(), label + " has no witness");
      row[label] = sub.subsets.size();
    }
    const Scalar variant = -ctx.p_pow(-m) * ctx.q_pow(-m);
    const SubmoduleResult sub = find_submodules(ctx, CoefficientRule::mab(a, variant), window);
    row["b=-p^-m q^-m"] = sub.subsets.size();
    if (m != 0) {
      rep.require("variant-irreducible", {m}, sub.subsets.empty(), "proof-line variant reducible");
      rep.add_finding("exponent-adjudication",
                      Json{{"m", m}, {"b", variant.to_string()}, {"reducible", !sub.subsets.empty()},
                           {"reading", "b = -p^-m q^m is the reducible branch; b = -p^-m q^-m is not"}});
    }
    rows.push_back(std::move(row));
  }
  rep.data()["grid"] = std::move(rows);
  return rep;
}

Json intertwiner_json(const Intertwiner& it) {
  Json h = Json::object();
  for (const auto& [k, v] : it.h) h[std::to_string(k)] = v.to_string();
  return Json{{"h", h}, {"notes", it.notes}};
}

ResidualReport iso_check(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long m, long window) {
  ResidualReport rep("iso", Json{{"a", a.to_string()}, {"b", b.to_string()}, {"m", m}, {"window", window}},
                     ctx.to_json());
  const auto [a2, b2] = shift_params(ctx, a, b, m);
  rep.data()["shifted"] = Json{{"a", a2.to_string()}, {"b", b2.to_string()}};
  const auto it = find_intertwiner(ctx, CoefficientRule::mab(a, b), CoefficientRule::mab(a2, b2), m, window);
  rep.require("intertwiner", {m}, it.has_value(), "no intertwiner");
  if (it) rep.data()["intertwiner"] = intertwiner_json(*it);
  return rep;
}

ResidualReport iso_sweep(const ScalarContext& ctx, long samples, long mmax, long window, std::uint64_t seed) {
  ResidualReport rep("iso-sweep", Json{{"samples", samples}, {"mmax", mmax}, {"window", window}, {"seed", seed}},
                     ctx.to_json());
  std::mt19937_64 rng(seed);
  Json shifted = Json::array(), unrelated = Json::array();
  for (long i = 0; i < samples; ++i) {
    const Scalar a(seeded_rational(rng)), b(seeded_rational(rng));
    const long m = seeded_int(rng, -mmax, mmax);
    const auto [a2, b2] = shift_params(ctx, a, b, m);
    const auto it = find_intertwiner(ctx, CoefficientRule::mab(a, b), CoefficientRule::mab(a2, b2), m, window);
    rep.require("shifted-isomorphic", {i, m}, it.has_value(), "no intertwiner for a shifted pair");
    shifted.push_back(Json{{"a", a.to_string()}, {"b", b.to_string()}, {"m", m}, {"a'", a2.to_string()},
                           {"b'", b2.to_string()}});
  }
  for (long i = 0; i < samples; ++i) {
    const Scalar a(seeded_rational(rng)), b(seeded_rational(rng));
    const Scalar a2(seeded_rational(rng)), b2(seeded_rational(rng));
    const long m = seeded_int(rng, -mmax, mmax);
    const auto it = find_intertwiner(ctx, CoefficientRule::mab(a, b), CoefficientRule::mab(a2, b2), m, window);
    rep.require("unrelated-not-isomorphic", {i, m}, !it.has_value(), "intertwiner for an unrelated pair");
    unrelated.push_back(Json{{"a", a.to_string()}, {"b", b.to_string()}, {"m", m}, {"a'", a2.to_string()},
                             {"b'", b2.to_string()}});
  }
  rep.data()["shifted"] = std::move(shifted);
  rep.data()["unrelated"] = std::move(unrelated);
  return rep;
}

ResidualReport mab_sweep(const ScalarContext& ctx, long samples, long nmax, long kmax, bool symbolic,
                         std::uint64_t seed) {
  ResidualReport rep("mab-sweep",
                     Json{{"samples", samples}, {"nmax", nmax}, {"kmax", kmax}, {"symbolic", symbolic}, {"seed", seed}},
                     ctx.to_json());
  std::mt19937_64 rng(seed);
  Json pts = Json::array();
  for (long i = 0; i < samples; ++i) {
    const Scalar a(seeded_rational(rng)), b(seeded_rational(rng));
    const CoefficientRule rule = CoefficientRule::mab(a, b);
    rep.absorb(verify_module(ctx, rule, nmax, kmax), rule.spec_string());
    pts.push_back(rule.spec_string());
  }
  if (symbolic) {
    rep.absorb(verify_module(ctx, CoefficientRule::mab(Scalar::variable(Var::a), Scalar::variable(Var::b)), nmax, kmax),
               "mab:a=a,b=b");
    pts.push_back("mab:a=a,b=b");
  }
  rep.data()["rules"] = std::move(pts);
  return rep;
}

ResidualReport classify_check(const ScalarContext& ctx, const Scalar& a, const Scalar& b) {
  ResidualReport rep("classify", Json{{"a", a.to_string()}, {"b", b.to_string()}}, ctx.to_json());
  const DegeneracyProfile prof = degeneracy_profile(ctx, a, b);
  const FGPolynomials fg = fgi_polynomials(ctx, a, b, Reading::Typeset);
  Json f = Json::array(), g = Json::array();
  for (int i = 0; i < 4; ++i) {
    f.push_back(fg.f[i].to_json());
    g.push_back(fg.g[i].to_json());
  }
  rep.data()["case"] = prof.case_tag;
  rep.data()["profile"] = prof.to_json();
  rep.data()["f"] = std::move(f);
  rep.data()["g"] = std::move(g);
  for (const auto& fd : prof.findings) rep.add_finding(fd.id, fd.detail);
  return rep;
}

ResidualReport l2_check(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long jmax) {
  ResidualReport rep = l2_gauge_audit(ctx, a, b, jmax);
  Json values = Json::array();
  for (long j = -jmax; j <= jmax; ++j) {
    try {
      const auto [c2, cm2] = l2_coefficients(ctx, a, b, j);
      values.push_back(Json{{"j", j}, {"c2", c2.to_string()}, {"cm2", cm2.to_string()}});
    } catch (const DomainError& e) {
      values.push_back(Json{{"j", j}, {"error", e.what()}});
    }
  }
  rep.data()["coefficients"] = std::move(values);
  return rep;
}

ResidualReport case_audit_check(const ScalarContext& ctx, long window, const Scalar& param) {
  ResidualReport rep("case-audit", Json{{"window", window}, {"param", param.to_string()}}, ctx.to_json());
  Json sections = Json::object();
  for (const auto& s : case_audit(ctx, window, param)) {
    rep.absorb(s, s.check());
    Json j = s.to_json();
    sections[s.check()] = Json{{"parameters", j["parameters"]}, {"counts", j["counts"]}, {"data", s.data()}};
  }
  rep.data()["sections"] = std::move(sections);
  return rep;
}

ResidualReport uqsl2_check(long two_l, long omega, const Scalar& q) {
  const Uqsl2Rep r(static_cast<int>(omega), two_l, q);
  ResidualReport rep("uqsl2", Json{{"two_l", two_l}, {"omega", omega}, {"q", q.to_string()}});
  const ResidualReport rel = rep_relation_audit(r);
  const ResidualReport fit = quadratic_in_x_fit(r);
  rep.absorb(rel, "relations");
  rep.absorb(fit, "quadratic-in-x");
  Json ws = Json::array();
  for (long m : r.weights()) {
    ws.push_back(Json{{"two_m", m},
                      {"k", k_eigenvalue(r, m).to_string()},
                      {"fe", fe_coefficient(r, m).to_string()},
                      {"ef", ef_coefficient(r, m).to_string()}});
  }
  rep.data()["weights"] = std::move(ws);
  if (fit.data().contains("fit")) rep.data()["fit"] = fit.data()["fit"];
  return rep;
}

ResidualReport submodules_check(const ScalarContext& ctx, const CoefficientRule& rule, long window) {
  ResidualReport rep("submodules", Json{{"family", rule.spec_string()}, {"window", window}}, ctx.to_json());
  const SubmoduleResult r = find_submodules(ctx, rule, window);
  rep.data()["subsets"] = r.subsets;
  rep.data()["truncated"] = r.truncated;
  rep.data()["reducible"] = !r.subsets.empty();
  return rep;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"qint-identities", {{"window", Kind::Int, 20}}, false,
       [](auto& ctx, auto& a, auto) { return qint_identities(ctx, a.integer("window")); }},
      {"verify-algebra", {{"window", Kind::Int, 8}}, false,
       [](auto& ctx, auto& a, auto) { return verify_algebra(ctx, a.integer("window")); }},
      {"generation", {{"window", Kind::Int, 8}}, false,
       [](auto& ctx, auto& a, auto) { return generation_check(ctx, a.integer("window")); }},
      {"verify-module",
       {{"family", Kind::Family, nullptr}, {"nmax", Kind::Int, 6}, {"kmax", Kind::Int, 10}, {"filter", Kind::Filter, "all"}},
       false,
       [](auto& ctx, auto& a, auto) {
         return verify_module(ctx, a.family("family"), a.integer("nmax"), a.integer("kmax"), a.filter("filter"));
       }},
      {"mab-sweep",
       {{"samples", Kind::Int, 5}, {"nmax", Kind::Int, 6}, {"kmax", Kind::Int, 10}, {"symbolic", Kind::Bool, true}},
       true,
       [](auto& ctx, auto& a, auto seed) {
         return mab_sweep(ctx, a.integer("samples"), a.integer("nmax"), a.integer("kmax"), a.flag("symbolic"), seed);
       }},
      {"submodules", {{"family", Kind::Family, nullptr}, {"window", Kind::Int, 8}}, false,
       [](auto& ctx, auto& a, auto) { return submodules_check(ctx, a.family("family"), a.integer("window")); }},
      {"reducibility-grid", {{"mmax", Kind::Int, 4}, {"window", Kind::Int, 8}}, false,
       [](auto& ctx, auto& a, auto) { return reducibility_grid(ctx, a.integer("mmax"), a.integer("window")); }},
      {"iso", {{"a", Kind::Rational, nullptr}, {"b", Kind::Rational, nullptr}, {"m", Kind::Int, nullptr}, {"window", Kind::Int, 8}},
       false,
       [](auto& ctx, auto& a, auto) {
         return iso_check(ctx, a.rational("a"), a.rational("b"), a.integer("m"), a.integer("window"));
       }},
      {"iso-sweep", {{"samples", Kind::Int, 10}, {"mmax", Kind::Int, 4}, {"window", Kind::Int, 8}}, true,
       [](auto& ctx, auto& a, auto seed) {
         return iso_sweep(ctx, a.integer("samples"), a.integer("mmax"), a.integer("window"), seed);
       }},
      {"classify", {{"a", Kind::Symbol, nullptr}, {"b", Kind::Symbol, nullptr}}, false,
       [](auto& ctx, auto& a, auto) { return classify_check(ctx, a.scalar("a"), a.scalar("b")); }},
      {"degeneracy-table", {}, false, [](auto& ctx, auto&, auto) { return degeneracy_table_check(ctx); }},
      {"audit-identities", {{"a", Kind::Symbol, "a"}, {"b", Kind::Symbol, "b"}}, true,
       [](auto& ctx, auto& a, auto seed) { return identity_audit(ctx, a.scalar("a"), a.scalar("b"), seed); }},
      {"second-solution", {{"a", Kind::Symbol, nullptr}, {"b", Kind::Symbol, nullptr}, {"samples", Kind::Int, 10}}, true,
       [](auto& ctx, auto& a, auto seed) {
         return second_solution_audit(ctx, a.scalar("a"), a.scalar("b"), seed, static_cast<int>(a.integer("samples")));
       }},
      {"l2-coefficients", {{"a", Kind::Symbol, nullptr}, {"b", Kind::Symbol, nullptr}, {"jmax", Kind::Int, 4}}, false,
       [](auto& ctx, auto& a, auto) { return l2_check(ctx, a.scalar("a"), a.scalar("b"), a.integer("jmax")); }},
      {"fg-recurrence",
       {{"a", Kind::Symbol, nullptr}, {"b", Kind::Symbol, nullptr}, {"F0", Kind::Symbol, "1"}, {"G0", Kind::Symbol, "1"},
        {"jmax", Kind::Int, 6}},
       false,
       [](auto& ctx, auto& a, auto) {
         return fg_recurrence_audit(ctx, a.scalar("a"), a.scalar("b"), a.scalar("F0"), a.scalar("G0"), a.integer("jmax"));
       }},
      {"case-audit", {{"window", Kind::Int, 8}, {"param", Kind::Symbol, "s"}}, false,
       [](auto& ctx, auto& a, auto) { return case_audit_check(ctx, a.integer("window"), a.scalar("param")); }},
      {"quadratic-in-x", {{"family", Kind::Family, nullptr}, {"window", Kind::Int, 8}}, false,
       [](auto& ctx, auto& a, auto) { return quadratic_in_x_check(ctx, a.family("family"), a.integer("window")); }},
      {"uqsl2", {{"two_l", Kind::Int, nullptr}, {"omega", Kind::Int, 1}, {"q", Kind::Symbol, nullptr}}, false,
       [](auto&, auto& a, auto) { return uqsl2_check(a.integer("two_l"), a.integer("omega"), a.scalar("q")); }},
      {"families", {{"window", Kind::Int, 8}, {"param", Kind::Symbol, "s"}}, false,
       [](auto& ctx, auto& a, auto) { return family_consistency(ctx, a.integer("window"), a.scalar("param")); }},
  };
  return defs;
}

const CheckDef& find_def(const std::string& name) {
  for (const auto& d : registry()) {
    if (d.name == name) return d;
  }
  throw ConfigError("unknown check '" + name + "'");
}

void validate_value(const std::string& check, const Param& p, const Json& v) {
  const std::string where = check + "." + p.key;
  try {
    switch (p.kind) {
      case Kind::Int:
        if (!v.is_number_integer()) throw ConfigError(where + ": expected an integer");
        break;
      case Kind::Bool:
        if (!v.is_boolean()) throw ConfigError(where + ": expected a boolean");
        break;
      case Kind::Rational:
        if (!v.is_string()) throw ConfigError(where + ": expected a rational string");
        parse_rational(v.get<std::string>());
        break;
      case Kind::Symbol:
        if (!v.is_string()) throw ConfigError(where + ": expected a scalar string");
        Scalar::parse(v.get<std::string>());
        break;
      case Kind::Family:
        if (!v.is_string()) throw ConfigError(where + ": expected a family string");
        CoefficientRule::parse(v.get<std::string>());
        break;
      case Kind::Filter:
        if (!v.is_string() || (v != "all" && v != "generators")) {
          throw ConfigError(where + ": expected \"all\" or \"generators\"");
        }
        break;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

// Parameters in schema order with defaults filled in.
Json effective_params(const CheckDef& def, const Json& given) {
  Json out = Json::object();
  for (const auto& p : def.params) {
    if (given.contains(p.key)) {
      out[p.key] = given.at(p.key);
    } else if (!p.fallback.is_null()) {
      out[p.key] = p.fallback;
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& d : registry()) n.push_back(d.name);
    return n;
  }();
  return names;
}

void validate_check(const CheckSpec& spec) {
  const CheckDef& def = find_def(spec.name);
  if (!spec.params.is_object()) throw ConfigError(spec.name + ": parameters must be an object");
  for (const auto& [key, value] : spec.params.items()) {
    if (key == "seed" && def.seeded) {
      if (!value.is_number_unsigned()) throw ConfigError(spec.name + ".seed: expected a nonnegative integer");
      continue;
    }
    const auto it = std::find_if(def.params.begin(), def.params.end(), [&](const Param& p) { return p.key == key; });
    if (it == def.params.end()) throw ConfigError(spec.name + ": unknown key '" + key + "'");
    validate_value(spec.name, *it, value);
  }
  for (const auto& p : def.params) {
    if (p.fallback.is_null() && !spec.params.contains(p.key)) {
      throw ConfigError(spec.name + ": missing required key '" + p.key + "'");
    }
  }
}

SuiteConfig parse_suite_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be an object");
  SuiteConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "context") {
      if (!value.is_object()) throw ConfigError("context must be an object");
      for (const auto& [ck, cv] : value.items()) {
        if (ck == "p" || ck == "q") {
          if (!cv.is_string()) throw ConfigError("context." + ck + ": expected a rational string");
          (ck == "p" ? cfg.p : cfg.q) = cv.get<std::string>();
        } else if (ck == "backend") {
          if (cv == "numeric") {
            cfg.backend = Backend::numeric;
          } else if (cv == "symbolic") {
            cfg.backend = Backend::symbolic;
          } else {
            throw ConfigError("context.backend: expected \"numeric\" or \"symbolic\"");
          }
        } else if (ck == "guard") {
          if (!cv.is_number_integer() || cv.get<long>() < 1) throw ConfigError("context.guard: expected a positive integer");
          cfg.guard = cv.get<int>();
        } else {
          throw ConfigError("context: unknown key '" + ck + "'");
        }
      }
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ConfigError("seed: expected a nonnegative integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "jobs") {
      if (!value.is_number_unsigned()) throw ConfigError("jobs: expected a nonnegative integer");
      cfg.jobs = value.get<unsigned>();
    } else if (key == "checks") {
      if (!value.is_array()) throw ConfigError("checks must be an array");
      for (const auto& c : value) {
        if (!c.is_object() || !c.contains("check") || !c.at("check").is_string()) {
          throw ConfigError("each check needs a \"check\" name");
        }
        CheckSpec spec{c.at("check").get<std::string>(), Json::object()};
        for (const auto& [pk, pv] : c.items()) {
          if (pk != "check") spec.params[pk] = pv;
        }
        validate_check(spec);
        cfg.checks.push_back(std::move(spec));
      }
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  make_context(cfg);
  return cfg;
}

SuiteConfig load_suite_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return parse_suite_config(j);
}

ScalarContext make_context(const SuiteConfig& config) {
  if (config.backend == Backend::symbolic) return ScalarContext::symbolic();
  try {
    return ScalarContext::numeric(parse_rational(config.p), parse_rational(config.q), config.guard);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("context: ") + e.what());
  }
}

ResidualReport run_check(const ScalarContext& ctx, const CheckSpec& spec, std::uint64_t seed) {
  validate_check(spec);
  const CheckDef& def = find_def(spec.name);
  Json params = effective_params(def, spec.params);
  if (def.seeded) {
    if (spec.params.contains("seed")) seed = spec.params.at("seed").get<std::uint64_t>();
    params["seed"] = seed;
  }
  try {
    return def.run(ctx, Args(params), seed);
  } catch (const std::domain_error& e) {
    ResidualReport rep(spec.name, params, ctx.to_json());
    rep.require("domain-error", {}, false, e.what());
    return rep;
  }
}

SuiteResult run_suite(const SuiteConfig& config) {
  const ScalarContext ctx = make_context(config);
  const std::size_t n = config.checks.size();
  std::vector<Json> results(n);
  std::vector<long> checked(n), passed(n), failed(n), findings(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const ResidualReport rep = run_check(ctx, config.checks[i], config.seed + i);
      Json j = rep.to_json();
      j.erase("context");
      results[i] = std::move(j);
      checked[i] = rep.checked();
      passed[i] = rep.passed();
      failed[i] = rep.failed();
      findings[i] = static_cast<long>(rep.findings().size());
    }
  };
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult out;
  Json totals{{"checks", n}, {"checked", 0}, {"passed", 0}, {"failed", 0}, {"findings", 0}};
  long c = 0, p = 0, f = 0, fd = 0;
  for (std::size_t i = 0; i < n; ++i) {
    c += checked[i];
    p += passed[i];
    f += failed[i];
    fd += findings[i];
  }
  totals["checked"] = c;
  totals["passed"] = p;
  totals["failed"] = f;
  totals["findings"] = fd;
  out.failed = f;
  Json checks = Json::array();
  for (auto& r : results) checks.push_back(std::move(r));
  out.report = Json{{"tool", kToolName},  {"version", kToolVersion}, {"context", ctx.to_json()},
                    {"seed", config.seed}, {"checks", std::move(checks)}, {"totals", std::move(totals)}};
  return out;
}

}  // namespace vpq
