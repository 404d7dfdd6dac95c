#include "vpq/caseaudit.hpp"

#include "vpq/xpolynomial.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace vpq {

std::vector<long> annihilator_spectrum(const ScalarContext& ctx, const CoefficientRule& rule, long n, long window) {
  std::vector<long> out;
  for (long k = -window; k <= window; ++k) {
    if (rule.coeff(ctx, n, k).is_zero()) out.push_back(k);
  }
  return out;
}

ResidualReport quadratic_in_x_check(const ScalarContext& ctx, const CoefficientRule& rule, long window) {
  if (window < 4) throw DomainError("quadratic_in_x_check needs window >= 4");
  ResidualReport rep("quadratic-in-x", Json{{"rule", rule.spec_string()}, {"window", window}}, ctx.to_json());
  auto x_of = [&](long j) { return ctx.q_pow(-j) * ctx.qint(j); };
  auto scale = [&](long j) { return ctx.ratio_pow(-2 * j); };
  struct Product {
    std::string name;
    std::function<Scalar(long)> value;
  };
  const std::vector<Product> products = {
      {"L-1L1", [&](long j) { return scale(j) * rule.coeff(ctx, 1, j) * rule.coeff(ctx, -1, j + 1); }},
      {"L1L-1", [&](long j) { return scale(j) * rule.coeff(ctx, -1, j) * rule.coeff(ctx, 1, j - 1); }},
  };
  for (const auto& prod : products) {
    std::vector<std::pair<Scalar, Scalar>> nodes;
    for (long j = 0; j <= 2; ++j) nodes.emplace_back(x_of(j), prod.value(j));
    const XPolynomial fit = interpolate(nodes);
    rep.data()[prod.name] = fit.to_json();
    for (long j = -window; j <= window; ++j) {
      if (j >= 0 && j <= 2) continue;
      rep.record("quadratic-fit-" + prod.name, {j}, prod.value(j) - fit.evaluate(x_of(j)));
    }
  }
  return rep;
}

std::vector<long> j0_solutions(const ScalarContext& ctx, const Scalar& a, long window) {
  std::vector<long> out;
  for (long j = -window; j <= window; ++j) {
    const Scalar v = ctx.w(j) - a * ctx.ratio_pow(j) - a * ctx.p_pow(-j - 2) * ctx.q_pow(j + 1) * ctx.qint(2);
    if (v.is_zero()) out.push_back(j);
  }
  return out;
}

std::optional<long> find_j0(const ScalarContext& ctx, const Scalar& a, long window) {
  const auto all = j0_solutions(ctx, a, window);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::string case_name(CaseTag t) {
  switch (t) {
    case CaseTag::Case1: return "case1";
    case CaseTag::Case2: return "case2";
    case CaseTag::Case3: return "case3";
    case CaseTag::Case4: return "case4";
  }
  return "?";
}

CaseTag case_tag(const ScalarContext& ctx, const Scalar& a) {
  if (a == -(ctx.p() + ctx.q()).inverse()) return CaseTag::Case2;
  if (a == -ctx.p().inverse()) return CaseTag::Case3;
  if (a.is_zero()) return CaseTag::Case4;
  return CaseTag::Case1;
}

CaseConstants case_constants(const ScalarContext& ctx, const Scalar& a, CaseTag tag, CaseReading reading,
                             const Scalar& param) {
  const Scalar p = ctx.p(), q = ctx.q();
  auto I = [&](long n) { return ctx.qint(n); };
  const bool adj = reading == CaseReading::Adjudicated;
  const Scalar D1 = ctx.p_pow(2) * I(-2) - a * ctx.ratio_pow(-2) - a / q * I(2);
  CaseConstants c;
  switch (tag) {
    case CaseTag::Case1:
      c.H = p * I(-1) - a * p / q - a;
      c.Fc = p / q * a;
      c.Gc = a + p.inverse();
      c.D = D1;
      c.E = p * I(-1) - a * p / q - a / p * I(2);
      break;
    case CaseTag::Case2:
      c.H = 0;
      c.E = q / p / (p + q);
      c.Fc = -(p / q) / (p + q);
      c.D = D1;
      c.Gc = q / p / (adj ? p + q : p - q);
      break;
    case CaseTag::Case3:
      c.H = -q * I(-1) + I(-1) * I(2) * q / p * param;
      c.E = ctx.p_pow(-2) * ctx.q_pow(3) * I(-1) + ctx.p_pow(-2) * I(3) * c.H;
      c.Gc = 0;
      c.Fc = -a - a * ctx.p_pow(2) * q * I(-2);
      c.D = p.inverse();
      break;
    case CaseTag::Case4:
      c.H = p * I(-1) + I(-1) * I(2) * p / q * param;
      c.Fc = 0;
      c.E = p * I(-1);
      c.D = ctx.p_pow(2) * ctx.q_pow(-3) - ctx.p_pow(3) * q * I(-3) * c.H;
      c.Gc = adj ? p.inverse() : -p.inverse();
      break;
  }
  return c;
}

namespace {

struct Constraint {
  std::string id;
  Scalar residual;
};

std::vector<Constraint> constraints(const ScalarContext& ctx, const Scalar& a, CaseTag tag, CaseReading reading,
                                    const CaseConstants& c, const std::vector<long>& j0) {
  const Scalar p = ctx.p(), q = ctx.q();
  auto I = [&](long n) { return ctx.qint(n); };
  const bool adj = reading == CaseReading::Adjudicated;
  auto has_j0 = [&](long v) { return std::find(j0.begin(), j0.end(), v) != j0.end(); };
  std::vector<Constraint> out;
  out.push_back({"E-D-H", c.E / q - q * q / p * I(-1) * c.D - (I(2) / q - q * q * I(-1)) / p * c.H});
  out.push_back({"EG", c.E * c.Gc - (p * I(-1) - a * p / q - a / p * I(2)) *
                                        (p.inverse() - a * q / p - a * p * q * q * I(-2))});
  out.push_back({"DF", c.D * c.Fc - (ctx.p_pow(2) * I(-2) - a * ctx.ratio_pow(-2) - a / q * I(2)) *
                                        (-a - a * p * p * q * I(-2))});
  if (!has_j0(-3)) out.push_back({"FH", c.Fc * c.H + p / (q * q) * a * (1 + I(2) * a)});
  if (!has_j0(0)) out.push_back({"GH", c.Gc * c.H + (1 + I(2) * a) * (a + p.inverse()) / q});
  switch (tag) {
    case CaseTag::Case1: break;
    case CaseTag::Case2:
      out.push_back({"H-value", c.H});
      out.push_back({"EG-value", c.E * c.Gc - (adj ? ctx.ratio_pow(2) / ((p + q) * (p + q))
                                                    : ctx.ratio_pow(2) / (p * p - q * q))});
      out.push_back({"DF-value", c.D * c.Fc - ctx.ratio_pow(-2) / ((p + q) * (p + q))});
      break;
    case CaseTag::Case3:
      out.push_back({"DF-value", c.D * c.Fc - I(-1)});
      out.push_back({"EG-value", c.E * c.Gc});
      out.push_back({"GH-value", c.Gc * c.H});
      break;
    case CaseTag::Case4:
      out.push_back({"EG-value", c.E * c.Gc - I(-1)});
      out.push_back({"DF-value", c.D * c.Fc});
      out.push_back({"FH-value", c.Fc * c.H});
      break;
  }
  return out;
}

CoefficientRule case_module(CaseTag tag, const Scalar& a, const Scalar& param, const ScalarContext& ctx) {
  switch (tag) {
    case CaseTag::Case3: return CoefficientRule::exc_alpha(param);
    case CaseTag::Case4: return CoefficientRule::exc_alpha_prime(param);
    default: return CoefficientRule::mab(a, a * ctx.q());
  }
}

Json constants_json(const CaseConstants& c) {
  return Json{{"H", c.H.to_string()}, {"D", c.D.to_string()}, {"E", c.E.to_string()},
              {"F", c.Fc.to_string()}, {"G", c.Gc.to_string()}};
}

}  // namespace

ResidualReport case_constants_audit(const ScalarContext& ctx, const Scalar& a, const Scalar& param) {
  const CaseTag tag = case_tag(ctx, a);
  ResidualReport rep(case_name(tag), Json{{"a", a.to_string()}, {"b", (a * ctx.q()).to_string()},
                                          {"param", param.to_string()}},
                     ctx.to_json());
  const std::vector<long> j0 = j0_solutions(ctx, a, 16);
  rep.data()["j0"] = j0;
  if (j0.size() > 1) rep.add_finding("j0-not-unique", Json{{"solutions", j0}});
  switch (tag) {
    case CaseTag::Case1: {
      const bool none = std::find(j0.begin(), j0.end(), -3) == j0.end() && std::find(j0.begin(), j0.end(), 0) == j0.end();
      rep.require("j0", {}, none, "j0 in {-3, 0}");
      break;
    }
    case CaseTag::Case2:
      rep.require("j0", {}, std::find(j0.begin(), j0.end(), -3) == j0.end(), "j0 = -3");
      break;
    case CaseTag::Case3: rep.require("j0", {}, find_j0(ctx, a, 16) == -3, "j0 != -3"); break;
    case CaseTag::Case4: rep.require("j0", {}, find_j0(ctx, a, 16) == 0, "j0 != 0"); break;
  }

  const CaseConstants adj = case_constants(ctx, a, tag, CaseReading::Adjudicated, param);
  const CaseConstants typ = case_constants(ctx, a, tag, CaseReading::Typeset, param);
  rep.data()["constants"] = constants_json(adj);
  rep.data()["constants_typeset"] = constants_json(typ);
  for (const auto& c : constraints(ctx, a, tag, CaseReading::Adjudicated, adj, j0)) rep.record(c.id, {}, c.residual);
  for (const auto& c : constraints(ctx, a, tag, CaseReading::Typeset, typ, j0)) rep.observe("typeset:" + c.id, {}, c.residual);

  // The module the case arrives at carries the same constants in this basis.
  const CoefficientRule m = case_module(tag, a, param, ctx);
  rep.data()["module"] = m.spec_string();
  const std::vector<std::tuple<std::string, long, long, Scalar, Scalar>> slots = {
      {"H", 1, -1, adj.H, typ.H},     {"D", 2, -2, adj.D, typ.D},     {"E", 2, -1, adj.E, typ.E},
      {"F", -2, 0, adj.Fc, typ.Fc},   {"G", -2, 1, adj.Gc, typ.Gc}};
  for (const auto& [name, n, k, va, vt] : slots) {
    const Scalar target = m.coeff(ctx, n, k);
    rep.record("module-oracle-" + name, {n, k}, va - target);
    rep.observe("typeset:module-oracle-" + name, {n, k}, vt - target);
  }
  return rep;
}

namespace {

// Sections of family_consistency; each appends to `rep`.
void alpha_section(const ScalarContext& ctx, long window, const Scalar& alpha, ResidualReport& rep) {
  auto I = [&](long n) { return ctx.qint(n); };
  const CoefficientRule rule = CoefficientRule::exc_alpha(alpha);
  const CoefficientRule zero = CoefficientRule::exc_alpha(0);
  const Scalar H = -ctx.q() * I(-1) + I(-1) * I(2) * ctx.q() / ctx.p() * alpha;
  for (long n : {-2L, -1L, 1L, 2L}) {
    for (long j = -window; j <= window; ++j) {
      const Scalar c = rule.coeff(ctx, n, j);
      if (j != -1) {
        rep.record("alpha-generic", {n, j}, c - ctx.p_pow(-n - j - 1) * I(n + j + 1));
      } else {
        rep.record("alpha-exceptional", {n, j},
                   c - (-ctx.q_pow(n) * I(-n) + I(-n) * I(n + 1) * ctx.ratio_pow(n) * alpha));
        rep.record("alpha-zero-reduction", {n, j}, zero.coeff(ctx, n, j) - ctx.w(n));
      }
    }
  }
  rep.record("alpha-H", {1, -1}, rule.coeff(ctx, 1, -1) - H);
  rep.record("alpha-L2", {2, -1},
             rule.coeff(ctx, 2, -1) - (ctx.p_pow(-2) * ctx.q_pow(3) * I(-1) + ctx.p_pow(-2) * I(3) * H));
  rep.record("alpha-L-2", {-2, -1}, rule.coeff(ctx, -2, -1) - (ctx.p_pow(3) * I(-3) + ctx.ratio_pow(-3) * H));
}

void alphap_section(const ScalarContext& ctx, long window, const Scalar& alphap, ResidualReport& rep) {
  auto I = [&](long n) { return ctx.qint(n); };
  const CoefficientRule rule = CoefficientRule::exc_alpha_prime(alphap);
  const CoefficientRule zero = CoefficientRule::exc_alpha_prime(0);
  const Scalar H = ctx.p() * I(-1) + I(-1) * I(2) * ctx.p() / ctx.q() * alphap;
  for (long n : {-2L, -1L, 1L, 2L}) {
    for (long j = -window; j <= window; ++j) {
      const Scalar c = rule.coeff(ctx, n, j);
      if (n + j != 0) {
        rep.record("alphap-generic", {n, j}, c - ctx.w(j));
      } else {
        rep.record("alphap-exceptional", {n, j},
                   c - (ctx.p_pow(n) * I(-n) + ctx.ratio_pow(-n) * I(-n) * I(n + 1) * alphap));
        rep.record("alphap-zero-reduction", {n, j}, zero.coeff(ctx, n, j) - ctx.w(j));
      }
    }
  }
  rep.record("alphap-H", {1, -1}, rule.coeff(ctx, 1, -1) - H);
  rep.record("alphap-L2", {2, -2},
             rule.coeff(ctx, 2, -2) - (ctx.p_pow(2) * ctx.q_pow(-3) - ctx.p_pow(3) * ctx.q() * I(-3) * H));
  rep.record("alphap-L-2", {-2, 2}, rule.coeff(ctx, -2, 2) - (ctx.p_pow(-3) * I(3) + ctx.ratio_pow(3) * H));
}

void relation_section(const ScalarContext& ctx, long window, const CoefficientRule& rule, ResidualReport& rep,
                      bool as_findings) {
  const ResidualReport mod = verify_module(ctx, rule, 2, window, PairFilter::Generators);
  if (!as_findings) {
    rep.absorb(mod);
    return;
  }
  rep.data()["typeset_relation_counts"] = Json{{"checked", mod.checked()}, {"failed", mod.failed()}};
  for (const auto& f : mod.failures()) {
    rep.add_finding("typeset:" + f.identity, Json{{"indices", indices_json(f.indices)}, {"residual", f.residual}});
  }
}

void beta_section(const ScalarContext& ctx, long window, const Scalar& beta, ResidualReport& rep) {
  auto I = [&](long n) { return ctx.qint(n); };
  const CoefficientRule rule = CoefficientRule::exc_beta(beta);
  for (long n : {-2L, -1L, 1L, 2L}) {
    for (long j = -window; j <= window; ++j) {
      const Scalar c = rule.coeff(ctx, n, j);
      if (j != 1) {
        rep.record("beta-generic", {n, j}, c + ctx.q_pow(n + j - 1) * I(-n - j + 1));
      } else {
        rep.record("beta-exceptional", {n, j},
                   c - (-ctx.q_pow(n) * I(-n) + ctx.ratio_pow(n) * I(n) * I(-n + 1) * beta));
      }
    }
  }
  relation_section(ctx, window, rule, rep, false);
}

void betap_section(const ScalarContext& ctx, long window, const Scalar& betap, ResidualReport& rep) {
  auto I = [&](long n) { return ctx.qint(n); };
  const CoefficientRule adjudicated = CoefficientRule::exc_beta_prime(betap, true);
  const CoefficientRule typeset = CoefficientRule::exc_beta_prime(betap, false);
  for (long n : {-2L, -1L, 1L, 2L}) {
    for (long j = -window; j <= window; ++j) {
      if (n + j != 0) {
        rep.record("betap-generic", {n, j}, adjudicated.coeff(ctx, n, j) - ctx.w(j));
      } else {
        rep.record("betap-exceptional", {n, j},
                   adjudicated.coeff(ctx, n, j) -
                       (ctx.p_pow(n) * I(-n) + ctx.ratio_pow(-n) * I(-n) * I(n + 1) * betap));
        rep.observe("typeset:betap-bracket", {n, j}, typeset.coeff(ctx, n, j) - adjudicated.coeff(ctx, n, j));
      }
    }
  }
  relation_section(ctx, window, adjudicated, rep, false);
  relation_section(ctx, window, typeset, rep, true);
}

}  // namespace

ResidualReport family_consistency(const ScalarContext& ctx, long window, const Scalar& param) {
  ResidualReport rep("families", Json{{"window", window}, {"param", param.to_string()}}, ctx.to_json());
  alpha_section(ctx, window, param, rep);
  alphap_section(ctx, window, param, rep);
  beta_section(ctx, window, param, rep);
  betap_section(ctx, window, param, rep);
  return rep;
}

std::vector<ResidualReport> case_audit(const ScalarContext& ctx, long window, const Scalar& param) {
  std::vector<ResidualReport> out;
  const std::vector<Scalar> reps = {Scalar(5L), -(ctx.p() + ctx.q()).inverse(), -ctx.p().inverse(), Scalar(0L)};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    ResidualReport r = case_constants_audit(ctx, reps[i], param);
    if (i == 2) alpha_section(ctx, window, param, r);
    if (i == 3) alphap_section(ctx, window, param, r);
    out.push_back(std::move(r));
  }
  ResidualReport beta("caseII-beta", Json{{"window", window}, {"param", param.to_string()}}, ctx.to_json());
  beta_section(ctx, window, param, beta);
  out.push_back(std::move(beta));
  ResidualReport betap("caseII-betap", Json{{"window", window}, {"param", param.to_string()}}, ctx.to_json());
  betap_section(ctx, window, param, betap);
  out.push_back(std::move(betap));
  return out;
}

}  // namespace vpq
