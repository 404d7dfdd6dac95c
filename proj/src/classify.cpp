#include "vpq/classify.hpp"

#include "vpq/modules.hpp"
#include "vpq/sampling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace vpq {

std::string reading_name(Reading r) { return r == Reading::Typeset ? "typeset" : "derived"; }

namespace {

const Scalar kA = Scalar::variable(Var::a);
const Scalar kB = Scalar::variable(Var::b);

Scalar inv_p_minus_q(const ScalarContext& ctx) { return (ctx.p() - ctx.q()).inverse(); }

XPolynomial lin(const Scalar& c) { return XPolynomial::monic_linear(c); }

XPolynomial g2_typeset(const ScalarContext& ctx, const Scalar& a, const Scalar& b) {
  return lin(ctx.p() * ctx.qint(-1) - a * ctx.p() / ctx.q() - b * ctx.p_pow(2) * ctx.q() * ctx.qint(-1));
}

// g3 as it appears inside the printed product identity and g5: "apq" for "apq^-1".
XPolynomial g3_apq(const ScalarContext& ctx, const Scalar& a, const Scalar& b) {
  return lin(ctx.p() * ctx.qint(-1) - a * ctx.p() * ctx.q() - b / ctx.q());
}

// l(2,-2) as printed: b p q^-2 [2] in place of b q^-2 [2].
XPolynomial l2m2_typeset(const ScalarContext& ctx, const Scalar& a, const Scalar& b) {
  return lin(ctx.p_pow(2) * ctx.qint(-2) - a * ctx.ratio_pow(-2) - b * ctx.p() * ctx.q_pow(-2) * ctx.qint(2));
}

using Kappa = std::function<Scalar(const Scalar& p, const Scalar& q)>;

struct ConditionRow {
  int i;
  int j;
  Kappa kappa;  // empty for the (1,1) row, whose condition is b = 0
  std::vector<std::pair<std::string, Kappa>> alternatives;
};

const std::vector<ConditionRow>& condition_rows() {
  static const std::vector<ConditionRow> rows = [] {
    auto inv = [](const Scalar& x) { return x.inverse(); };
    std::vector<ConditionRow> r;
    r.push_back({1, 1, {}, {}});
    r.push_back({2, 1, [=](auto& p, auto& q) { return (inv(q) + q / (p * p)) / (1 - q / p); }, {}});
    r.push_back({1, 2, [=](auto& p, auto& q) { return (p / (q * q) - inv(q)) / (p / q - 1); }, {}});
    r.push_back({2, 2, [=](auto& p, auto& q) { return (q / p + p / (q * q)) / (p / q - q / p); },
                 {{"numerator p^-2 q + p q^-2",
                   [=](auto& p, auto& q) { return (q / (p * p) + p / (q * q)) / (p / q - q / p); }}}});
    r.push_back({1, 3, [=](auto& p, auto& q) { return (inv(p) - inv(q)) / (p / q - 1); }, {}});
    r.push_back({2, 3, [=](auto& p, auto& q) { return (q / (p * p) - inv(q)) / (p / q - q / p); }, {}});
    r.push_back({1, 4, [=](auto& p, auto&) { return inv(p); }, {{"sign: a + b p^-1", [=](auto& p, auto&) { return -inv(p); }}}});
    r.push_back({2, 4, [=](auto& p, auto&) { return inv(p); }, {{"sign: a + b p^-1", [=](auto& p, auto&) { return -inv(p); }}}});
    r.push_back({3, 1, [=](auto& p, auto& q) { return (inv(q) - q / (p * p)) / (1 - q * q / (p * p)); }, {}});
    r.push_back({4, 1, [=](auto& p, auto& q) { return (inv(q) - inv(p)) / (1 - q / p); }, {}});
    r.push_back({3, 2, [=](auto& p, auto& q) { return (p / (q * q) - q / (p * p)) / (p / q - q * q / (p * p)); }, {}});
    r.push_back({4, 2, [=](auto& p, auto& q) { return (p / (q * q) - inv(p)) / (p / q - q / p); }, {}});
    r.push_back({3, 3, [=](auto& p, auto& q) { return (-q / (p * p) - inv(q)) / (p / q - q * q / (p * p)); }, {}});
    r.push_back({4, 3, [=](auto& p, auto& q) { return -inv(p - q); }, {}});
    r.push_back({3, 4, [=](auto& p, auto& q) {
                   return (-p / (q * q) - q / (p * p)) / (p * p / (q * q) - q * q / (p * p));
                 }, {}});
    r.push_back({4, 4, [=](auto& p, auto& q) { return (-inv(p) - p / (q * q)) / (p * p / (q * q) - q / p); }, {}});
    return r;
  }();
  return rows;
}

const ConditionRow& row_for(int i, int j) {
  for (const auto& r : condition_rows()) {
    if (r.i == i && r.j == j) return r;
  }
  throw std::out_of_range("degeneracy pair out of range");
}

Scalar condition_value(const ScalarContext& ctx, const Scalar& a, const Scalar& b, const Kappa& kappa) {
  if (!kappa) return b;
  return a - b * kappa(ctx.p(), ctx.q()) + inv_p_minus_q(ctx);
}

// Affine form alpha*a + beta*b + gamma of a scalar in a, b.
struct Affine {
  Scalar alpha, beta, gamma;
  bool exact = false;
};

Affine affine_parts(const Scalar& s) {
  auto at = [&](long av, long bv) { return s.substitute({{Var::a, mpq_class(av)}, {Var::b, mpq_class(bv)}}); };
  Affine f;
  f.gamma = at(0, 0);
  f.alpha = at(1, 0) - f.gamma;
  f.beta = at(0, 1) - f.gamma;
  f.exact = (f.alpha * kA + f.beta * kB + f.gamma) == s;
  return f;
}

// A rational point on the line s = 0, when s is affine with rational parts.
std::optional<std::pair<mpq_class, mpq_class>> line_point(const Scalar& s) {
  const Affine f = affine_parts(s);
  if (!f.exact || !f.alpha.is_rational() || !f.beta.is_rational() || !f.gamma.is_rational()) return std::nullopt;
  if (!f.alpha.is_zero()) {
    const mpq_class b0(7, 3);
    return std::make_pair(mpq_class(-(f.beta.rational() * b0 + f.gamma.rational()) / f.alpha.rational()), b0);
  }
  if (!f.beta.is_zero()) return std::make_pair(mpq_class(5, 2), mpq_class(-f.gamma.rational() / f.beta.rational()));
  return std::nullopt;
}

bool vanishes_at(const Scalar& s, const std::pair<mpq_class, mpq_class>& pt) {
  return s.substitute({{Var::a, pt.first}, {Var::b, pt.second}}).is_zero();
}

struct Equivalence {
  bool proportional = false;
  bool forward = true;   // condition zero point => polynomials equal
  bool backward = true;  // polynomials equal point => condition zero
  bool points_checked = false;
  bool holds() const { return proportional && forward && backward; }
};

Equivalence check_equivalence(const Scalar& diff, const Scalar& cond) {
  Equivalence e;
  if (diff.is_zero() || cond.is_zero()) {
    e.proportional = diff.is_zero() && cond.is_zero();
    return e;
  }
  const Scalar ratio = cond / diff;
  e.proportional = !ratio.involves(Var::a) && !ratio.involves(Var::b);
  const auto pc = line_point(cond);
  const auto pd = line_point(diff);
  if (pc && pd) {
    e.points_checked = true;
    e.forward = vanishes_at(diff, *pc);
    e.backward = vanishes_at(cond, *pd);
  }
  return e;
}

std::string pair_label(int i, int j) { return "f" + std::to_string(i) + "=g" + std::to_string(j); }

// Printed condition line for f_i = g_j recovered from the polynomial difference:
// a - b*kappa + c = 0 with the a-coefficient normalized to 1.
Json derived_line(const Scalar& diff) {
  const Affine f = affine_parts(diff);
  Json j;
  if (!f.alpha.is_zero()) {
    j["kappa"] = (-f.beta / f.alpha).to_string();
    j["constant"] = (f.gamma / f.alpha).to_string();
  } else {
    j["b_coefficient"] = f.beta.to_string();
    j["constant"] = f.gamma.to_string();
  }
  return j;
}

std::string case_from(const std::set<std::pair<int, int>>& truth) {
  using S = std::set<std::pair<int, int>>;
  if (truth.empty()) return "1";
  if (truth == S{{1, 1}}) return "2";
  if (truth == S{{1, 3}, {1, 4}, {2, 3}, {2, 4}}) return "3";
  if (truth == S{{3, 1}, {3, 2}, {4, 1}, {4, 2}}) return "4";
  return "unlisted";
}

void audit_poly(ResidualReport& rep, const std::string& id, const XPolynomial& residual) {
  rep.data()["claims"][id] = Json{{"holds", residual.is_zero()}, {"residual", residual.to_json()}};
  if (!residual.is_zero()) rep.add_finding(id, Json{{"degree", residual.degree()}, {"residual", residual.to_json()}});
}

void audit_flag(ResidualReport& rep, const std::string& id, bool holds, Json detail) {
  rep.data()["claims"][id] = Json{{"holds", holds}, {"detail", detail}};
  if (!holds) rep.add_finding(id, std::move(detail));
}

Json poly_json(const XPolynomial& x) { return Json{{"degree", x.degree()}, {"coefficients", x.to_json()}}; }

}  // namespace

XPolynomial ell(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long n, long s) {
  return lin(ctx.p_pow(-s) * ctx.qint(s) - a * ctx.ratio_pow(s) - b * ctx.p_pow(-s - n) * ctx.q_pow(s) * ctx.qint(n));
}

FGPolynomials fgi_polynomials(const ScalarContext& ctx, const Scalar& a, const Scalar& b, Reading reading) {
  FGPolynomials r;
  r.f = {ell(ctx, a, b, 1, 0), ell(ctx, a, b, 1, 1), ell(ctx, a, b, -1, 2), ell(ctx, a, b, -1, 1)};
  r.g = {ell(ctx, a, b, -1, 0), reading == Reading::Typeset ? g2_typeset(ctx, a, b) : ell(ctx, a, b, -1, -1),
         ell(ctx, a, b, 1, -1), ell(ctx, a, b, 1, -2)};
  return r;
}

Scalar degeneracy_condition(const ScalarContext& ctx, const Scalar& a, const Scalar& b, int i, int j) {
  return condition_value(ctx, a, b, row_for(i, j).kappa);
}

Json DegeneracyProfile::to_json() const {
  Json pairs = Json::array();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      pairs.push_back(Json{{"pair", pair_label(i + 1, j + 1)}, {"equal", equal[i][j]}, {"condition", condition[i][j]}});
    }
  }
  Json finds = Json::array();
  for (const auto& f : findings) finds.push_back(Json{{"id", f.id}, {"detail", f.detail}});
  return Json{{"case", case_tag}, {"pairs", pairs}, {"findings", finds}};
}

DegeneracyProfile degeneracy_profile(const ScalarContext& ctx, const Scalar& a, const Scalar& b) {
  if ((a + inv_p_minus_q(ctx)).is_zero()) throw DomainError("degeneracy profile requires a != -1/(p-q)");
  const FGPolynomials derived = fgi_polynomials(ctx, a, b, Reading::Derived);
  const FGPolynomials typeset = fgi_polynomials(ctx, a, b, Reading::Typeset);
  DegeneracyProfile prof;
  std::set<std::pair<int, int>> truth;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool eq = derived.f[i] == derived.g[j];
      const bool cond = degeneracy_condition(ctx, a, b, i + 1, j + 1).is_zero();
      prof.equal[i][j] = eq;
      prof.condition[i][j] = cond;
      if (eq) truth.insert({i + 1, j + 1});
      if (eq != cond) {
        prof.findings.push_back(
            {"condition-disagreement", Json{{"pair", pair_label(i + 1, j + 1)}, {"equal", eq}, {"condition", cond}}});
      }
      const bool eq_typeset = typeset.f[i] == typeset.g[j];
      if (eq_typeset != eq) {
        prof.findings.push_back(
            {"g2-reading", Json{{"pair", pair_label(i + 1, j + 1)}, {"typeset", eq_typeset}, {"derived", eq}}});
      }
    }
  }
  prof.case_tag = case_from(truth);
  if (prof.case_tag == "unlisted") {
    Json t = Json::array();
    for (const auto& [i, j] : truth) t.push_back(pair_label(i, j));
    prof.findings.push_back({"unlisted-case", Json{{"equal_pairs", t}}});
  }
  return prof;
}

ResidualReport degeneracy_table_check(const ScalarContext& ctx) {
  ResidualReport rep("degeneracy-table", Json{{"a", "a"}, {"b", "b"}}, ctx.to_json());
  const FGPolynomials derived = fgi_polynomials(ctx, kA, kB, Reading::Derived);
  const FGPolynomials typeset = fgi_polynomials(ctx, kA, kB, Reading::Typeset);
  Json rows = Json::array();
  for (const auto& row : condition_rows()) {
    const Scalar diff = (derived.f[row.i - 1] - derived.g[row.j - 1]).coeff(0);
    const Scalar diff_typeset = (typeset.f[row.i - 1] - typeset.g[row.j - 1]).coeff(0);
    const Scalar cond = condition_value(ctx, kA, kB, row.kappa);
    const Equivalence e = check_equivalence(diff, cond);
    Json r{{"pair", pair_label(row.i, row.j)},
           {"proportional", e.proportional},
           {"points_checked", e.points_checked},
           {"condition_implies_equal", e.forward},
           {"equal_implies_condition", e.backward},
           {"derived_line", derived_line(diff)}};
    std::string status = e.holds() ? "typeset" : "unresolved";
    if (!e.holds()) {
      for (const auto& [label, kappa] : row.alternatives) {
        if (check_equivalence(diff, condition_value(ctx, kA, kB, kappa)).holds()) {
          status = "reading: " + label;
          rep.add_finding("condition-typo", Json{{"pair", pair_label(row.i, row.j)}, {"reading", label}});
          break;
        }
      }
    }
    if (row.j == 2) r["holds_with_typeset_g2"] = check_equivalence(diff_typeset, cond).holds();
    r["status"] = status;
    rep.require("equivalence", {row.i, row.j}, status != "unresolved",
                pair_label(row.i, row.j) + " is equivalent to a - b*" + derived_line(diff).value("kappa", "?") +
                    " + " + derived_line(diff).value("constant", "?") + " = 0, not to the printed condition");
    rows.push_back(std::move(r));
  }
  rep.data()["rows"] = std::move(rows);
  rep.add_finding("g2-reading", Json{{"typeset", "x + p[-1] - a p q^-1 - b p^2 q [-1]"},
                                     {"derived", "x + p[-1] - a p q^-1 - b p^2 q^-1 [-1]"}});
  return rep;
}

std::optional<GaugeData> gauge_data(const ScalarContext& ctx, const Scalar& a, const Scalar& b) {
  try {
    GaugeData g;
    g.b_partner = quadratic_roots(ctx, a, b).root2;
    const CoefficientRule m = CoefficientRule::mab(a, b);
    const CoefficientRule m2 = CoefficientRule::mab(a, g.b_partner);
    auto c = [&](long n, long k) { return m.coeff(ctx, n, k); };
    auto c2 = [&](long n, long k) { return m2.coeff(ctx, n, k); };
    g.f0 = c2(2, 0) * c(1, 0) * c(1, 1) / (c2(1, 0) * c2(1, 1)) - c(2, 0);
    g.g0 = c2(-2, 0) * c2(1, -1) * c2(1, -2) / (c(1, -1) * c(1, -2)) - c(-2, 0);
    g.F = g.f0 * c(-1, 2) * c(-1, 1);
    g.G = g.g0 * c(1, -2) * c(1, -1);
    return g;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

ResidualReport identity_audit(const ScalarContext& ctx, const Scalar& a, const Scalar& b, std::uint64_t seed) {
  ResidualReport rep("audit-identities", Json{{"a", a.to_string()}, {"b", b.to_string()}, {"seed", seed}},
                     ctx.to_json());
  auto L = [&](long n, long s) { return ell(ctx, a, b, n, s); };
  const XPolynomial f1 = L(1, 0), f2 = L(1, 1), f3 = L(-1, 2), f4 = L(-1, 1);
  const XPolynomial g1 = L(-1, 0), g2 = L(-1, -1), g3 = L(1, -1), g4 = L(1, -2);
  const XPolynomial g2t = g2_typeset(ctx, a, b), g3t = g3_apq(ctx, a, b), l2m2t = l2m2_typeset(ctx, a, b);
  const XPolynomial lm20 = L(-2, 0), lm22 = L(-2, 2), l20 = L(2, 0), l2m2 = L(2, -2);
  const Scalar r6 = ctx.ratio_pow(-6);  // p^6 q^-6
  const Scalar r6i = ctx.ratio_pow(6);
  const Scalar r4 = ctx.ratio_pow(4);
  auto K = [](const Scalar& c) { return XPolynomial::constant(c); };

  Json& data = rep.data();
  data["f"] = Json::array({f1.to_json(), f2.to_json(), f3.to_json(), f4.to_json()});
  data["g_derived"] = Json::array({g1.to_json(), g2.to_json(), g3.to_json(), g4.to_json()});
  data["g2_typeset"] = g2t.to_json();

  // Cubic differences defining F and G.
  const XPolynomial DF = f1 * f2 * lm22 - f3 * f4 * l20;
  const XPolynomial DGt = g1 * g2t * l2m2t - g4 * g3 * l20;
  const XPolynomial DGd = g1 * g2 * l2m2 - g4 * g3 * lm20;
  data["D_F"] = poly_json(DF);
  data["D_G_typeset"] = poly_json(DGt);
  data["D_G_derived"] = poly_json(DGd);
  audit_flag(rep, "D_F-constant", DF.degree() <= 0, Json{{"degree", DF.degree()}});
  audit_flag(rep, "D_G-constant-typeset", DGt.degree() <= 0, Json{{"degree", DGt.degree()}});
  audit_flag(rep, "D_G-constant-derived", DGd.degree() <= 0, Json{{"degree", DGd.degree()}});
  audit_poly(rep, "F-G-relation-typeset", DF + r6i * DGt);
  audit_poly(rep, "F-G-relation-derived", DF + r6i * DGd);

  // Full product identity T(F,G) = lhs - rhs; affine in F and G separately.
  struct Factors {
    XPolynomial g2, g3_left, l2m2;
  };
  auto T = [&](const Factors& fx, const Scalar& F, const Scalar& G) {
    const XPolynomial lhs =
        r4 * (f1 * f2 * f3 * f4) * (r6 * F * (g4 * fx.g3_left * lm20) + G * (g1 * fx.g2 * fx.l2m2) + K(r6 * F * G));
    const XPolynomial rhs = g1 * fx.g2 * g3 * g4 * (F * (f1 * f2 * lm22) + r6i * G * (f3 * f4 * l20) + K(r6i * F * G));
    return lhs - rhs;
  };
  const Factors derived{g2, g3, l2m2};
  const Factors typeset{g2t, g3t, l2m2t};
  const XPolynomial TF = T(derived, 1, 0);
  const XPolynomial TG = T(derived, 0, 1);
  const XPolynomial TFG = T(derived, 1, 1) - TF - TG;
  const Scalar lead = (ctx.p_pow(2) - ctx.q_pow(2)) * ctx.q_pow(-2);
  data["identity_degrees"] = Json{{"F", TF.degree()}, {"G", TG.degree()}, {"FG", TFG.degree()}};
  rep.record("leading-coefficient-F", {7}, TF.coeff(7) - lead);
  rep.record("leading-coefficient-G", {7}, TG.coeff(7) - lead * r6i);
  rep.require("identity-degree", {}, TF.degree() <= 7 && TG.degree() <= 7 && TFG.degree() <= 4,
              "degrees " + std::to_string(TF.degree()) + ", " + std::to_string(TG.degree()) + ", " +
                  std::to_string(TFG.degree()));

  // With G = -p^6 q^-6 F the identity reads F*U + F^2*V = 0.
  const XPolynomial U = TF - r6 * TG;
  const XPolynomial V = -r6 * TFG;
  std::optional<Scalar> F_solution;
  if (V.is_zero()) {
    data["F_solution"] = U.is_zero() ? "any" : "zero only";
  } else {
    F_solution = -U.coeff(V.degree()) / V.leading();
    const XPolynomial rest = U + *F_solution * V;
    for (int d = 0; d <= rest.degree(); ++d) rep.record("F-solution-consistent", {d}, rest.coeff(d));
    data["F_solution"] = F_solution->to_string();
  }

  // Gauge oracle.
  const auto gauge = gauge_data(ctx, a, b);
  std::optional<Scalar> F, G;
  if (gauge) {
    data["gauge"] = Json{{"b_partner", gauge->b_partner.to_string()}, {"f0", gauge->f0.to_string()},
                         {"g0", gauge->g0.to_string()}, {"F", gauge->F.to_string()}, {"G", gauge->G.to_string()}};
    rep.record("gauge-F-G-relation", {}, gauge->F + r6i * gauge->G);
    const XPolynomial Tg = T(derived, gauge->F, gauge->G);
    for (int d = 0; d <= std::max(Tg.degree(), 0); ++d) rep.record("gauge-identity", {d}, Tg.coeff(d));
    if (F_solution && !gauge->F.is_zero()) rep.record("F-solution-gauge", {}, *F_solution - gauge->F);
    audit_poly(rep, "D_F-equals-gauge-F", DF - K(gauge->F));
    audit_poly(rep, "D_G-equals-gauge-G-typeset", DGt - K(gauge->G));
    audit_poly(rep, "D_G-equals-gauge-G-derived", DGd - K(gauge->G));
    F = gauge->F;
    G = gauge->G;
  } else {
    data["gauge"] = "a normalizing coefficient vanishes";
    if (DF.degree() <= 0 && DGt.degree() <= 0) {
      F = DF.coeff(0);
      G = DGt.coeff(0);
    }
  }

  // f5, g5 cubic parts and their degree claim.
  const XPolynomial f5t = f1 * f2 * lm20 - g1 * g2t * l2m2t;
  const XPolynomial g5t = g4 * g3t * lm22 - f3 * f4 * l20;
  // Derived: the leading pairs f1 f2 and g4 g3 trade places between f5 and g5.
  const XPolynomial f5d = g4 * g3 * lm20 - g1 * g2 * l2m2;
  const XPolynomial g5d = f1 * f2 * lm22 - f3 * f4 * l20;
  data["f5_cubic_typeset"] = poly_json(f5t);
  data["f5_cubic_derived"] = poly_json(f5d);
  data["g5_cubic_typeset"] = poly_json(g5t);
  data["g5_cubic_derived"] = poly_json(g5d);
  audit_flag(rep, "f5-degree-typeset", f5t.degree() <= 1, Json{{"degree", f5t.degree()}});
  audit_flag(rep, "f5-degree-derived", f5d.degree() <= 1, Json{{"degree", f5d.degree()}});
  audit_flag(rep, "g5-degree-typeset", g5t.degree() <= 1, Json{{"degree", g5t.degree()}});
  audit_flag(rep, "g5-degree-derived", g5d.degree() <= 1, Json{{"degree", g5d.degree()}});

  if (!F || !G) {
    data["identity"] = "no scalar F, G available";
    return rep;
  }
  data["F"] = F->to_string();
  data["G"] = G->to_string();
  audit_poly(rep, "f5-vanishes-typeset", f5t - K(r6 * *F));
  audit_poly(rep, "f5-vanishes-derived", f5d - K(r6 * *F));
  audit_poly(rep, "g5-vanishes-typeset", g5t - K(*F));
  audit_poly(rep, "g5-vanishes-derived", g5d - K(*F));

  audit_poly(rep, "product-identity-typeset", T(typeset, *F, *G));
  const XPolynomial lhs5 = f1 * f2 * f3 * f4 * (f5t - K(r6 * *F));
  const XPolynomial rhs5 = g1 * g2t * g3 * g4 * (g5t - K(*F));
  const XPolynomial res5 = lhs5 - rhs5;
  audit_poly(rep, "f5-g5-product-identity-typeset", res5);

  std::mt19937_64 rng(seed);
  Json points = Json::array();
  for (int i = 0; i < 5; ++i) {
    const Scalar x(seeded_rational(rng));
    const Scalar l = lhs5.evaluate(x), r = rhs5.evaluate(x);
    rep.record("pointwise-expansion", {i}, (l - r) - res5.evaluate(x));
    points.push_back(Json{{"x", x.to_string()}, {"lhs", l.to_string()}, {"rhs", r.to_string()}, {"equal", l == r}});
  }
  data["f5_g5_points"] = std::move(points);
  return rep;
}

Scalar second_solution(const ScalarContext& ctx, const Scalar& a, const Scalar& b) {
  return Scalar(1L) - a * (ctx.p() - ctx.q()) - b;
}

QuadraticRoots quadratic_roots(const ScalarContext& ctx, const Scalar& a, const Scalar& b) {
  QuadraticRoots r;
  const XPolynomial left({-a, -ctx.qint(1) / ctx.p()});
  const XPolynomial right({(ctx.qint(1) - a * ctx.q()) / ctx.p(), -ctx.q() * ctx.qint(-1)});
  r.quadratic = left * right;
  r.root_sum = -r.quadratic.coeff(1) / r.quadratic.coeff(2);
  r.root1 = b;
  r.root2 = r.root_sum - b;
  r.typeset_partner_is_root = r.quadratic.evaluate(second_solution(ctx, a, b)) == r.quadratic.evaluate(b);
  return r;
}

ResidualReport second_solution_audit(const ScalarContext& ctx, const Scalar& a, const Scalar& b, std::uint64_t seed,
                                     int samples) {
  ResidualReport rep("second-solution", Json{{"a", a.to_string()}, {"b", b.to_string()}, {"seed", seed}},
                     ctx.to_json());
  const QuadraticRoots qr = quadratic_roots(ctx, a, b);
  const Scalar printed = second_solution(ctx, a, b);
  rep.data()["printed_partner"] = printed.to_string();
  rep.data()["vieta_partner"] = qr.root2.to_string();
  rep.data()["root_sum"] = qr.root_sum.to_string();
  rep.data()["quadratic"] = qr.quadratic.to_json();
  rep.record("printed-involution", {}, second_solution(ctx, a, printed) - b);
  rep.record("vieta-partner-is-root", {}, qr.quadratic.evaluate(qr.root2) - qr.quadratic.evaluate(b));
  rep.record("vieta-involution", {}, quadratic_roots(ctx, a, qr.root2).root2 - b);
  rep.observe("printed-partner-is-root", {}, qr.quadratic.evaluate(printed) - qr.quadratic.evaluate(b));

  std::mt19937_64 rng(seed);
  Json pts = Json::array();
  for (int i = 0; i < samples; ++i) {
    const Scalar ai(seeded_rational(rng)), bi(seeded_rational(rng));
    const long m = seeded_int(rng, -4, 4);
    const auto [sa, sb] = shift_params(ctx, ai, bi, m);
    const Scalar printed_after = second_solution(ctx, sa, sb);
    const Scalar printed_before = shift_params(ctx, ai, second_solution(ctx, ai, bi), m).second;
    const Scalar vieta_after = quadratic_roots(ctx, sa, sb).root2;
    const Scalar vieta_before = shift_params(ctx, ai, quadratic_roots(ctx, ai, bi).root2, m).second;
    rep.observe("shift-commutes-printed", {i, m}, printed_after - printed_before);
    rep.observe("shift-commutes-vieta", {i, m}, vieta_after - vieta_before);
    pts.push_back(Json{{"a", ai.to_string()}, {"b", bi.to_string()}, {"m", m}});
  }
  rep.data()["samples"] = std::move(pts);
  return rep;
}

std::pair<Scalar, Scalar> l2_coefficients(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long j) {
  auto P = [&](long e) { return ctx.p_pow(e); };
  auto Q = [&](long e) { return ctx.q_pow(e); };
  auto base = [&](long k) { return ctx.w(k) - a * ctx.ratio_pow(k); };
  const Scalar m0 = base(j) - b * P(-j - 1) * Q(j);
  const Scalar m1 = base(j + 1) - b * P(-j - 2) * Q(j + 1);
  const Scalar d1 = base(j + 2) - b * P(-j - 1) * Q(j + 2) * ctx.qint(-1);
  const Scalar n2 = base(j + 2) - b * P(-j) * Q(j + 2) * ctx.qint(-2);
  const Scalar d2 = base(j + 1) - b * P(-j) * Q(j + 1) * ctx.qint(-1);
  const Scalar e0 = base(j) - b * P(-j - 1) * Q(j) * ctx.qint(-1);
  const Scalar e1 = base(j - 1) - b * P(-j + 2) * Q(j - 1) * ctx.qint(-1);
  const Scalar e2 = base(j - 2) - b * P(-j + 1) * Q(j - 2);
  const Scalar e3 = base(j - 2) - b * P(-j) * Q(j - 2) * ctx.qint(-2);
  const Scalar e4 = base(j - 1) - b * P(-j) * Q(j - 1);
  auto need = [&](const Scalar& d, const char* name) {
    if (d.is_zero()) throw DomainError(std::string("vanishing denominator ") + name + " at j = " + std::to_string(j));
  };
  need(d1, "L2 first (index j+2, [-1])");
  need(d2, "L2 second (index j+1, [-1])");
  need(e2, "L-2 first (index j-2)");
  need(e4, "L-2 second (index j-1)");
  return {m0 * m1 * n2 / (d1 * d2), e0 * e1 * e3 / (e2 * e4)};
}

ResidualReport l2_gauge_audit(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long jmax) {
  ResidualReport rep("l2-coefficients", Json{{"a", a.to_string()}, {"b", b.to_string()}, {"jmax", jmax}},
                     ctx.to_json());
  const std::vector<std::pair<std::string, Scalar>> partners = {
      {"b", b}, {"printed-partner", second_solution(ctx, a, b)}, {"vieta-partner", quadratic_roots(ctx, a, b).root2}};
  std::map<std::string, bool> all_zero;
  for (const auto& [label, bp] : partners) all_zero[label] = true;
  Json values = Json::array();
  Json skipped = Json::array();
  for (long j = -jmax; j <= jmax; ++j) {
    Scalar prod;
    try {
      prod = l2_coefficients(ctx, a, b, j).first * l2_coefficients(ctx, a, b, j + 2).second;
    } catch (const DomainError& e) {
      skipped.push_back(Json{{"j", j}, {"reason", e.what()}});
      continue;
    }
    Json v{{"j", j}, {"product", prod.to_string()}};
    for (const auto& [label, bp] : partners) {
      const CoefficientRule m = CoefficientRule::mab(a, bp);
      const Scalar target = m.coeff(ctx, 2, j) * m.coeff(ctx, -2, j + 2);
      v[label] = target.to_string();
      if (!rep.observe("l2-product-" + label, {j}, prod - target)) all_zero[label] = false;
    }
    values.push_back(std::move(v));
  }
  rep.data()["products"] = std::move(values);
  rep.data()["skipped"] = std::move(skipped);
  Json consistent = Json::array();
  for (const auto& [label, bp] : partners) {
    if (all_zero[label]) consistent.push_back(label);
  }
  rep.data()["consistent_readings"] = std::move(consistent);
  return rep;
}

ResidualReport fg_recurrence_audit(const ScalarContext& ctx, const Scalar& a, const Scalar& b, const Scalar& F0,
                                   const Scalar& G0, long jmax) {
  ResidualReport rep("fg-recurrence",
                     Json{{"a", a.to_string()}, {"b", b.to_string()}, {"F0", F0.to_string()},
                          {"G0", G0.to_string()}, {"jmax", jmax}},
                     ctx.to_json());
  const CoefficientRule m = CoefficientRule::mab(a, b);
  auto c = [&](long n, long k) { return m.coeff(ctx, n, k); };
  auto f = [&](long j) -> std::optional<Scalar> {
    const Scalar d = c(-1, j + 2) * c(-1, j + 1);
    if (d.is_zero()) return std::nullopt;
    return ctx.ratio_pow(3 * j) * F0 / d;
  };
  auto g = [&](long j) -> std::optional<Scalar> {
    const Scalar d = c(1, j - 2) * c(1, j - 1);
    if (d.is_zero()) return std::nullopt;
    return ctx.ratio_pow(3 * j) * G0 / d;
  };
  Json skipped = Json::array();
  for (long j = -jmax; j <= jmax; ++j) {
    const auto fj = f(j), fj1 = f(j - 1);
    if (fj && fj1) {
      rep.record("f-recurrence", {j}, ctx.q_pow(-3) * *fj * c(-1, j + 2) - ctx.p_pow(-3) * *fj1 * c(-1, j));
    } else {
      skipped.push_back(Json{{"identity", "f-recurrence"}, {"j", j}, {"reason", "vanishing denominator"}});
    }
    const auto gj = g(j), gj1 = g(j + 1);
    if (gj && gj1) {
      rep.record("g-recurrence", {j}, ctx.p_pow(3) * *gj1 * c(1, j) - ctx.q_pow(3) * *gj * c(1, j - 2));
    } else {
      skipped.push_back(Json{{"identity", "g-recurrence"}, {"j", j}, {"reason", "vanishing denominator"}});
    }
  }
  if (const auto f0 = f(0)) rep.data()["f0"] = f0->to_string();
  if (const auto g0 = g(0)) rep.data()["g0"] = g0->to_string();
  rep.data()["skipped"] = std::move(skipped);
  return rep;
}

}  // namespace vpq
