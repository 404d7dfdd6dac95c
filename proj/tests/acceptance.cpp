// Acceptance run: one PASS/FAIL line per criterion.
#include "vpq/algebra.hpp"
#include "vpq/caseaudit.hpp"
#include "vpq/classify.hpp"
#include "vpq/modules.hpp"
#include "vpq/sampling.hpp"
#include "vpq/suite.hpp"
#include "vpq/uqsl2.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace vpq;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
  void expect(const ResidualReport& r, const std::string& label) {
    if (r.ok()) return;
    const auto& f = r.failures().front();
    fail(label + ": " + std::to_string(r.failed()) + " failures, first " + f.identity + " " +
         indices_json(f.indices).dump() + " = " + f.residual);
  }
};

ScalarContext ctx23() { return ScalarContext::numeric(2, 3); }

std::vector<ScalarContext> three_points() {
  return {ctx23(), ScalarContext::numeric(mpq_class(1, 2), 5), ScalarContext::numeric(-3, mpq_class(7, 4))};
}

Scalar R(const char* s) { return Scalar(parse_rational(s)); }

bool has_claim(const ResidualReport& r, const std::string& id) {
  return r.data().contains("claims") && r.data()["claims"].contains(id);
}

Outcome c1() {
  Outcome o;
  for (const auto& ctx : three_points()) o.expect(qint_identities(ctx, 20), "numeric");
  o.expect(qint_identities(ScalarContext::symbolic(), 20), "symbolic");
  return o;
}

Outcome c2() {
  Outcome o;
  for (const auto& ctx : three_points()) {
    const ResidualReport r = verify_algebra(ctx, 8);
    o.expect(r, "algebra");
    o.expect(r.data().value("central_cocycle_triples", 0L) > 0, "central residuals not recorded");
  }
  return o;
}

Outcome c3() {
  Outcome o;
  const auto ctx = ctx23();
  const ResidualReport r =
      run_check(ctx, CheckSpec{"mab-sweep", Json{{"samples", 5}, {"nmax", 6}, {"kmax", 10}, {"symbolic", true}}}, 3);
  o.expect(r, "mab-sweep");
  o.expect(r.data()["rules"].size() == 6, "expected 5 seeded rules and the symbolic one");
  return o;
}

Outcome c4() {
  Outcome o;
  const ResidualReport r =
      run_check(ctx23(), CheckSpec{"iso-sweep", Json{{"samples", 10}, {"mmax", 4}, {"window", 8}}}, 4);
  o.expect(r, "iso-sweep");
  o.expect(r.checked() == 20, "expected 20 pairs");
  return o;
}

Outcome c5() {
  Outcome o;
  const ResidualReport r = run_check(ctx23(), CheckSpec{"reducibility-grid", Json{{"mmax", 4}, {"window", 8}}}, 5);
  o.expect(r, "reducibility-grid");
  long adjudications = 0;
  for (const auto& f : r.findings()) adjudications += f.id == "exponent-adjudication";
  o.expect(adjudications == 8, "expected one adjudication finding per m != 0");
  return o;
}

Outcome c6() {
  Outcome o;
  for (const auto& ctx : three_points()) {
    const ResidualReport r = degeneracy_table_check(ctx);
    o.expect(r.checked() == 16, "expected 16 equivalences");
    o.expect(r, "degeneracy-table at p=" + ctx.p().to_string() + ", q=" + ctx.q().to_string());
  }
  return o;
}

Outcome c7() {
  Outcome o;
  const auto ctx = ctx23();
  const Scalar a = Scalar::variable(Var::a), b = Scalar::variable(Var::b);
  const ResidualReport r = identity_audit(ctx, a, b, 7);
  o.expect(r, "identity audit");
  for (const char* id : {"D_F-constant", "D_G-constant-typeset", "D_G-constant-derived", "f5-degree-typeset",
                         "F-G-relation-typeset", "F-G-relation-derived", "product-identity-typeset"}) {
    o.expect(has_claim(r, id), std::string("missing claim ") + id);
  }
  o.expect(identity_audit(ctx, a, b, 7).to_json().dump() == r.to_json().dump(), "audit not deterministic");
  return o;
}

Outcome c8() {
  Outcome o;
  const auto ctx = ctx23();
  o.expect(verify_module(ctx, CoefficientRule::exc_alpha(0L), 5, 8), "alpha=0");
  o.expect(verify_module(ctx, CoefficientRule::exc_beta_prime(0L), 5, 8), "beta'=0");
  std::mt19937_64 rng(8);
  for (int i = 0; i < 3; ++i) {
    Scalar s(seeded_rational(rng));
    if (s.is_zero()) s = Scalar(1L);
    o.expect(verify_module(ctx, CoefficientRule::exc_alpha(s), 2, 8, PairFilter::Generators), "alpha");
    o.expect(verify_module(ctx, CoefficientRule::exc_alpha_prime(s), 2, 8, PairFilter::Generators), "alpha'");
    o.expect(verify_module(ctx, CoefficientRule::exc_beta(s), 2, 8, PairFilter::Generators), "beta");
    // Printed beta' rule: residuals must be exact and pinpointed; the adjudicated rule must pass.
    const ResidualReport typeset = verify_module(ctx, CoefficientRule::exc_beta_prime(s), 2, 8, PairFilter::Generators);
    for (const auto& f : typeset.failures()) {
      o.expect(!f.indices.empty() && !f.residual.empty() && f.residual.find('.') == std::string::npos,
               "beta' residual not pinpointed");
    }
    o.expect(verify_module(ctx, CoefficientRule::exc_beta_prime(s, true), 2, 8, PairFilter::Generators),
             "beta' adjudicated");
  }
  return o;
}

Outcome c9() {
  Outcome o;
  const auto ctx = ctx23();
  for (const Scalar& a : {Scalar(5L), Scalar(-1L) / (ctx.p() + ctx.q()), -ctx.p_pow(-1), Scalar(0L)}) {
    o.expect(case_constants_audit(ctx, a), "case constants at a=" + a.to_string());
  }
  o.expect(find_j0(ctx, -ctx.p_pow(-1), 8) == -3L, "j0 at a=-1/p");
  o.expect(find_j0(ctx, 0L, 8) == 0L, "j0 at a=0");
  return o;
}

Outcome c10() {
  Outcome o;
  for (const char* q : {"2", "-3/5", "7/2"}) {
    for (int omega : {1, -1}) {
      for (long two_l = 0; two_l <= 8; ++two_l) o.expect(rep_relation_audit(Uqsl2Rep(omega, two_l, R(q))), "relations");
      for (long two_l : {4L, 6L, 8L}) {
        const ResidualReport r = quadratic_in_x_fit(Uqsl2Rep(omega, two_l, R(q)));
        o.expect(r, "uqsl2 fit");
        o.expect(r.findings().empty(), "uqsl2 fit flagged");
      }
    }
  }
  const auto ctx = ctx23();
  const Scalar a = Scalar::variable(Var::a);
  o.expect(quadratic_in_x_check(ctx, CoefficientRule::mab(a, a * ctx.q()), 8), "symbolic a");
  o.expect(quadratic_in_x_check(ctx, CoefficientRule::mab(R("1/7"), R("3/7")), 8), "a=1/7");
  return o;
}

Outcome c11(const std::string& suite_path) {
  Outcome o;
  const SuiteConfig cfg = load_suite_config(suite_path);
  const std::string first = run_suite(cfg).report.dump(2);
  const std::string second = run_suite(cfg).report.dump(2);
  o.expect(first == second, "suite output differs between runs");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <suite.json>\n";
    return 2;
  }
  const std::string suite = argv[1];
  struct Criterion {
    int id;
    const char* title;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "quantum-integer identities", 1, c1},
      {2, "algebra axioms", 10, c2},
      {3, "M(a,b) module relations", 30, c3},
      {4, "isomorphism criterion", 0, c4},
      {5, "reducibility adjudication", 0, c5},
      {6, "degeneracy equivalences", 0, c6},
      {7, "identity audit", 0, c7},
      {8, "exceptional families", 0, c8},
      {9, "case audit", 0, c9},
      {10, "U_q(sl2) and quadratic-in-x", 0, c10},
      {11, "suite determinism", 120, [&] { return c11(suite); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs >= c.budget) o.fail("over the " + std::to_string(static_cast<int>(c.budget)) + " s budget");
    char line[160];
    std::snprintf(line, sizeof line, "%s criterion %2d  %-30s %8.3f s", o.ok ? "PASS" : "FAIL", c.id, c.title, secs);
    std::cout << line;
    if (!o.ok) std::cout << "  " << o.note;
    std::cout << "\n";
    failed += !o.ok;
  }
  std::cout << (11 - failed) << "/11 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
