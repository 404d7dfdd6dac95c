#include <doctest.h>

#include "vpq/classify.hpp"
#include "vpq/modules.hpp"

#include <random>

using namespace vpq;

namespace {

Scalar R(const char* s) { return Scalar(parse_rational(s)); }

ScalarContext ctx23() { return ScalarContext::numeric(2, 3); }

int count_true(const std::array<std::array<bool, 4>, 4>& t) {
  int n = 0;
  for (const auto& row : t) {
    for (bool v : row) n += v;
  }
  return n;
}

bool has_finding(const ResidualReport& r, const std::string& id) {
  for (const auto& f : r.findings()) {
    if (f.id == id) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("ell matches the module coefficients") {
  const auto ctx = ctx23();
  const Scalar a = R("1/5"), b = R("2/7");
  const auto rule = CoefficientRule::mab(a, b);
  for (long n : {-2L, -1L, 1L, 2L}) {
    for (long s = -2; s <= 2; ++s) {
      const XPolynomial l = ell(ctx, a, b, n, s);
      for (long j = -3; j <= 3; ++j) {
        const Scalar x = ctx.q_pow(-j) * ctx.qint(j);
        CHECK(l.evaluate(x) == ctx.p_pow(j) * ctx.q_pow(-j) * rule.coeff(ctx, n, j + s));
      }
    }
  }
}

TEST_CASE("degeneracy profile at (5, 0)") {
  const auto ctx = ctx23();
  const DegeneracyProfile prof = degeneracy_profile(ctx, 5L, 0L);
  CHECK(prof.case_tag == "2");
  CHECK(prof.equal[0][0]);
  CHECK(count_true(prof.equal) == 1);
}

TEST_CASE("degeneracy profile at generic points") {
  const auto ctx = ctx23();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5; ++i) {
    const Scalar a(mpq_class(static_cast<long>(rng() % 97) + 3, 11)), b(mpq_class(static_cast<long>(rng() % 89) + 2, 13));
    const DegeneracyProfile prof = degeneracy_profile(ctx, a, b);
    CHECK(prof.case_tag == "1");
    CHECK(count_true(prof.equal) == 0);
  }
  CHECK_THROWS_AS(degeneracy_profile(ctx, Scalar(-1L) / (ctx.p() - ctx.q()), 0L), DomainError);
}

TEST_CASE("degeneracy condition zero line") {
  const auto ctx = ctx23();
  // Solve the (2,1) condition a - b*kappa + 1/(p-q) = 0 for b at a = 1/4.
  const Scalar a = R("1/4");
  const Scalar c0 = degeneracy_condition(ctx, a, 0L, 2, 1);
  const Scalar c1 = degeneracy_condition(ctx, a, 1L, 2, 1);
  const Scalar b = -c0 / (c1 - c0);
  CHECK(degeneracy_condition(ctx, a, b, 2, 1).is_zero());
  const DegeneracyProfile prof = degeneracy_profile(ctx, a, b);
  CHECK(prof.equal[1][0]);
  CHECK(prof.condition[1][0]);
}

TEST_CASE("degeneracy table") {
  const auto ctx = ctx23();
  const ResidualReport r = degeneracy_table_check(ctx);
  CHECK(r.checked() == 16);
  CHECK(has_finding(r, "condition-typo"));
  // Row (1,2) has no consistent reading of its printed condition.
  REQUIRE(r.failures().size() == 1);
  CHECK(r.failures()[0].indices == std::vector<long>{1, 2});
}

TEST_CASE("identity audit") {
  const auto ctx = ctx23();
  const Scalar a = Scalar::variable(Var::a), b = Scalar::variable(Var::b);
  const ResidualReport r = identity_audit(ctx, a, b, 3);
  CHECK(r.ok());
  CHECK(r.checked() > 0);
  CHECK_FALSE(r.findings().empty());
  CHECK(identity_audit(ctx, a, b, 3).to_json() == r.to_json());
  CHECK(identity_audit(ctx, R("1/5"), R("2/7"), 3).ok());
}

TEST_CASE("gauge data") {
  const auto ctx = ctx23();
  const auto g = gauge_data(ctx, R("1/5"), R("2/7"));
  REQUIRE(g.has_value());
  CHECK(g->F == -ctx.p_pow(-6) * ctx.q_pow(6) * g->G);
  CHECK(g->b_partner == quadratic_roots(ctx, R("1/5"), R("2/7")).root2);
}

TEST_CASE("second solution") {
  const auto ctx = ctx23();
  CHECK(second_solution(ctx, 0L, 0L) == Scalar(1L));
  const Scalar b = Scalar::variable(Var::b);
  CHECK(second_solution(ctx, 2L, b) == Scalar(3L) - b);
  const Scalar a = R("1/5");
  const QuadraticRoots roots = quadratic_roots(ctx, a, R("2/7"));
  CHECK(roots.root1 == R("2/7"));
  CHECK(roots.quadratic.evaluate(roots.root1) == roots.quadratic.evaluate(roots.root2));
  CHECK(roots.root1 + roots.root2 == roots.root_sum);
  CHECK(quadratic_roots(ctx, a, roots.root2).root2 == roots.root1);
  CHECK(second_solution_audit(ctx, Scalar::variable(Var::a), b, 5, 4).ok());
}

TEST_CASE("L2 coefficients") {
  const auto ctx = ctx23();
  const auto [c2, cm2] = l2_coefficients(ctx, R("1/5"), R("1/7"), 0);
  CHECK(c2.is_rational());
  CHECK(cm2.is_rational());
  CHECK_THROWS_AS(l2_coefficients(ctx, 0L, -1L, 0), DomainError);
  const ResidualReport r = l2_gauge_audit(ctx, R("1/5"), R("1/7"), 3);
  CHECK(r.data().contains("products"));
}

TEST_CASE("f and g recurrences") {
  const auto ctx = ctx23();
  const Scalar a = R("1/5"), b = R("1/7");
  CHECK(fg_recurrence_audit(ctx, a, b, 1L, 1L, 6).ok());
  CHECK(fg_recurrence_audit(ctx, a, b, 0L, 1L, 6).ok());
  CHECK(fg_recurrence_audit(ctx, a, b, 1L, 0L, 6).ok());
}
