#include <doctest.h>

#include "vpq/caseaudit.hpp"

using namespace vpq;

namespace {

Scalar R(const char* s) { return Scalar(parse_rational(s)); }

ScalarContext ctx23() { return ScalarContext::numeric(2, 3); }

}  // namespace

TEST_CASE("annihilator spectrum of L-1") {
  const auto ctx = ctx23();
  const Scalar a = Scalar::variable(Var::a);
  const auto v0 = annihilator_spectrum(ctx, CoefficientRule::mab(a, a * ctx.q()), -1, 6);
  CHECK(v0 == std::vector<long>{0});
  // On M(a, aq) the L-1 coefficients are p^-j [j], so a = -1 adds no second vector.
  CHECK(annihilator_spectrum(ctx, CoefficientRule::mab(-1L, -ctx.q()), -1, 8) == std::vector<long>{0});
  CHECK(annihilator_spectrum(ctx, CoefficientRule::mab(R("1/7"), R("3/7")), -1, 8).size() <= 2);
}

TEST_CASE("quadratic in x") {
  const auto ctx = ctx23();
  CHECK(quadratic_in_x_check(ctx, CoefficientRule::mab(R("1/7"), R("3/7")), 8).ok());
  CHECK(quadratic_in_x_check(ctx, CoefficientRule::mab(0L, 0L), 6).ok());
  const Scalar a = Scalar::variable(Var::a);
  CHECK(quadratic_in_x_check(ScalarContext::symbolic(), CoefficientRule::mab(a, a * Scalar::variable(Var::q)), 5).ok());
  CHECK_THROWS_AS(quadratic_in_x_check(ctx, CoefficientRule::mab(0L, 0L), 3), DomainError);
}

TEST_CASE("j0") {
  const auto ctx = ctx23();
  CHECK(find_j0(ctx, -ctx.p_pow(-1), 8) == -3L);
  CHECK(find_j0(ctx, 0L, 8) == 0L);
  CHECK_FALSE(find_j0(ctx, R("1/7"), 8).has_value());
}

TEST_CASE("case tags") {
  const auto ctx = ctx23();
  CHECK(case_tag(ctx, Scalar(-1L) / (ctx.p() + ctx.q())) == CaseTag::Case2);
  CHECK(case_tag(ctx, -ctx.p_pow(-1)) == CaseTag::Case3);
  CHECK(case_tag(ctx, 0L) == CaseTag::Case4);
  CHECK(case_tag(ctx, 5L) == CaseTag::Case1);
  CHECK(case_name(CaseTag::Case3) == "case3");
}

TEST_CASE("case constants") {
  const auto ctx = ctx23();
  const Scalar a = 5L;
  const CaseConstants c = case_constants(ctx, a, CaseTag::Case1, CaseReading::Adjudicated, 0L);
  CHECK(c.Fc == ctx.p() * ctx.q().inverse() * a);
  CHECK(c.Gc == a + ctx.p_pow(-1));
  const CaseConstants c2 =
      case_constants(ctx, Scalar(-1L) / (ctx.p() + ctx.q()), CaseTag::Case2, CaseReading::Adjudicated, 0L);
  CHECK(c2.H.is_zero());
  CHECK(c2.E * c2.Gc == ctx.p_pow(-2) * ctx.q_pow(2) / pow(ctx.p() + ctx.q(), 2));
  const CaseConstants c3 = case_constants(ctx, -ctx.p_pow(-1), CaseTag::Case3, CaseReading::Adjudicated, R("2/3"));
  CHECK(c3.Gc.is_zero());
  CHECK(c3.D * c3.Fc == ctx.qint(-1));
}

TEST_CASE("case constant audits") {
  const auto ctx = ctx23();
  for (const Scalar& a : {Scalar(5L), Scalar(-1L) / (ctx.p() + ctx.q()), -ctx.p_pow(-1), Scalar(0L)}) {
    const ResidualReport r = case_constants_audit(ctx, a);
    CHECK(r.ok());
    CHECK(r.checked() > 0);
  }
}

TEST_CASE("case audit sections") {
  const auto ctx = ctx23();
  const auto sections = case_audit(ctx, 6);
  REQUIRE(sections.size() == 6);
  CHECK(sections[0].check() == "case1");
  CHECK(sections[5].check() == "caseII-betap");
  for (const auto& s : sections) CHECK(s.ok());
  CHECK(family_consistency(ctx, 6).ok());
}
