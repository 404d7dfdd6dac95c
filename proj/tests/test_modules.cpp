#include <doctest.h>

#include "vpq/modules.hpp"

using namespace vpq;

namespace {

Scalar R(const char* s) { return Scalar(parse_rational(s)); }

ScalarContext ctx23() { return ScalarContext::numeric(2, 3); }

}  // namespace

TEST_CASE("family coefficients") {
  const auto ctx = ctx23();
  const Scalar a = Scalar::variable(Var::a), b = Scalar::variable(Var::b);
  CHECK(CoefficientRule::mab(a, b).coeff(ctx, 0, 0) == -a);
  CHECK(CoefficientRule::mab(a, a * ctx.q()).coeff(ctx, -1, 0).is_zero());
  for (long n = -3; n <= 3; ++n) {
    CHECK(CoefficientRule::exc_alpha(0L).coeff(ctx, n, -1) == ctx.p_pow(-n) * ctx.qint(n));
  }
  const Scalar ap = R("2/5");
  for (long n = -3; n <= 3; ++n) {
    const Scalar expected = ctx.p_pow(n) * ctx.qint(-n) + ctx.p_pow(n) * ctx.q_pow(-n) * ctx.qint(-n) * ctx.qint(n + 1) * ap;
    CHECK(CoefficientRule::exc_alpha_prime(ap).coeff(ctx, n, -n) == expected);
  }
  CHECK(CoefficientRule::exc_alpha_prime(0L).coeff(ctx, 2, -2) == ctx.p_pow(2) * ctx.qint(-2));
}

TEST_CASE("family spec parsing") {
  CHECK(CoefficientRule::parse("mab:a=1/3,b=-2").spec_string() == "mab:a=1/3,b=-2");
  CHECK(CoefficientRule::parse("alpha:α=0").family() == Family::ExcAlpha);
  CHECK(CoefficientRule::parse("alphap:α'=1").family() == Family::ExcAlphaPrime);
  CHECK(CoefficientRule::parse("beta:β=2").family() == Family::ExcBeta);
  CHECK(CoefficientRule::parse("betap:β'=1/2").family() == Family::ExcBetaPrime);
  CHECK_THROWS(CoefficientRule::parse("gamma:x=1"));
  CHECK_THROWS(CoefficientRule::parse("mab:a=1"));
}

TEST_CASE("table rule outside its window") {
  const auto ctx = ctx23();
  const auto t = CoefficientRule::table({{{1, 0}, R("3")}}, 2, 2);
  CHECK(t.coeff(ctx, 1, 0) == R("3"));
  CHECK(t.coeff(ctx, 1, 1).is_zero());
  CHECK_THROWS_AS(t.coeff(ctx, 3, 0), DomainError);
}

TEST_CASE("action on basis vectors") {
  const auto ctx = ctx23();
  CHECK(act(ctx, CoefficientRule::mab(1L, 1L), 1, WindowedVector(4)).is_zero());
  CHECK(act(ctx, CoefficientRule::mab(0L, 0L), 1, WindowedVector::basis(0, 4)).is_zero());
  const WindowedVector v = act(ctx, CoefficientRule::mab(1L, 1L), 1, WindowedVector::basis(1, 4));
  CHECK(v.at(2) == R("-7/4"));
  CHECK(v.entries().size() == 1);
  CHECK_THROWS_AS(act(ctx, CoefficientRule::mab(1L, 1L), 3, WindowedVector::basis(3, 4)), DomainError);
}

TEST_CASE("module relations") {
  const auto ctx = ctx23();
  const auto sym = ScalarContext::symbolic();
  const auto mab = CoefficientRule::mab(Scalar::variable(Var::a), Scalar::variable(Var::b));
  CHECK(relation_residual(ctx, mab, 2, 2, 1).is_zero());
  CHECK(relation_residual(sym, mab, 2, -1, 3).is_zero());
  CHECK(relation_residual(ctx, CoefficientRule::exc_alpha(Scalar::variable(Var::s)), 1, -1, 0).is_zero());
  CHECK(verify_module(ctx, CoefficientRule::mab(R("1/3"), -2L), 4, 8).ok());
  CHECK(verify_module(ctx, CoefficientRule::exc_alpha_prime(0L), 3, 6).ok());
  CHECK(verify_module(ctx, CoefficientRule::exc_beta(R("3/4")), 2, 8, PairFilter::Generators).checked() > 0);
}

TEST_CASE("weights") {
  const auto ctx = ctx23();
  const Scalar a = Scalar::variable(Var::a);
  const auto rule = CoefficientRule::mab(a, Scalar::variable(Var::b));
  CHECK(weight(ctx, rule, 0) == -a);
  CHECK(weight(ctx, rule, 1) == ctx.p_pow(-1) - a * ctx.p_pow(-1) * ctx.q());
  CHECK(weight(ctx, CoefficientRule::mab(1L, 7L), 2) == Scalar(-1L));
  CHECK_FALSE(weight_injective_closed_form(ctx, Scalar(-1L) / (ctx.p() - ctx.q())));
  CHECK(weight_injective_closed_form(ctx, 0L));
  CHECK(weight_injective(ctx, 0L, 10));
}

TEST_CASE("submodules") {
  const auto ctx = ctx23();
  const auto zero = find_submodules(ctx, CoefficientRule::mab(0L, 0L), 5);
  REQUIRE(zero.subsets.size() == 1);
  CHECK(zero.subsets[0] == std::vector<long>{0});

  const long window = 5;
  const auto m1 = find_submodules(ctx, CoefficientRule::mab(R("-1/2"), R("-3/2")), window);
  REQUIRE(m1.subsets.size() == 1);
  std::vector<long> expected;
  for (long k = -window; k <= window; ++k) {
    if (k != -1) expected.push_back(k);
  }
  CHECK(m1.subsets[0] == expected);

  CHECK(find_submodules(ctx, CoefficientRule::mab(R("1/5"), 7L), window).subsets.empty());
}

TEST_CASE("reducibility closed form") {
  const auto ctx = ctx23();
  CHECK(is_reducible_closed_form(ctx, 0L, 0L, 4) == 0L);
  CHECK(is_reducible_closed_form(ctx, R("-1/2"), R("-3/2"), 4) == 1L);
  CHECK_FALSE(is_reducible_closed_form(ctx, R("-1/2"), R("-1/6"), 4).has_value());
  CHECK(find_submodules(ctx, CoefficientRule::mab(R("-1/2"), R("-1/6")), 6).subsets.empty());
  CHECK_THROWS_AS(is_reducible_closed_form(ctx, -1L * (ctx.p() - ctx.q()).inverse(), 0L, 4), DomainError);
}

TEST_CASE("shift and intertwiners") {
  const auto ctx = ctx23();
  const Scalar a = R("2/7"), b = R("-3");
  CHECK(shift_params(ctx, a, b, 0) == std::pair<Scalar, Scalar>{a, b});
  const auto [a1, b1] = shift_params(ctx, 0L, 1L, 1);
  CHECK(a1 == R("1/3"));
  CHECK(b1 == R("2/3"));

  const auto same = find_intertwiner(ctx, CoefficientRule::mab(a, b), CoefficientRule::mab(a, b), 0, 6);
  REQUIRE(same.has_value());
  for (const auto& [k, h] : same->h) CHECK(h.is_one());

  CHECK(find_intertwiner(ctx, CoefficientRule::mab(0L, 1L), CoefficientRule::mab(a1, b1), 1, 8).has_value());
  CHECK_FALSE(find_intertwiner(ctx, CoefficientRule::mab(0L, 1L), CoefficientRule::mab(R("1/5"), R("2/3")), 1, 8)
                  .has_value());
}
