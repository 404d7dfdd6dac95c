#include <doctest.h>

#include "vpq/algebra.hpp"

using namespace vpq;

namespace {

Scalar R(const char* s) { return Scalar(parse_rational(s)); }

ScalarContext ctx23() { return ScalarContext::numeric(2, 3); }

}  // namespace

TEST_CASE("bracket of a generator with itself vanishes") {
  const auto ctx = ctx23();
  for (long n = -4; n <= 4; ++n) CHECK(bracket_generators(ctx, n, n).is_zero());
}

TEST_CASE("bracket L1 L-1") {
  const auto ctx = ctx23();
  const AlgebraElement r = bracket_generators(ctx, 1, -1);
  CHECK(r.coefficient(0) == R("5/6"));
  CHECK(r.central_part().is_zero());
  CHECK(r.terms().size() == 1);
}

TEST_CASE("bracket L2 L-2 carries the central coefficient") {
  const auto ctx = ctx23();
  const AlgebraElement r = bracket_generators(ctx, 2, -2);
  CHECK(r.coefficient(0) == ctx.w(2) - ctx.w(-2));
  CHECK(r.central_part() == central_coefficient(ctx, 2));
  CHECK_FALSE(r.central_part().is_zero());
}

TEST_CASE("central coefficient") {
  const auto ctx = ctx23();
  CHECK(central_coefficient(ctx, 0).is_zero());
  CHECK(central_coefficient(ctx, 1).is_zero());
  const Scalar r = ctx.ratio_pow(1);
  const Scalar expected =
      pow(r, -2) / (Scalar(6L) * (Scalar(1L) + r * r)) * ctx.w(1) * ctx.w(2) * ctx.w(3);
  CHECK(central_coefficient(ctx, 2) == expected);
  for (long n = 1; n <= 5; ++n) CHECK(central_coefficient(ctx, -n) == -central_coefficient(ctx, n));
  // 1 + (q/p)^n = 0 needs q = -p, which the context guards already reject.
  CHECK_THROWS_AS(ScalarContext::numeric(2, -2), DomainError);
}

TEST_CASE("hom twist") {
  const auto ctx = ctx23();
  CHECK(hom_twist(ctx, AlgebraElement::generator(0)) == AlgebraElement::generator(0, 2L));
  CHECK(hom_twist(ctx, AlgebraElement::central()) == AlgebraElement::central());
  CHECK(hom_twist(ctx, AlgebraElement::generator(1)) == AlgebraElement::generator(1, R("5/2")));
}

TEST_CASE("Hom-Jacobi residuals") {
  const auto ctx = ctx23();
  CHECK(hom_jacobi_residual(ctx, 1, 1, 1).is_zero());
  CHECK(hom_jacobi_residual(ctx, 1, 2, 3).centerless_zero());
  CHECK(hom_jacobi_residual(ctx, 1, 2, -3).centerless_zero());
  const auto sym = ScalarContext::symbolic();
  CHECK(hom_jacobi_residual(sym, 2, -1, 3).centerless_zero());
}

TEST_CASE("skew residuals") {
  const auto ctx = ctx23();
  CHECK(skew_residual(ctx, 3, 3).is_zero());
  CHECK(skew_residual(ctx, 2, -2).is_zero());
  CHECK(skew_residual(ctx, 1, 4).is_zero());
}

TEST_CASE("algebra sweeps") {
  for (const auto& ctx : {ctx23(), ScalarContext::numeric(R("1/2").rational(), 5), ScalarContext::numeric(-3, 7)}) {
    CHECK(verify_algebra(ctx, 4).ok());
    CHECK(qint_identities(ctx, 6).ok());
  }
  CHECK(generation_check(ctx23(), 2).ok());
  CHECK(generation_check(ctx23(), 6).ok());
  CHECK(generation_check(ScalarContext::symbolic(), 4).ok());
}
