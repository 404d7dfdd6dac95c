#include <doctest.h>

#include "vpq/uqsl2.hpp"

using namespace vpq;

namespace {

Scalar R(const char* s) { return Scalar(parse_rational(s)); }

}  // namespace

TEST_CASE("one-parameter quantum integers") {
  const Scalar q = R("2");
  CHECK(one_param_qint(q, 0).is_zero());
  CHECK(one_param_qint(q, 1).is_one());
  CHECK(one_param_qint(q, 2) == q + q.inverse());
  CHECK(one_param_qint(q, 3) == R("21/4"));
  CHECK_THROWS_AS(one_param_qint(R("-1"), 2), DomainError);
  CHECK_THROWS_AS(one_param_qint(R("0"), 2), DomainError);
  const Scalar s = Scalar::variable(Var::q);
  CHECK(one_param_qint(s, 2) == s + s.inverse());
}

TEST_CASE("eigenvalues and products") {
  const Uqsl2Rep plus(1, 2, R("2"));
  const Uqsl2Rep minus(-1, 2, R("2"));
  CHECK(k_eigenvalue(plus, 0).is_one());
  CHECK(k_eigenvalue(minus, 2) == R("-4"));
  CHECK(fe_coefficient(plus, 2).is_zero());
  CHECK(ef_coefficient(plus, -2).is_zero());
  CHECK(fe_coefficient(plus, 0) == R("5/2"));
  CHECK_THROWS_AS(k_eigenvalue(plus, 1), DomainError);
  CHECK_THROWS_AS(fe_coefficient(plus, 4), DomainError);
  CHECK_THROWS_AS(Uqsl2Rep(2, 2, R("2")), DomainError);
  CHECK_THROWS_AS(Uqsl2Rep(1, -1, R("2")), DomainError);
  CHECK_THROWS_AS(Uqsl2Rep(1, 2, R("1")), DomainError);
}

TEST_CASE("fe and ef reflect") {
  const Uqsl2Rep r(-1, 5, R("3/7"));
  for (long m : r.weights()) CHECK(fe_coefficient(r, m) == ef_coefficient(r, -m));
}

TEST_CASE("relations for two_l up to 8") {
  for (const char* q : {"2", "-3/5", "7/2"}) {
    for (int omega : {1, -1}) {
      for (long two_l = 0; two_l <= 8; ++two_l) {
        const ResidualReport r = rep_relation_audit(Uqsl2Rep(omega, two_l, R(q)));
        CHECK(r.ok());
        CHECK(r.checked() > 0);
      }
    }
  }
  CHECK(rep_relation_audit(Uqsl2Rep(1, 3, Scalar::variable(Var::q))).ok());
}

TEST_CASE("quadratic fit in x") {
  for (long two_l : {4L, 6L, 8L}) {
    for (int omega : {1, -1}) {
      const ResidualReport r = quadratic_in_x_fit(Uqsl2Rep(omega, two_l, R("2")));
      CHECK(r.ok());
      CHECK(r.checked() == two_l - 2);
      CHECK(r.findings().empty());
    }
  }
  const ResidualReport trivial = quadratic_in_x_fit(Uqsl2Rep(1, 2, R("2")));
  REQUIRE(trivial.findings().size() == 1);
  CHECK(trivial.findings()[0].id == "trivial fit");
}
