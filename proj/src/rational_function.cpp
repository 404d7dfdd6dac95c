#include "vpq/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace vpq {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1L) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

RationalFunction::RationalFunction(const mpq_class& c)
    : num_(Polynomial(mpz_class(c.get_num()))), den_(Polynomial(mpz_class(c.get_den()))) {}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1L);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (!(g.is_constant() && g.constant_value() == 1)) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  if (den_.sign_of_leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

mpq_class RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of non-constant rational function");
  mpq_class r(num_.constant_value(), den_.constant_value());
  r.canonicalize();
  return r;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Canonical{}); }

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den_ == y.den_) return RationalFunction(x.num_ + y.num_, x.den_);
  // Henrici: only the gcd of the denominators can reappear in the sum.
  const Polynomial d = gcd(x.den_, y.den_);
  if (d.is_constant() && d.constant_value() == 1) {
    Polynomial n = x.num_ * y.den_ + y.num_ * x.den_;
    if (n.is_zero()) return {};
    return RationalFunction(std::move(n), x.den_ * y.den_, RationalFunction::Canonical{});
  }
  const Polynomial xd = exact_divide(x.den_, d);
  const Polynomial yd = exact_divide(y.den_, d);
  return RationalFunction(x.num_ * yd + y.num_ * xd, xd * y.den_);
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) { return x + (-y); }

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const Polynomial g1 = gcd(x.num_, y.den_);
  const Polynomial g2 = gcd(y.num_, x.den_);
  Polynomial n = exact_divide(x.num_, g1) * exact_divide(y.num_, g2);
  Polynomial d = exact_divide(x.den_, g2) * exact_divide(y.den_, g1);
  if (d.sign_of_leading() < 0) {
    n = -n;
    d = -d;
  }
  return RationalFunction(std::move(n), std::move(d), RationalFunction::Canonical{});
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
  if (num_.sign_of_leading() < 0) return RationalFunction(-den_, -num_, Canonical{});
  return RationalFunction(den_, num_, Canonical{});
}

RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) { return x * y.inverse(); }

RationalFunction substitute(const Polynomial& poly, const std::map<Var, mpq_class>& values) {
  // Clear denominators variable by variable: sum c * prod v^e with v = n/d.
  std::array<unsigned, kNumVars> maxdeg{};
  for (const auto& [v, val] : values) maxdeg[static_cast<std::size_t>(v)] = poly.degree(v);
  mpz_class common = 1;
  for (const auto& [v, val] : values) {
    mpz_class dpow;
    mpz_pow_ui(dpow.get_mpz_t(), val.get_den_mpz_t(), maxdeg[static_cast<std::size_t>(v)]);
    common *= dpow;
  }
  Polynomial out;
  for (const auto& t : poly.terms()) {
    mpz_class c = t.coeff * common;
    Exponents e = t.exp;
    for (const auto& [v, val] : values) {
      const auto i = static_cast<std::size_t>(v);
      mpz_class np, dp;
      mpz_pow_ui(np.get_mpz_t(), val.get_num_mpz_t(), e[i]);
      mpz_pow_ui(dp.get_mpz_t(), val.get_den_mpz_t(), e[i]);
      c *= np;
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), dp.get_mpz_t());
      e[i] = 0;
    }
    out += Polynomial::monomial(e, c);
  }
  return RationalFunction(std::move(out), Polynomial(common));
}

RationalFunction RationalFunction::substitute(const std::map<Var, mpq_class>& values) const {
  const RationalFunction n = vpq::substitute(num_, values);
  const RationalFunction d = vpq::substitute(den_, values);
  if (d.is_zero()) throw std::domain_error("substitution makes the denominator vanish");
  return n / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
  const std::string n = num_.to_string();
  const std::string d = den_.to_string();
  const bool wrap_n = num_.terms().size() > 1;
  const bool wrap_d = d.find_first_of(" *") != std::string::npos;
  return (wrap_n ? "(" + n + ")" : n) + "/" + (wrap_d ? "(" + d + ")" : d);
}

}  // namespace vpq
