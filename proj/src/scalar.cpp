#include "vpq/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace vpq {

namespace {

Scalar demote(RationalFunction f) {
  if (f.is_constant()) return Scalar(f.constant_value());
  return Scalar(std::move(f));
}

}  // namespace

Scalar::Scalar(mpq_class r) : v_(std::move(r)) { std::get<mpq_class>(v_).canonicalize(); }

Scalar::Scalar(RationalFunction f) {
  if (f.is_constant()) {
    v_ = f.constant_value();
  } else {
    v_ = std::move(f);
  }
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) throw std::invalid_argument("malformed rational: " + s);
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw std::invalid_argument("malformed rational: " + s);
    }
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const mpq_class& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negate = false;
  if (!body.empty() && body.front() == '-') {
    negate = true;
    body.remove_prefix(1);
  }
  for (Var v : kAllVars) {
    if (body == var_name(v)) return negate ? -variable(v) : variable(v);
  }
  return Scalar(parse_rational(text));
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) throw DomainError("scalar is not a rational number: " + to_string());
  return std::get<mpq_class>(v_);
}

RationalFunction Scalar::as_function() const {
  if (is_rational()) return RationalFunction(std::get<mpq_class>(v_));
  return std::get<RationalFunction>(v_);
}

bool Scalar::is_zero() const { return is_rational() && std::get<mpq_class>(v_) == 0; }

bool Scalar::is_one() const { return is_rational() && std::get<mpq_class>(v_) == 1; }

bool Scalar::involves(Var v) const { return !is_rational() && std::get<RationalFunction>(v_).involves(v); }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
  return Scalar(-std::get<RationalFunction>(v_));
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.rational() + y.rational()));
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  return demote(x.as_function() + y.as_function());
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.rational() - y.rational()));
  if (y.is_zero()) return x;
  return demote(x.as_function() - y.as_function());
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.rational() * y.rational()));
  if (x.is_zero() || y.is_zero()) return Scalar();
  if (x.is_one()) return y;
  if (y.is_one()) return x;
  return demote(x.as_function() * y.as_function());
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) throw DomainError("division by zero");
  if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.rational() / y.rational()));
  if (x.is_zero()) return Scalar();
  if (y.is_one()) return x;
  return demote(x.as_function() / y.as_function());
}

Scalar Scalar::inverse() const { return Scalar(1L) / *this; }

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.is_rational() != y.is_rational()) return false;
  if (x.is_rational()) return x.rational() == y.rational();
  return std::get<RationalFunction>(x.v_) == std::get<RationalFunction>(y.v_);
}

Scalar Scalar::substitute(const std::map<Var, mpq_class>& values) const {
  if (is_rational()) return *this;
  try {
    return demote(std::get<RationalFunction>(v_).substitute(values));
  } catch (const std::domain_error& e) {
    throw DomainError(e.what());
  }
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational_to_string(std::get<mpq_class>(v_));
  return std::get<RationalFunction>(v_).to_string();
}

Scalar pow(const Scalar& base, long n) {
  if (n < 0) {
    if (base.is_zero()) throw DomainError("zero raised to a negative power");
    return pow(base.inverse(), -n);
  }
  if (base.is_rational()) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.rational().get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(r.get_den_mpz_t(), base.rational().get_den_mpz_t(), static_cast<unsigned long>(n));
    return Scalar(r);
  }
  const RationalFunction f = base.as_function();
  return Scalar(RationalFunction(vpq::pow(f.num(), static_cast<unsigned>(n)), vpq::pow(f.den(), static_cast<unsigned>(n))));
}

}  // namespace vpq
