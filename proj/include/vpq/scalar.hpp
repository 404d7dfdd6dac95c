#pragma once

#include "vpq/rational_function.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace vpq {

/// Raised when an operation leaves its mathematical domain (division by a
/// vanishing quantity, index outside a window, violated precondition).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exact scalar: a rational number or a rational function in p, q, a, b, s.
/// Rational functions that reduce to constants are stored as rationals, so
/// equality is structural.
class Scalar {
public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(long n) : v_(mpq_class(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class r);                   // NOLINT(google-explicit-constructor)
  Scalar(RationalFunction f);            // NOLINT(google-explicit-constructor)

  static Scalar variable(Var v) { return Scalar(RationalFunction::variable(v)); }
  /// Accepts "num/den", integers, and variable names (optionally negated).
  static Scalar parse(std::string_view text);

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const;
  RationalFunction as_function() const;

  bool is_zero() const;
  bool is_one() const;
  bool involves(Var v) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  /// Throws DomainError on division by zero.
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar inverse() const;

  friend bool operator==(const Scalar& x, const Scalar& y);

  Scalar substitute(const std::map<Var, mpq_class>& values) const;

  std::string to_string() const;

private:
  std::variant<mpq_class, RationalFunction> v_;
};

/// Integer power; negative exponents invert. Zero to a negative power throws.
Scalar pow(const Scalar& base, long n);

std::string rational_to_string(const mpq_class& r);
/// Parses "num/den" or an integer; throws std::invalid_argument.
mpq_class parse_rational(std::string_view text);

}  // namespace vpq
