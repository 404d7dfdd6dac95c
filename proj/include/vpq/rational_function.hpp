#pragma once

#include "vpq/polynomial.hpp"

#include <gmpxx.h>

#include <map>
#include <string>

namespace vpq {

/// Quotient num/den of polynomials in lowest terms. The denominator has a
/// positive leading coefficient and is never zero.
class RationalFunction {
public:
  RationalFunction() : den_(1L) {}
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(const mpq_class& c);

  static RationalFunction variable(Var v) { return RationalFunction(Polynomial::variable(v)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class constant_value() const;
  bool involves(Var v) const { return num_.involves(v) || den_.involves(v); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y);
  RationalFunction inverse() const;

  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  /// Substitute rational values for some variables.
  RationalFunction substitute(const std::map<Var, mpq_class>& values) const;

  std::string to_string() const;

private:
  Polynomial num_;
  Polynomial den_;

  struct Canonical {};
  RationalFunction(Polynomial num, Polynomial den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();
};

/// Evaluate a polynomial at rational values; variables absent from the map
/// stay symbolic. Returned as num/den to keep the result exact.
RationalFunction substitute(const Polynomial& poly, const std::map<Var, mpq_class>& values);

}  // namespace vpq
