#pragma once

#include "vpq/report.hpp"
#include "vpq/scalar.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace vpq {

/// Dense polynomial in the spectral variable x with scalar coefficients,
/// ascending degree, no trailing zeros.
class XPolynomial {
public:
  XPolynomial() = default;
  explicit XPolynomial(std::vector<Scalar> coeffs);
  static XPolynomial constant(const Scalar& c);
  /// x + c
  static XPolynomial monic_linear(const Scalar& c);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int d) const;
  Scalar leading() const { return is_zero() ? Scalar() : coeffs_.back(); }

  XPolynomial operator-() const;
  friend XPolynomial operator+(const XPolynomial& x, const XPolynomial& y);
  friend XPolynomial operator-(const XPolynomial& x, const XPolynomial& y);
  friend XPolynomial operator*(const XPolynomial& x, const XPolynomial& y);
  friend XPolynomial operator*(const Scalar& c, const XPolynomial& y);
  friend bool operator==(const XPolynomial& x, const XPolynomial& y) { return x.coeffs_ == y.coeffs_; }

  Scalar evaluate(const Scalar& x) const;
  XPolynomial map(const std::function<Scalar(const Scalar&)>& f) const;

  /// Ordered coefficient list of scalar strings.
  Json to_json() const;

private:
  std::vector<Scalar> coeffs_;
  void trim();
};

/// Lagrange interpolation through distinct nodes.
XPolynomial interpolate(const std::vector<std::pair<Scalar, Scalar>>& points);

}  // namespace vpq
