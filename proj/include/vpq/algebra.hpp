#pragma once

#include "vpq/context.hpp"
#include "vpq/report.hpp"

#include <map>
#include <string>

namespace vpq {

/// Finite combination sum c_n L_n + z C with no stored zero coefficients.
class AlgebraElement {
public:
  AlgebraElement() = default;
  static AlgebraElement generator(long n, Scalar coeff = Scalar(1L));
  static AlgebraElement central(Scalar coeff = Scalar(1L));

  const std::map<long, Scalar>& terms() const { return terms_; }
  const Scalar& central_part() const { return central_; }
  Scalar coefficient(long n) const;

  bool is_zero() const { return terms_.empty() && central_.is_zero(); }
  bool centerless_zero() const { return terms_.empty(); }
  AlgebraElement centerless() const;

  void add_term(long n, const Scalar& c);
  void add_central(const Scalar& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x += y.scaled(Scalar(-1L)); }
  AlgebraElement scaled(const Scalar& c) const;

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.terms_ == y.terms_ && x.central_ == y.central_;
  }

  /// "c·L[n] + ... + z·C" in ascending n; "0" when empty.
  std::string to_string() const;

private:
  std::map<long, Scalar> terms_;
  Scalar central_;
};

/// Coefficient of C in [L_n, L_-n]. Throws DomainError when 1 + (q/p)^n = 0.
Scalar central_coefficient(const ScalarContext& ctx, long n);

AlgebraElement bracket(const ScalarContext& ctx, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement bracket_generators(const ScalarContext& ctx, long n, long m);

/// The twist L_n -> (1 + (q/p)^n) L_n, C -> C.
AlgebraElement hom_twist(const ScalarContext& ctx, const AlgebraElement& x);

AlgebraElement hom_jacobi_residual(const ScalarContext& ctx, long k, long l, long m);
AlgebraElement skew_residual(const ScalarContext& ctx, long n, long m);

/// Pascal [m+n] = p^m [n] + q^n [m] and reflection [-n] = -(pq)^-n [n] for
/// |m|, |n| <= window.
ResidualReport qint_identities(const ScalarContext& ctx, long window);

/// Derives every L_n with |n| <= window from L_{+-1}, L_{+-2} by brackets.
ResidualReport generation_check(const ScalarContext& ctx, long window);

/// Skew-symmetry and Hom-Jacobi over |k|,|l|,|m| <= window. The central part
/// of Hom-Jacobi is observed for k + l + m = 0.
ResidualReport verify_algebra(const ScalarContext& ctx, long window);

}  // namespace vpq
