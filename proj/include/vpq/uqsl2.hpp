#pragma once

#include "vpq/report.hpp"
#include "vpq/scalar.hpp"

#include <vector>

namespace vpq {

/// (q^n - q^-n)/(q - q^-1). Throws DomainError when q = 0 or q^2 = 1.
Scalar one_param_qint(const Scalar& q, long n);

/// The (two_l + 1)-dimensional representation with K e_m = omega q^2m e_m.
/// Weights are passed doubled: two_m in {-two_l, -two_l + 2, ..., two_l}.
class Uqsl2Rep {
public:
  /// Throws DomainError for omega not +-1, two_l < 0, q = 0 or q^2 = 1.
  Uqsl2Rep(int omega, long two_l, Scalar q);

  int omega() const { return omega_; }
  long two_l() const { return two_l_; }
  const Scalar& q() const { return q_; }
  std::vector<long> weights() const;
  bool valid_weight(long two_m) const;

private:
  int omega_;
  long two_l_;
  Scalar q_;
};

/// omega q^2m. Throws DomainError for an invalid weight.
Scalar k_eigenvalue(const Uqsl2Rep& rep, long two_m);
/// omega [l-m][l+m+1], the eigenvalue of FE on e_m.
Scalar fe_coefficient(const Uqsl2Rep& rep, long two_m);
/// omega [l+m][l-m+1], the eigenvalue of EF on e_m.
Scalar ef_coefficient(const Uqsl2Rep& rep, long two_m);

/// EF - FE = (K - K^-1)/(q - q^-1) and k(m+1) = q^2 k(m) on every weight.
ResidualReport rep_relation_audit(const Uqsl2Rep& rep);

/// q^-2m fe(m) against a quadratic in x = q^-m [m] fitted through the three
/// lowest weights. Fewer than four weights is flagged as a trivial fit.
ResidualReport quadratic_in_x_fit(const Uqsl2Rep& rep);

}  // namespace vpq
