#pragma once

#include "vpq/context.hpp"
#include "vpq/report.hpp"
#include "vpq/xpolynomial.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vpq {

/// Typeset: the linear factors exactly as printed. Derived: every factor is
/// l(n,s) below; the two lists differ only in g2.
enum class Reading { Typeset, Derived };

std::string reading_name(Reading r);

/// l(n,s) = x + p^-s [s] - a p^-s q^s - b p^-s-n q^s [n], where
/// p^j q^-j c(n, j+s) = l(n,s) at x = q^-j [j] for the M_{a,b} coefficients.
XPolynomial ell(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long n, long s);

struct FGPolynomials {
  std::array<XPolynomial, 4> f;
  std::array<XPolynomial, 4> g;
};

FGPolynomials fgi_polynomials(const ScalarContext& ctx, const Scalar& a, const Scalar& b,
                              Reading reading = Reading::Typeset);

/// Left side minus right side of the printed linear condition for f_i = g_j
/// (1-based): b for (1,1), otherwise a - b*kappa + 1/(p-q).
Scalar degeneracy_condition(const ScalarContext& ctx, const Scalar& a, const Scalar& b, int i, int j);

struct DegeneracyProfile {
  /// equal[i][j]: f_{i+1} = g_{j+1} literally, derived factors.
  std::array<std::array<bool, 4>, 4> equal{};
  /// condition[i][j]: the printed linear condition holds.
  std::array<std::array<bool, 4>, 4> condition{};
  /// "1".."4", or "unlisted" when the true pairs match none of the four cases.
  std::string case_tag;
  std::vector<Finding> findings;

  Json to_json() const;
};

/// Throws DomainError when a = -1/(p-q).
DegeneracyProfile degeneracy_profile(const ScalarContext& ctx, const Scalar& a, const Scalar& b);

/// All 16 equivalences with symbolic a, b: proportionality of f_i - g_j and
/// the condition, plus one point on each zero line checked against the other.
ResidualReport degeneracy_table_check(const ScalarContext& ctx);

/// Gauge oracle: f(0), g(0) of the module M_{a,b} rewritten in the basis of
/// M_{a,b''}, with b'' the second root of the quadratic.
struct GaugeData {
  Scalar b_partner;
  Scalar f0;
  Scalar g0;
  Scalar F;
  Scalar G;
};

/// nullopt when a normalizing coefficient vanishes.
std::optional<GaugeData> gauge_data(const ScalarContext& ctx, const Scalar& a, const Scalar& b);

/// D_F, D_G, f5, g5, the F/G relation and the full product identity, all
/// as exact x-polynomials. `seed` picks the pointwise sample x values.
ResidualReport identity_audit(const ScalarContext& ctx, const Scalar& a, const Scalar& b, std::uint64_t seed = 1);

/// 1 - a(p-q) - b, as printed.
Scalar second_solution(const ScalarContext& ctx, const Scalar& a, const Scalar& b);

struct QuadraticRoots {
  Scalar root1;
  Scalar root2;
  Scalar root_sum;
  XPolynomial quadratic;
  bool typeset_partner_is_root = false;
};

/// Q(x) = (-a - x p^-1 [1]) (p^-1 [1] - a p^-1 q - x q [-1]). root1 = b and
/// root2 is its Vieta partner, so Q(root1) = Q(root2).
QuadraticRoots quadratic_roots(const ScalarContext& ctx, const Scalar& a, const Scalar& b);

/// Involution, root membership of the printed partner, and commutation with
/// shift_params at `samples` seeded points.
ResidualReport second_solution_audit(const ScalarContext& ctx, const Scalar& a, const Scalar& b, std::uint64_t seed,
                                     int samples = 10);

/// The printed L_2, L_-2 coefficients. Throws DomainError naming the factor
/// when a denominator vanishes.
std::pair<Scalar, Scalar> l2_coefficients(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long j);

/// c2(j) cm2(j+2) against c(2,j) c(-2,j+2) of M_{a,b'} for b, the printed
/// partner and the Vieta partner; mismatches are findings.
ResidualReport l2_gauge_audit(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long jmax);

/// Closed forms f(j), g(j) checked against their recurrences for |j| <= jmax.
ResidualReport fg_recurrence_audit(const ScalarContext& ctx, const Scalar& a, const Scalar& b, const Scalar& F0,
                                   const Scalar& G0, long jmax);

}  // namespace vpq
