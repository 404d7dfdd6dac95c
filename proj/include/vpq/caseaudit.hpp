#pragma once

#include "vpq/context.hpp"
#include "vpq/modules.hpp"
#include "vpq/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vpq {

/// All k with |k| <= window and c(n,k) = 0.
std::vector<long> annihilator_spectrum(const ScalarContext& ctx, const CoefficientRule& rule, long n, long window);

/// p^2j q^-2j c(1,j) c(-1,j+1) and p^2j q^-2j c(-1,j) c(1,j-1) as functions of
/// x = q^-j [j]: quadratic fit through j = 0, 1, 2, verified on |j| <= window.
/// Throws DomainError when window < 4.
ResidualReport quadratic_in_x_check(const ScalarContext& ctx, const CoefficientRule& rule, long window);

/// Integer roots j of p^-j [j] - a p^-j q^j - a p^-j-2 q^j+1 [2] in [-window, window].
std::vector<long> j0_solutions(const ScalarContext& ctx, const Scalar& a, long window);

/// The smallest root, if any.
std::optional<long> find_j0(const ScalarContext& ctx, const Scalar& a, long window);

enum class CaseTag { Case1, Case2, Case3, Case4 };

std::string case_name(CaseTag t);

/// Case2: a = -1/(p+q), Case3: a = -1/p, Case4: a = 0, Case1 otherwise.
CaseTag case_tag(const ScalarContext& ctx, const Scalar& a);

struct CaseConstants {
  Scalar H, D, E, Fc, Gc;
};

enum class CaseReading { Typeset, Adjudicated };

/// Constants assigned in each case; `param` is alpha (Case3) or alpha' (Case4).
CaseConstants case_constants(const ScalarContext& ctx, const Scalar& a, CaseTag tag, CaseReading reading,
                             const Scalar& param);

/// Constraint residuals for the case of `a` under the adjudicated reading
/// (counted) and the typeset reading (findings), plus the module oracle.
ResidualReport case_constants_audit(const ScalarContext& ctx, const Scalar& a,
                                    const Scalar& param = Scalar::variable(Var::s));

/// Case formulas against the exceptional family rules for n in {+-1, +-2},
/// |j| <= window, and the module relations of each family.
ResidualReport family_consistency(const ScalarContext& ctx, long window,
                                  const Scalar& param = Scalar::variable(Var::s));

/// Sections "case1".."case4", "caseII-beta", "caseII-betap".
std::vector<ResidualReport> case_audit(const ScalarContext& ctx, long window,
                                       const Scalar& param = Scalar::variable(Var::s));

}  // namespace vpq
