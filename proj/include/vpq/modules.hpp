#pragma once

#include "vpq/context.hpp"
#include "vpq/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vpq {

enum class Family { Mab, ExcAlpha, ExcAlphaPrime, ExcBeta, ExcBetaPrime, Table };

std::string family_name(Family f);

/// L_n v_k = c(n,k) v_{k+n}. The central element acts as zero.
class CoefficientRule {
public:
  static CoefficientRule mab(Scalar a, Scalar b);
  static CoefficientRule exc_alpha(Scalar alpha);
  static CoefficientRule exc_alpha_prime(Scalar alpha_prime);
  static CoefficientRule exc_beta(Scalar beta);
  /// `adjudicated` replaces the factor [n][n+1] at j = -n by [-n][n+1].
  static CoefficientRule exc_beta_prime(Scalar beta_prime, bool adjudicated = false);
  /// Explicit coefficients on |n| <= nmax, |k| <= kmax; missing entries are 0.
  static CoefficientRule table(std::map<std::pair<long, long>, Scalar> entries, long nmax, long kmax);

  /// "mab:a=1/3,b=-2", "alpha:α=0", "alphap:α'=1", "beta:β=2", "betap:β'=1/2".
  /// ASCII keys (alpha, alpha', beta, beta') are accepted too; betap also takes
  /// "reading=adjudicated". Throws std::invalid_argument.
  static CoefficientRule parse(std::string_view spec);
  std::string spec_string() const;

  Family family() const { return family_; }
  const std::vector<Scalar>& params() const { return params_; }
  bool adjudicated() const { return adjudicated_; }

  Scalar coeff(const ScalarContext& ctx, long n, long k) const;

private:
  Family family_ = Family::Mab;
  std::vector<Scalar> params_;
  bool adjudicated_ = false;
  std::map<std::pair<long, long>, Scalar> table_;
  long table_nmax_ = 0;
  long table_kmax_ = 0;
};

Scalar coeff(const ScalarContext& ctx, const CoefficientRule& rule, long n, long k);

/// Finite vector sum x_k v_k supported in |k| <= window.
class WindowedVector {
public:
  explicit WindowedVector(long window) : window_(window) {}
  static WindowedVector basis(long k, long window);

  long window() const { return window_; }
  const std::map<long, Scalar>& entries() const { return entries_; }
  Scalar at(long k) const;
  void add(long k, const Scalar& x);
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const WindowedVector& x, const WindowedVector& y) {
    return x.window_ == y.window_ && x.entries_ == y.entries_;
  }

private:
  long window_;
  std::map<long, Scalar> entries_;
};

/// Throws DomainError if a nonzero component leaves the window.
WindowedVector act(const ScalarContext& ctx, const CoefficientRule& rule, long n, const WindowedVector& v);

/// p^-n q^n c(m,k) c(n,m+k) - p^-m q^m c(n,k) c(m,n+k) - (w(m) - w(n)) c(n+m,k).
Scalar relation_residual(const ScalarContext& ctx, const CoefficientRule& rule, long n, long m, long k);

enum class PairFilter { All, Generators };

ResidualReport verify_module(const ScalarContext& ctx, const CoefficientRule& rule, long nmax, long kmax,
                             PairFilter filter = PairFilter::All);

Scalar weight(const ScalarContext& ctx, const CoefficientRule& rule, long k);

/// Brute force: the M_{a,b} weights are pairwise distinct on |k| <= window.
bool weight_injective(const ScalarContext& ctx, const Scalar& a, long window);
/// a + 1/(p-q) != 0.
bool weight_injective_closed_form(const ScalarContext& ctx, const Scalar& a);

struct SubmoduleResult {
  std::vector<std::vector<long>> subsets;
  bool truncated = false;
};

inline constexpr std::size_t kSubmoduleCap = 4096;

/// Proper nonempty index sets closed under k -> k+n (c(n,k) != 0).
SubmoduleResult find_submodules(const ScalarContext& ctx, const CoefficientRule& rule, long window);

/// Witness m with a = -p^-m [m] and b in {-p^-m q^m, 0}. Throws DomainError
/// when a = -1/(p-q).
std::optional<long> is_reducible_closed_form(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long mmax);

std::pair<Scalar, Scalar> shift_params(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long m);

struct Intertwiner {
  std::map<long, Scalar> h;
  std::vector<std::string> notes;
};

/// Nonzero h with h_{k+n} cA(n,k) = h_k cB(n,k+m) for |n| <= 2, |k| <= window.
std::optional<Intertwiner> find_intertwiner(const ScalarContext& ctx, const CoefficientRule& a,
                                            const CoefficientRule& b, long m, long window);

}  // namespace vpq
