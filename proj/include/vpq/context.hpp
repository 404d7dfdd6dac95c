#pragma once

#include "vpq/scalar.hpp"

#include <json.hpp>

#include <memory>
#include <string>

namespace vpq {

enum class Backend { numeric, symbolic };

std::string backend_name(Backend b);

/// Deformation parameters p, q plus cached powers and quantum integers.
///
/// Numeric contexts hold rational p, q and enforce p != 0, q != 0, p != q,
/// q != +-1 and (q/p)^k != 1 for 1 <= k <= guard. Symbolic contexts use the
/// formal variables p and q. Copies share one thread-safe cache.
class ScalarContext {
public:
  static ScalarContext numeric(const mpq_class& p, const mpq_class& q, int guard = 64);
  static ScalarContext symbolic();

  Backend backend() const { return backend_; }
  const Scalar& p() const { return p_; }
  const Scalar& q() const { return q_; }
  int guard() const { return guard_; }

  /// p^n, q^n and (q/p)^n for any integer n.
  Scalar p_pow(long n) const;
  Scalar q_pow(long n) const;
  Scalar ratio_pow(long n) const;

  /// Quantum integer [n] = (p^n - q^n)/(p - q), computed from the fraction.
  Scalar qint(long n) const;
  /// [n]/p^n, the structure coefficient of the bracket.
  Scalar w(long n) const;

  /// Evaluates a symbolic scalar at this context's p, q (no-op when symbolic).
  Scalar specialize(const Scalar& x) const;

  nlohmann::ordered_json to_json() const;

private:
  struct Cache;
  ScalarContext(Backend b, Scalar p, Scalar q, int guard);

  Backend backend_;
  Scalar p_;
  Scalar q_;
  int guard_;
  std::shared_ptr<Cache> cache_;
};

Scalar qint(const ScalarContext& ctx, long n);
/// base^n; zero base with negative n throws DomainError.
Scalar qpow(const ScalarContext& ctx, const Scalar& base, long n);

}  // namespace vpq
