#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vpq {

/// Formal variables. The declaration order is the lexicographic priority
/// used for canonical term order and printing: p > q > a > b > s.
enum class Var : std::uint8_t { p = 0, q, a, b, s };

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::p, Var::q, Var::a, Var::b, Var::s};

std::string_view var_name(Var v);

using Exponents = std::array<std::uint16_t, kNumVars>;

struct Term {
  Exponents exp{};
  mpz_class coeff;
};

/// Sparse multivariate polynomial with integer coefficients.
///
/// Terms are kept sorted by descending lexicographic exponent order with no
/// zero coefficients, so structural equality is mathematical equality.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(mpz_class c);
  explicit Polynomial(long c) : Polynomial(mpz_class(c)) {}

  static Polynomial variable(Var v, unsigned power = 1);
  static Polynomial monomial(const Exponents& exp, mpz_class coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value; requires is_constant().
  mpz_class constant_value() const;

  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int sign_of_leading() const;

  unsigned degree(Var v) const;
  bool involves(Var v) const;
  /// Positive gcd of the integer coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// Coefficient of v^d, as a polynomial not involving v.
  Polynomial coefficient(Var v, unsigned d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const mpz_class& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

private:
  std::vector<Term> terms_;

  friend Polynomial from_sorted_terms(std::vector<Term> terms);
};

Polynomial pow(const Polynomial& base, unsigned e);

/// Exact quotient a / d; throws std::domain_error when d does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& d);

/// Greatest common divisor over Z[p,q,a,b,s], normalised to a positive
/// leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace vpq
