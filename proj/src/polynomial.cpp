#include "vpq/polynomial.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace vpq {

namespace {

struct LexGreater {
  bool operator()(const Exponents& x, const Exponents& y) const { return x > y; }
};

using TermMap = std::map<Exponents, mpz_class, LexGreater>;

Polynomial from_map(TermMap&& m);

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

Exponents sub(const Exponents& e, const Exponents& d) {
  Exponents r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(e[i] - d[i]);
  return r;
}

Exponents add(const Exponents& e, const Exponents& d) {
  Exponents r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(e[i] + d[i]);
  return r;
}

}  // namespace

Polynomial from_sorted_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

namespace {

Polynomial from_map(TermMap&& m) {
  std::vector<Term> terms;
  terms.reserve(m.size());
  for (auto& [e, c] : m) {
    if (c != 0) terms.push_back(Term{e, std::move(c)});
  }
  return from_sorted_terms(std::move(terms));
}

}  // namespace

std::string_view var_name(Var v) {
  switch (v) {
    case Var::p: return "p";
    case Var::q: return "q";
    case Var::a: return "a";
    case Var::b: return "b";
    case Var::s: return "s";
  }
  return "?";
}

Polynomial::Polynomial(mpz_class c) {
  if (c != 0) terms_.push_back(Term{Exponents{}, std::move(c)});
}

Polynomial Polynomial::variable(Var v, unsigned power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(power);
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& exp, mpz_class coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back(Term{exp, std::move(coeff)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exp == Exponents{});
}

mpz_class Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("constant_value of non-constant polynomial");
  return terms_.front().coeff;
}

int Polynomial::sign_of_leading() const {
  return terms_.empty() ? 0 : sgn(terms_.front().coeff);
}

unsigned Polynomial::degree(Var v) const {
  const auto i = static_cast<std::size_t>(v);
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exp[i]);
  return d;
}

bool Polynomial::involves(Var v) const {
  const auto i = static_cast<std::size_t>(v);
  return std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.exp[i] != 0; });
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::coefficient(Var v, unsigned d) const {
  const auto i = static_cast<std::size_t>(v);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[i] == d) {
      Term c = t;
      c.exp[i] = 0;
      out.push_back(std::move(c));
    }
  }
  // Removing one coordinate from a lex-sorted list keeps it sorted only when
  // v is the last variable; re-sort to be safe.
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.exp > y.exp; });
  return from_sorted_terms(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->exp > j->exp)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->exp > i->exp) {
      out.push_back(*j++);
    } else {
      mpz_class c = i->coeff + j->coeff;
      if (c != 0) out.push_back(Term{i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.terms_.front().coeff);
  if (b.is_constant()) return a.scaled(b.terms_.front().coeff);
  TermMap acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      acc[add(x.exp, y.exp)] += x.coeff * y.coeff;
    }
  }
  return from_map(std::move(acc));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool is_const = t.exp == Exponents{};
    if (c != 1 || is_const) {
      os << c.get_str();
      if (!is_const) os << "*";
    }
    bool first_var = true;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      if (t.exp[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << var_name(static_cast<Var>(v));
      if (t.exp[v] > 1) os << "^" << t.exp[v];
    }
  }
  return os.str();
}

Polynomial pow(const Polynomial& base, unsigned e) {
  Polynomial result(1L);
  Polynomial b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (d.is_constant()) {
    const mpz_class c = d.constant_value();
    std::vector<Term> out = a.terms();
    for (auto& t : out) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) {
        throw std::domain_error("polynomial division is not exact");
      }
      mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    }
    return from_sorted_terms(std::move(out));
  }
  const Term& ld = d.leading();
  Polynomial quotient;
  Polynomial rem = a;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    if (!divides(ld.exp, lt.exp) || !mpz_divisible_p(lt.coeff.get_mpz_t(), ld.coeff.get_mpz_t())) {
      throw std::domain_error("polynomial division is not exact");
    }
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lt.coeff.get_mpz_t(), ld.coeff.get_mpz_t());
    Polynomial t = Polynomial::monomial(sub(lt.exp, ld.exp), c);
    rem -= t * d;
    quotient += t;
  }
  return quotient;
}

namespace {

Polynomial normalized(Polynomial g) {
  return g.sign_of_leading() < 0 ? -g : g;
}

/// gcd of a monomial with an arbitrary polynomial.
Polynomial monomial_gcd(const Term& m, const Polynomial& other) {
  Exponents e = m.exp;
  for (const auto& t : other.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) e[i] = std::min(e[i], t.exp[i]);
  }
  mpz_class c;
  mpz_class oc = other.content();
  mpz_gcd(c.get_mpz_t(), m.coeff.get_mpz_t(), oc.get_mpz_t());
  return Polynomial::monomial(e, c);
}

/// gcd of the coefficients of `a` viewed as a polynomial in v.
Polynomial content_in(const Polynomial& a, Var v) {
  const unsigned d = a.degree(v);
  Polynomial g;
  for (unsigned k = 0; k <= d; ++k) {
    Polynomial c = a.coefficient(v, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

Polynomial prem(Polynomial r, const Polynomial& b, Var v) {
  const unsigned db = b.degree(v);
  const Polynomial lb = b.coefficient(v, db);
  while (!r.is_zero()) {
    const unsigned dr = r.degree(v);
    if (dr < db) break;
    const Polynomial lr = r.coefficient(v, dr);
    r = lb * r - lr * Polynomial::variable(v, dr - db) * b;
  }
  return r;
}

std::optional<Var> first_var(const Polynomial& a) {
  for (Var v : kAllVars) {
    if (a.involves(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class ca = a.content();
    mpz_class cb = b.content();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Polynomial(g);
  }
  if (a.is_monomial()) return monomial_gcd(a.leading(), b);
  if (b.is_monomial()) return monomial_gcd(b.leading(), a);
  if (a == b) return normalized(a);

  // If v occurs in only one argument the gcd divides that argument's content in v.
  const Var v = *first_var(a);
  if (!b.involves(v)) return gcd(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  const Polynomial c = gcd(ca, cb);
  Polynomial r0 = exact_divide(a, ca);
  Polynomial r1 = exact_divide(b, cb);
  if (r0.degree(v) < r1.degree(v)) std::swap(r0, r1);

  Polynomial g;
  while (true) {
    Polynomial r = prem(r0, r1, v);
    if (r.is_zero()) {
      g = r1;
      break;
    }
    if (r.degree(v) == 0) {
      g = Polynomial(1L);
      break;
    }
    r0 = std::move(r1);
    r1 = exact_divide(r, content_in(r, v));
  }
  return normalized(c * g);
}

}  // namespace vpq
