#include "vpq/algebra.hpp"

#include <set>

namespace vpq {

AlgebraElement AlgebraElement::generator(long n, Scalar coeff) {
  AlgebraElement e;
  e.add_term(n, coeff);
  return e;
}

AlgebraElement AlgebraElement::central(Scalar coeff) {
  AlgebraElement e;
  e.central_ = std::move(coeff);
  return e;
}

Scalar AlgebraElement::coefficient(long n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Scalar() : it->second;
}

AlgebraElement AlgebraElement::centerless() const {
  AlgebraElement e = *this;
  e.central_ = Scalar();
  return e;
}

void AlgebraElement::add_term(long n, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(n);
  if (it == terms_.end()) {
    terms_.emplace(n, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::add_central(const Scalar& c) { central_ += c; }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  central_ += o.central_;
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement e;
  for (const auto& [n, x] : terms_) e.add_term(n, x * c);
  e.central_ = central_ * c;
  return e;
}

std::string AlgebraElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto piece = [&](const std::string& coeff, const std::string& gen) {
    if (!out.empty()) out += " + ";
    out += coeff.find_first_of(" ") == std::string::npos ? coeff : "(" + coeff + ")";
    out += "·" + gen;
  };
  for (const auto& [n, c] : terms_) piece(c.to_string(), "L[" + std::to_string(n) + "]");
  if (!central_.is_zero()) piece(central_.to_string(), "C");
  return out;
}

Scalar central_coefficient(const ScalarContext& ctx, long n) {
  const Scalar denom = Scalar(6L) * (Scalar(1L) + ctx.ratio_pow(n));
  if (denom.is_zero()) throw DomainError("1 + (q/p)^" + std::to_string(n) + " vanishes");
  const Scalar product = ctx.w(n - 1) * ctx.w(n) * ctx.w(n + 1);
  if (product.is_zero()) return Scalar();
  return ctx.ratio_pow(-n) / denom * product;
}

AlgebraElement bracket_generators(const ScalarContext& ctx, long n, long m) {
  AlgebraElement e = AlgebraElement::generator(n + m, ctx.w(n) - ctx.w(m));
  if (n + m == 0) e.add_central(central_coefficient(ctx, n));
  return e;
}

AlgebraElement bracket(const ScalarContext& ctx, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [n, c] : x.terms()) {
    for (const auto& [m, d] : y.terms()) {
      out += bracket_generators(ctx, n, m).scaled(c * d);
    }
  }
  return out;
}

AlgebraElement hom_twist(const ScalarContext& ctx, const AlgebraElement& x) {
  AlgebraElement out = AlgebraElement::central(x.central_part());
  for (const auto& [n, c] : x.terms()) out.add_term(n, c * (Scalar(1L) + ctx.ratio_pow(n)));
  return out;
}

AlgebraElement hom_jacobi_residual(const ScalarContext& ctx, long k, long l, long m) {
  auto gen = [](long n) { return AlgebraElement::generator(n); };
  auto term = [&](long x, long y, long z) {
    return bracket(ctx, hom_twist(ctx, gen(x)), bracket_generators(ctx, y, z));
  };
  return term(k, l, m) + term(l, m, k) + term(m, k, l);
}

AlgebraElement skew_residual(const ScalarContext& ctx, long n, long m) {
  return bracket_generators(ctx, n, m) + bracket_generators(ctx, m, n);
}

ResidualReport generation_check(const ScalarContext& ctx, long window) {
  if (window < 2) throw DomainError("generation window must be at least 2");
  ResidualReport report("generation", Json{{"window", window}}, ctx.to_json());
  std::set<long> reached{-2, -1, 1, 2};
  Json chain = Json::array();
  auto derive = [&](long target, long from, long gen) {
    if (!reached.count(from) || !reached.count(gen)) return false;
    const AlgebraElement b = bracket_generators(ctx, from, gen);
    const Scalar c = b.coefficient(target);
    if (c.is_zero()) return false;
    reached.insert(target);
    chain.push_back(Json{{"n", target}, {"from", Json::array({from, gen})}, {"coefficient", c.to_string()}});
    return true;
  };
  for (long n : {-2L, -1L, 1L, 2L}) chain.push_back(Json{{"n", n}, {"from", "generator"}});
  if (!derive(0, 1, -1)) derive(0, 2, -2);
  for (long k = 3; k <= window; ++k) {
    for (long sgn : {1L, -1L}) {
      const long n = sgn * k;
      if (!derive(n, n - sgn, sgn)) derive(n, n - 2 * sgn, 2 * sgn);
    }
  }
  for (long n = -window; n <= window; ++n) {
    report.require("reachable", {n}, reached.count(n) > 0, "not derived from L[+-1], L[+-2]");
  }
  report.data()["chain"] = std::move(chain);
  return report;
}

ResidualReport verify_algebra(const ScalarContext& ctx, long window) {
  ResidualReport report("verify-algebra", Json{{"window", window}}, ctx.to_json());
  for (long n = -window; n <= window; ++n) {
    for (long m = -window; m <= window; ++m) {
      const AlgebraElement r = skew_residual(ctx, n, m);
      report.require("skew", {n, m}, r.is_zero(), r.to_string());
    }
  }
  long cocycle_checked = 0;
  for (long k = -window; k <= window; ++k) {
    for (long l = -window; l <= window; ++l) {
      for (long m = -window; m <= window; ++m) {
        const AlgebraElement r = hom_jacobi_residual(ctx, k, l, m);
        report.require("hom-jacobi-centerless", {k, l, m}, r.centerless_zero(), r.centerless().to_string());
        if (k + l + m == 0) {
          ++cocycle_checked;
          report.observe("central-cocycle", {k, l, m}, r.central_part());
        }
      }
    }
  }
  report.data()["central_cocycle_triples"] = cocycle_checked;
  return report;
}

ResidualReport qint_identities(const ScalarContext& ctx, long window) {
  ResidualReport rep("qint-identities", Json{{"window", window}}, ctx.to_json());
  for (long m = -window; m <= window; ++m) {
    for (long n = -window; n <= window; ++n) {
      rep.record("pascal", {m, n}, ctx.qint(m + n) - ctx.p_pow(m) * ctx.qint(n) - ctx.q_pow(n) * ctx.qint(m));
    }
  }
  for (long n = -window; n <= window; ++n) {
    rep.record("reflection", {n}, ctx.qint(-n) + pow(ctx.p() * ctx.q(), -n) * ctx.qint(n));
  }
  return rep;
}

}  // namespace vpq
