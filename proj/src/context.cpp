#include "vpq/context.hpp"

#include <map>
#include <mutex>

namespace vpq {

struct ScalarContext::Cache {
  std::mutex mu;
  std::map<long, Scalar> p_pow;
  std::map<long, Scalar> q_pow;
  std::map<long, Scalar> qint;
  std::map<long, Scalar> w;
};

namespace {

template <typename F>
Scalar cached(std::mutex& mu, std::map<long, Scalar>& table, long n, F compute) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(n);
    if (it != table.end()) return it->second;
  }
  Scalar value = compute();
  std::lock_guard<std::mutex> lock(mu);
  return table.emplace(n, std::move(value)).first->second;
}

}  // namespace

std::string backend_name(Backend b) { return b == Backend::numeric ? "numeric" : "symbolic"; }

ScalarContext::ScalarContext(Backend b, Scalar p, Scalar q, int guard)
    : backend_(b), p_(std::move(p)), q_(std::move(q)), guard_(guard), cache_(std::make_shared<Cache>()) {}

ScalarContext ScalarContext::numeric(const mpq_class& p, const mpq_class& q, int guard) {
  if (guard < 1) throw DomainError("unit-root guard order must be positive");
  if (p == 0 || q == 0) throw DomainError("p and q must be nonzero");
  if (p == q) throw DomainError("p and q must differ");
  if (q == 1 || q == -1) throw DomainError("q must not be a root of unity");
  const mpq_class r = q / p;
  mpq_class power = 1;
  for (int k = 1; k <= guard; ++k) {
    power *= r;
    if (power == 1) throw DomainError("(q/p)^" + std::to_string(k) + " = 1");
  }
  return ScalarContext(Backend::numeric, Scalar(p), Scalar(q), guard);
}

ScalarContext ScalarContext::symbolic() {
  return ScalarContext(Backend::symbolic, Scalar::variable(Var::p), Scalar::variable(Var::q), 64);
}

Scalar ScalarContext::p_pow(long n) const {
  return cached(cache_->mu, cache_->p_pow, n, [&] { return pow(p_, n); });
}

Scalar ScalarContext::q_pow(long n) const {
  return cached(cache_->mu, cache_->q_pow, n, [&] { return pow(q_, n); });
}

Scalar ScalarContext::ratio_pow(long n) const { return q_pow(n) * p_pow(-n); }

Scalar ScalarContext::qint(long n) const {
  return cached(cache_->mu, cache_->qint, n, [&] { return (p_pow(n) - q_pow(n)) / (p_ - q_); });
}

Scalar ScalarContext::w(long n) const {
  return cached(cache_->mu, cache_->w, n, [&] { return qint(n) * p_pow(-n); });
}

Scalar ScalarContext::specialize(const Scalar& x) const {
  if (backend_ == Backend::symbolic) return x;
  return x.substitute({{Var::p, p_.rational()}, {Var::q, q_.rational()}});
}

nlohmann::ordered_json ScalarContext::to_json() const {
  nlohmann::ordered_json j;
  j["backend"] = backend_name(backend_);
  j["p"] = p_.to_string();
  j["q"] = q_.to_string();
  j["guard_order"] = guard_;
  if (backend_ == Backend::symbolic) {
    j["guards"] = nlohmann::ordered_json::array({"p, q independent indeterminates"});
  } else {
    j["guards"] = nlohmann::ordered_json::array({"p != 0", "q != 0", "p != q", "q not in {1,-1}",
                                                "(q/p)^k != 1 for 1 <= k <= " + std::to_string(guard_)});
  }
  return j;
}

Scalar qint(const ScalarContext& ctx, long n) { return ctx.qint(n); }

Scalar qpow(const ScalarContext& /*ctx*/, const Scalar& base, long n) { return pow(base, n); }

}  // namespace vpq
