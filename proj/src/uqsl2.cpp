#include "vpq/uqsl2.hpp"

#include "vpq/xpolynomial.hpp"

#include <utility>

namespace vpq {

namespace {

void check_q(const Scalar& q) {
  if (q.is_zero()) throw DomainError("q must be nonzero");
  if ((q * q).is_one()) throw DomainError("q^2 must differ from 1");
}

Json rep_params(const Uqsl2Rep& rep) {
  return Json{{"omega", rep.omega()}, {"two_l", rep.two_l()}, {"q", rep.q().to_string()}};
}

// q^-m [m] with m = two_m / 2: (1 - q^-2m)/(q - q^-1).
Scalar spectral_x(const Scalar& q, long two_m) {
  return (Scalar(1L) - pow(q, -two_m)) / (q - q.inverse());
}

}  // namespace

Scalar one_param_qint(const Scalar& q, long n) {
  check_q(q);
  return (pow(q, n) - pow(q, -n)) / (q - q.inverse());
}

Uqsl2Rep::Uqsl2Rep(int omega, long two_l, Scalar q) : omega_(omega), two_l_(two_l), q_(std::move(q)) {
  if (omega != 1 && omega != -1) throw DomainError("omega must be +1 or -1");
  if (two_l < 0) throw DomainError("two_l must be nonnegative");
  check_q(q_);
}

std::vector<long> Uqsl2Rep::weights() const {
  std::vector<long> out;
  for (long m = -two_l_; m <= two_l_; m += 2) out.push_back(m);
  return out;
}

bool Uqsl2Rep::valid_weight(long two_m) const {
  return two_m >= -two_l_ && two_m <= two_l_ && (two_l_ - two_m) % 2 == 0;
}

Scalar k_eigenvalue(const Uqsl2Rep& rep, long two_m) {
  if (!rep.valid_weight(two_m)) throw DomainError("invalid weight 2m = " + std::to_string(two_m));
  return Scalar(static_cast<long>(rep.omega())) * pow(rep.q(), two_m);
}

Scalar fe_coefficient(const Uqsl2Rep& rep, long two_m) {
  if (!rep.valid_weight(two_m)) throw DomainError("invalid weight 2m = " + std::to_string(two_m));
  const long l_minus_m = (rep.two_l() - two_m) / 2;
  const long l_plus_m = (rep.two_l() + two_m) / 2;
  return Scalar(static_cast<long>(rep.omega())) * one_param_qint(rep.q(), l_minus_m) *
         one_param_qint(rep.q(), l_plus_m + 1);
}

Scalar ef_coefficient(const Uqsl2Rep& rep, long two_m) {
  if (!rep.valid_weight(two_m)) throw DomainError("invalid weight 2m = " + std::to_string(two_m));
  const long l_minus_m = (rep.two_l() - two_m) / 2;
  const long l_plus_m = (rep.two_l() + two_m) / 2;
  return Scalar(static_cast<long>(rep.omega())) * one_param_qint(rep.q(), l_plus_m) *
         one_param_qint(rep.q(), l_minus_m + 1);
}

ResidualReport rep_relation_audit(const Uqsl2Rep& rep) {
  ResidualReport out("uqsl2-relations", rep_params(rep));
  const Scalar& q = rep.q();
  for (long m : rep.weights()) {
    const Scalar k = k_eigenvalue(rep, m);
    out.record("EF-FE", {m}, ef_coefficient(rep, m) - fe_coefficient(rep, m) - (k - k.inverse()) / (q - q.inverse()));
    out.record("FE-EF-reflection", {m}, fe_coefficient(rep, m) - ef_coefficient(rep, -m));
    if (rep.valid_weight(m + 2)) out.record("K-ratio", {m}, k_eigenvalue(rep, m + 2) - q * q * k);
  }
  return out;
}

ResidualReport quadratic_in_x_fit(const Uqsl2Rep& rep) {
  ResidualReport out("uqsl2-quadratic-in-x", rep_params(rep));
  const std::vector<long> ws = rep.weights();
  auto value = [&](long m) { return pow(rep.q(), -m) * fe_coefficient(rep, m); };
  if (ws.size() < 4) {
    out.add_finding("trivial fit", Json{{"points", ws.size()}});
    return out;
  }
  std::vector<std::pair<Scalar, Scalar>> nodes;
  for (std::size_t i = 0; i < 3; ++i) nodes.emplace_back(spectral_x(rep.q(), ws[i]), value(ws[i]));
  const XPolynomial fit = interpolate(nodes);
  out.data()["fit"] = fit.to_json();
  for (std::size_t i = 3; i < ws.size(); ++i) {
    out.record("quadratic-fit", {ws[i]}, value(ws[i]) - fit.evaluate(spectral_x(rep.q(), ws[i])));
  }
  return out;
}

}  // namespace vpq
