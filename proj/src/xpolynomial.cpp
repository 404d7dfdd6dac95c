#include "vpq/xpolynomial.hpp"

#include <algorithm>

namespace vpq {

XPolynomial::XPolynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void XPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

XPolynomial XPolynomial::constant(const Scalar& c) { return XPolynomial({c}); }

XPolynomial XPolynomial::monic_linear(const Scalar& c) { return XPolynomial({c, Scalar(1L)}); }

Scalar XPolynomial::coeff(int d) const {
  if (d < 0 || d > degree()) return Scalar();
  return coeffs_[static_cast<std::size_t>(d)];
}

XPolynomial XPolynomial::operator-() const {
  XPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

XPolynomial operator+(const XPolynomial& x, const XPolynomial& y) {
  std::vector<Scalar> out(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = x.coeff(static_cast<int>(i)) + y.coeff(static_cast<int>(i));
  }
  return XPolynomial(std::move(out));
}

XPolynomial operator-(const XPolynomial& x, const XPolynomial& y) { return x + (-y); }

XPolynomial operator*(const XPolynomial& x, const XPolynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Scalar> out(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return XPolynomial(std::move(out));
}

XPolynomial operator*(const Scalar& c, const XPolynomial& y) { return XPolynomial::constant(c) * y; }

Scalar XPolynomial::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

XPolynomial XPolynomial::map(const std::function<Scalar(const Scalar&)>& f) const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(f(c));
  return XPolynomial(std::move(out));
}

Json XPolynomial::to_json() const {
  Json arr = Json::array();
  for (const auto& c : coeffs_) arr.push_back(c.to_string());
  return arr;
}

XPolynomial interpolate(const std::vector<std::pair<Scalar, Scalar>>& points) {
  XPolynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    XPolynomial basis = XPolynomial::constant(Scalar(1L));
    Scalar denom(1L);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis = basis * XPolynomial::monic_linear(-points[j].first);
      denom *= points[i].first - points[j].first;
    }
    result = result + (points[i].second / denom) * basis;
  }
  return result;
}

}  // namespace vpq
