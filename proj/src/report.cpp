#include "vpq/report.hpp"

namespace vpq {

Json indices_json(const std::vector<long>& indices) {
  Json arr = Json::array();
  for (long i : indices) arr.push_back(i);
  return arr;
}

bool ResidualReport::record(const std::string& identity, std::vector<long> indices, const Scalar& residual) {
  ++checked_;
  if (residual.is_zero()) {
    ++passed_;
    return true;
  }
  failures_.push_back(Failure{identity, std::move(indices), residual.to_string()});
  return false;
}

bool ResidualReport::require(const std::string& identity, std::vector<long> indices, bool ok,
                             const std::string& detail) {
  ++checked_;
  if (ok) {
    ++passed_;
    return true;
  }
  failures_.push_back(Failure{identity, std::move(indices), detail.empty() ? "false" : detail});
  return false;
}

bool ResidualReport::observe(const std::string& identity, std::vector<long> indices, const Scalar& residual) {
  if (residual.is_zero()) return true;
  Json d;
  d["indices"] = indices_json(indices);
  d["residual"] = residual.to_string();
  findings_.push_back(Finding{identity, std::move(d)});
  return false;
}

void ResidualReport::add_finding(std::string id, Json detail) {
  findings_.push_back(Finding{std::move(id), std::move(detail)});
}

void ResidualReport::absorb(const ResidualReport& other) {
  checked_ += other.checked_;
  passed_ += other.passed_;
  failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
  findings_.insert(findings_.end(), other.findings_.begin(), other.findings_.end());
}

void ResidualReport::absorb(const ResidualReport& other, const std::string& prefix) {
  checked_ += other.checked_;
  passed_ += other.passed_;
  for (const auto& f : other.failures_) failures_.push_back(Failure{prefix + "/" + f.identity, f.indices, f.residual});
  for (const auto& f : other.findings_) findings_.push_back(Finding{prefix + "/" + f.id, f.detail});
}

Json ResidualReport::to_json() const {
  Json j;
  j["name"] = check_;
  j["parameters"] = params_;
  if (!context_.empty()) j["context"] = context_;
  j["counts"] = Json{{"checked", checked_}, {"passed", passed_}, {"failed", failed()}};
  Json fails = Json::array();
  for (const auto& f : failures_) {
    fails.push_back(Json{{"identity", f.identity}, {"indices", indices_json(f.indices)}, {"residual", f.residual}});
  }
  j["failures"] = std::move(fails);
  Json finds = Json::array();
  for (const auto& f : findings_) finds.push_back(Json{{"id", f.id}, {"detail", f.detail}});
  j["findings"] = std::move(finds);
  if (!data_.empty()) j["data"] = data_;
  return j;
}

}  // namespace vpq
