#pragma once

#include "vpq/scalar.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace vpq {

using Json = nlohmann::ordered_json;

struct Failure {
  std::string identity;
  std::vector<long> indices;
  std::string residual;
};

/// A documented observation: a typo adjudication, a nonzero residual of a
/// claim that is only audited, or a consistent alternative reading.
struct Finding {
  std::string id;
  Json detail;
};

/// Deterministic record of checked identities. `record` counts toward
/// pass/fail; `observe` and `add_finding` only document.
class ResidualReport {
public:
  explicit ResidualReport(std::string check, Json params = Json::object(), Json context = Json::object())
      : check_(std::move(check)), params_(std::move(params)), context_(std::move(context)) {}

  /// Returns true when the residual is zero.
  bool record(const std::string& identity, std::vector<long> indices, const Scalar& residual);
  /// Records a boolean requirement (no residual value).
  bool require(const std::string& identity, std::vector<long> indices, bool ok, const std::string& detail = "");
  /// Documents a nonzero residual as a finding without failing.
  bool observe(const std::string& identity, std::vector<long> indices, const Scalar& residual);
  void add_finding(std::string id, Json detail);

  /// Extra structured output (tables, polynomials, derived values).
  Json& data() { return data_; }
  const Json& data() const { return data_; }

  void absorb(const ResidualReport& other);
  /// As absorb, prefixing failure identities and finding ids with "prefix/".
  void absorb(const ResidualReport& other, const std::string& prefix);

  const std::string& check() const { return check_; }
  long checked() const { return checked_; }
  long passed() const { return passed_; }
  long failed() const { return checked_ - passed_; }
  const std::vector<Failure>& failures() const { return failures_; }
  const std::vector<Finding>& findings() const { return findings_; }
  bool ok() const { return failed() == 0; }

  Json to_json() const;

private:
  std::string check_;
  Json params_;
  Json context_;
  Json data_ = Json::object();
  long checked_ = 0;
  long passed_ = 0;
  std::vector<Failure> failures_;
  std::vector<Finding> findings_;
};

Json indices_json(const std::vector<long>& indices);

}  // namespace vpq
