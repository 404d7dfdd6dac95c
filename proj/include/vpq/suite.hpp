#pragma once

#include "vpq/context.hpp"
#include "vpq/report.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vpq {

inline constexpr const char* kToolName = "vpq";
inline constexpr const char* kToolVersion = "1.0.0";

/// Malformed configuration or parameters (exit status 2).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct CheckSpec {
  std::string name;
  Json params = Json::object();
};

struct SuiteConfig {
  std::string p = "2";
  std::string q = "3";
  Backend backend = Backend::numeric;
  int guard = 64;
  std::uint64_t seed = 20240601;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
  std::vector<CheckSpec> checks;
};

/// Registered check names in documentation order.
const std::vector<std::string>& check_names();

/// Throws ConfigError on unknown checks, unknown keys or ill-typed values.
void validate_check(const CheckSpec& spec);

/// {"context": {...}, "seed": n, "jobs": n, "checks": [{"check": name, ...}]}.
/// Throws ConfigError.
SuiteConfig parse_suite_config(const Json& j);
SuiteConfig load_suite_config(const std::string& path);

/// Throws ConfigError when p, q violate the context guards.
ScalarContext make_context(const SuiteConfig& config);

/// One check; seeded checks draw from `seed`. Domain errors become failures.
ResidualReport run_check(const ScalarContext& ctx, const CheckSpec& spec, std::uint64_t seed);

struct SuiteResult {
  Json report;
  long failed = 0;
};

/// Runs all checks in listed order (concurrently, merged in order).
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace vpq
