#ifndef LG2_REPORT_HPP
#define LG2_REPORT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace lg2::report {

enum class Status { Pass, Fail, Assumption };

std::string status_name(Status s);

struct CheckResult {
  std::string id;
  std::string anchor;
  Status status = Status::Fail;
  std::string detail;
  std::optional<double> residual;
};

/// Bad config file contents or an unknown suite name.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::uint64_t seed = 1;
  double float_tolerance = 1e-9;
  std::size_t sphere_samples = 1000;
  std::vector<double> thimble_lambdas;
  std::size_t thimble_t_samples = 64;
  int box_margin = 0;
  int t_range = 10;
  int shift_range = 3;
  std::size_t k_max = 6;

  Config();

  /// Overrides the defaults with the keys present. Throws ConfigError on
  /// unknown keys, wrong types or out-of-range values.
  static Config from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct SuiteReport {
  std::string suite;
  Config config;
  std::vector<CheckResult> checks;
  nlohmann::json tables = nlohmann::json::object();

  bool any_fail() const;
  std::size_t count(Status s) const;
  nlohmann::json to_json() const;
};

/// lie, symplectic, category, sheaves, quiver, mirror, compactification.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite in name order for "all". Throws
/// ConfigError for an unknown suite.
SuiteReport run_suite(const std::string& suite, const Config& config);

} // namespace lg2::report

#endif
