#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lg2/report.hpp"

namespace {

constexpr int kUsageError = 2;

lg2::report::Config load_config(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw lg2::report::ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw lg2::report::ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return lg2::report::Config::from_json(j);
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Runs the verification suites and prints a JSON report."};
  std::string suite;
  std::string config_path;
  std::string json_path;
  std::optional<std::uint64_t> seed;

  std::vector<std::string> choices = lg2::report::suite_names();
  choices.push_back("all");
  app.add_option("suite", suite, "Suite to run")->required()->check(CLI::IsMember(choices));
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seed", seed, "Overrides the config seed");
  app.add_option("--json", json_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  lg2::report::SuiteReport report;
  try {
    lg2::report::Config config = config_path.empty() ? lg2::report::Config{} : load_config(config_path);
    if (seed)
      config.seed = *seed;
    report = lg2::report::run_suite(suite, config);
  } catch (const lg2::report::ConfigError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kUsageError;
  }

  const std::string text = report.to_json().dump(2) + "\n";
  if (json_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "verify: cannot write '" << json_path << "'\n";
      return kUsageError;
    }
    out << text;
    std::cout << suite << ": " << report.count(lg2::report::Status::Pass) << " pass, "
              << report.count(lg2::report::Status::Fail) << " fail, "
              << report.count(lg2::report::Status::Assumption) << " assumption\n";
  }
  for (const auto& c : report.checks)
    if (c.status == lg2::report::Status::Fail)
      std::cerr << "FAIL " << c.id << ": " << c.detail << "\n";
  return report.any_fail() ? 1 : 0;
}
