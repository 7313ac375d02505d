#include "lg2/report.hpp"

#include <algorithm>
#include <set>

#include "lg2/symplectic.hpp"

namespace lg2::report {

std::string status_name(Status s)
{
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Assumption:
    return "assumption";
  }
  return "fail";
}

Config::Config() : thimble_lambdas(symplectic::default_thimble_lambdas()) {}

namespace {

template <typename T>
T read(const nlohmann::json& j, const std::string& key)
{
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

std::size_t read_count(const nlohmann::json& j, const std::string& key)
{
  if (!j.at(key).is_number_integer() || j.at(key).get<long long>() < 0)
    throw ConfigError("config key '" + key + "' must be a nonnegative integer");
  return j.at(key).get<std::size_t>();
}

int read_small(const nlohmann::json& j, const std::string& key, int lo, int hi)
{
  if (!j.at(key).is_number_integer())
    throw ConfigError("config key '" + key + "' must be an integer");
  const long long v = j.at(key).get<long long>();
  if (v < lo || v > hi)
    throw ConfigError("config key '" + key + "' out of range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "]");
  return static_cast<int>(v);
}

} // namespace

Config Config::from_json(const nlohmann::json& j)
{
  if (!j.is_object())
    throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known{"seed",       "float_tolerance", "sphere_samples", "thimble_grid",
                                           "box_margin", "t_range",         "shift_range",    "k_max"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key))
      throw ConfigError("unknown config key '" + key + "'");
  Config c;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !(j["seed"].is_number_integer() && j["seed"].get<long long>() >= 0))
      throw ConfigError("config key 'seed' must be a nonnegative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("float_tolerance")) {
    if (!j["float_tolerance"].is_number())
      throw ConfigError("config key 'float_tolerance' must be a number");
    c.float_tolerance = read<double>(j, "float_tolerance");
    if (!(c.float_tolerance > 0.0))
      throw ConfigError("float_tolerance must be positive");
  }
  if (j.contains("sphere_samples"))
    c.sphere_samples = read_count(j, "sphere_samples");
  if (j.contains("thimble_grid")) {
    const auto& g = j["thimble_grid"];
    if (!g.is_object())
      throw ConfigError("thimble_grid must be an object");
    for (const auto& [key, value] : g.items())
      if (key != "lambdas" && key != "t_samples")
        throw ConfigError("unknown thimble_grid key '" + key + "'");
    if (g.contains("lambdas")) {
      c.thimble_lambdas = read<std::vector<double>>(g, "lambdas");
      for (double l : c.thimble_lambdas)
        if (!(std::abs(l) < 1.0))
          throw ConfigError("thimble lambdas must lie in (-1, 1)");
    }
    if (g.contains("t_samples"))
      c.thimble_t_samples = read_count(g, "t_samples");
  }
  if (j.contains("box_margin"))
    c.box_margin = read_small(j, "box_margin", 0, 20);
  if (j.contains("t_range"))
    c.t_range = read_small(j, "t_range", 0, 200);
  if (j.contains("shift_range"))
    c.shift_range = read_small(j, "shift_range", 0, 50);
  if (j.contains("k_max")) {
    c.k_max = read_count(j, "k_max");
    if (c.k_max < 2 || c.k_max > 10)
      throw ConfigError("k_max must lie in [2, 10]");
  }
  return c;
}

nlohmann::json Config::to_json() const
{
  nlohmann::json j = nlohmann::json::object();
  j["seed"] = seed;
  j["float_tolerance"] = float_tolerance;
  j["sphere_samples"] = sphere_samples;
  j["thimble_grid"] = {{"lambdas", thimble_lambdas}, {"t_samples", thimble_t_samples}};
  j["box_margin"] = box_margin;
  j["t_range"] = t_range;
  j["shift_range"] = shift_range;
  j["k_max"] = k_max;
  return j;
}

bool SuiteReport::any_fail() const
{
  return count(Status::Fail) > 0;
}

std::size_t SuiteReport::count(Status s) const
{
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

nlohmann::json SuiteReport::to_json() const
{
  nlohmann::json j = nlohmann::json::object();
  j["schema"] = 1;
  j["suite"] = suite;
  j["config"] = config.to_json();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item = {{"id", c.id}, {"anchor", c.anchor}, {"status", status_name(c.status)}, {"detail", c.detail}};
    if (c.residual)
      item["residual"] = *c.residual;
    list.push_back(item);
  }
  j["checks"] = list;
  j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)},
                  {"assumption", count(Status::Assumption)}};
  j["tables"] = tables;
  return j;
}

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"category", "compactification", "lie", "mirror",
                                              "quiver",   "sheaves",          "symplectic"};
  return names;
}

} // namespace lg2::report
