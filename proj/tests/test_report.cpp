#include <doctest.h>

#include "lg2/report.hpp"

using namespace lg2::report;
using nlohmann::json;

TEST_CASE("config defaults")
{
  const Config c;
  CHECK(c.seed == 1);
  CHECK(c.sphere_samples == 1000);
  CHECK(c.thimble_lambdas.size() == 9);
  CHECK(c.thimble_t_samples == 64);
  CHECK(c.t_range == 10);
  CHECK(c.shift_range == 3);
  CHECK(c.k_max == 6);
  CHECK(Config::from_json(json::object()).to_json() == c.to_json());
}

TEST_CASE("config overrides")
{
  const Config c = Config::from_json(json::parse(R"({"seed": 42, "t_range": 20, "thimble_grid": {"t_samples": 8}})"));
  CHECK(c.seed == 42);
  CHECK(c.t_range == 20);
  CHECK(c.thimble_t_samples == 8);
  CHECK(c.thimble_lambdas.size() == 9);
  CHECK(Config::from_json(c.to_json()).to_json() == c.to_json());
}

TEST_CASE("config errors")
{
  CHECK_THROWS_AS(Config::from_json(json::parse(R"({"bogus": 1})")), ConfigError);
  CHECK_THROWS_AS(Config::from_json(json::parse(R"({"seed": -1})")), ConfigError);
  CHECK_THROWS_AS(Config::from_json(json::parse(R"({"seed": "one"})")), ConfigError);
  CHECK_THROWS_AS(Config::from_json(json::parse(R"({"float_tolerance": 0})")), ConfigError);
  CHECK_THROWS_AS(Config::from_json(json::parse(R"({"k_max": 1})")), ConfigError);
  CHECK_THROWS_AS(Config::from_json(json::parse(R"({"thimble_grid": {"lambdas": [1.0]}})")), ConfigError);
  CHECK_THROWS_AS(Config::from_json(json::parse(R"({"thimble_grid": {"extra": 1}})")), ConfigError);
  CHECK_THROWS_AS(Config::from_json(json::parse("[]")), ConfigError);
}

TEST_CASE("unknown suite")
{
  CHECK_THROWS_AS(run_suite("bogus", Config{}), ConfigError);
}

TEST_CASE("report shape")
{
  const SuiteReport r = run_suite("mirror", Config{});
  const json j = r.to_json();
  CHECK(j.at("schema") == 1);
  CHECK(j.at("suite") == "mirror");
  CHECK_FALSE(r.any_fail());
  CHECK(j.at("summary").at("fail") == 0);
  std::size_t assumptions = 0;
  for (const auto& c : j.at("checks")) {
    CHECK_FALSE(c.at("anchor").get<std::string>().empty());
    if (c.at("status") == "assumption")
      ++assumptions;
  }
  CHECK(assumptions == 3);
}

TEST_CASE("the mirror search honours t_range")
{
  Config c;
  c.t_range = 20;
  const SuiteReport r = run_suite("mirror", c);
  CHECK_FALSE(r.any_fail());
}

TEST_CASE("headline tables")
{
  const json j = run_suite("all", Config{}).to_json();
  CHECK(j.at("tables").contains("fukaya_hom"));
  CHECK(j.at("tables").contains("f2_ext"));
  CHECK(j.at("tables").contains("singular_value_scan"));
  CHECK(j.at("checks").size() >= 60);
}

TEST_CASE("same seed, same bytes")
{
  Config c;
  c.seed = 17;
  CHECK(run_suite("all", c).to_json().dump() == run_suite("all", c).to_json().dump());
}
