#include <doctest.h>

#include "oraclesim/error.hpp"
#include "oraclesim/sim/scenario.hpp"

using namespace oraclesim;
using namespace oraclesim::sim;

namespace {

const std::string kScenarioDir = std::string(ORACLESIM_TEST_DATA_DIR) + "/scenarios";

nlohmann::json minimal() {
  return nlohmann::json{
      {"duration_days", 30},
      {"seed", 1},
      {"sources", nlohmann::json::array({{{"id", "alpha"}}})},
      {"petitioners",
       nlohmann::json::array(
           {{{"id", "p"}, {"tier", "Standard"},
             {"query_mix", {{"Discernible", 1.0}}}}})}};
}

std::string invalid_config_message(const nlohmann::json& json) {
  try {
    ScenarioConfig::from_json(json);
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::InvalidConfig);
    return error.what();
  }
  FAIL("expected InvalidConfig");
  return {};
}

}  // namespace

TEST_CASE("every bundled scenario parses and validates") {
  for (const char* name :
       {"all_honest", "briber", "sybil_n1", "sybil_n100", "freeloader", "lazy",
        "watchdog", "sealed_choice"}) {
    ScenarioConfig config =
        ScenarioConfig::load(kScenarioDir + "/" + name + ".json");
    CHECK(config.duration_days >= 1);
    CHECK(config.witness_count >= 3);
  }
}

TEST_CASE("minimal config gets defaults") {
  ScenarioConfig config = ScenarioConfig::from_json(minimal());
  CHECK(config.dispute_window_days == 2);
  CHECK(config.calendar.month_length == 30);
  CHECK(config.calendar.consultation_day == 7);
  CHECK(config.fees.base == 10.0);
  CHECK(config.witness_count == 3);
}

TEST_CASE("validation errors carry the offending field path") {
  auto bad_duration = minimal();
  bad_duration["duration_days"] = 0;
  CHECK(invalid_config_message(bad_duration).find("duration_days") !=
        std::string::npos);

  auto bad_probability = minimal();
  bad_probability["audit_probability_per_month"] = 1.5;
  CHECK(invalid_config_message(bad_probability)
            .find("audit_probability_per_month") != std::string::npos);

  auto duplicate_id = minimal();
  duplicate_id["sources"].push_back({{"id", "alpha"}});
  CHECK(invalid_config_message(duplicate_id).find("sources[1].id") !=
        std::string::npos);

  auto bad_mix = minimal();
  bad_mix["petitioners"][0]["query_mix"] = {{"Mystery", 1.0}};
  CHECK(invalid_config_message(bad_mix).find("query_mix") != std::string::npos);

  auto bad_target = minimal();
  bad_target["adversaries"] = nlohmann::json::array(
      {{{"kind", "Briber"}, {"target", "ghost"}, {"bias", 1.0},
        {"from_day", 0}, {"to_day", 10}}});
  CHECK(invalid_config_message(bad_target).find("adversaries[0].target") !=
        std::string::npos);

  auto unknown_field = minimal();
  unknown_field["surprise"] = true;
  CHECK(invalid_config_message(unknown_field).find("surprise") !=
        std::string::npos);

  auto bad_kind = minimal();
  bad_kind["adversaries"] = nlohmann::json::array({{{"kind", "Gremlin"}}});
  CHECK(invalid_config_message(bad_kind).find("adversaries[0].kind") !=
        std::string::npos);
}

TEST_CASE("config round trips through json") {
  ScenarioConfig config = ScenarioConfig::load(kScenarioDir + "/briber.json");
  ScenarioConfig round = ScenarioConfig::from_json(config.to_json());
  CHECK(round.to_json() == config.to_json());
}

TEST_CASE("missing files and broken json are reported") {
  CHECK_THROWS_AS(ScenarioConfig::load("/nonexistent.json"), Error);
}
