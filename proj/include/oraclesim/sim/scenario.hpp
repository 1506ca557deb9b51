#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "oraclesim/lex/classify.hpp"
#include "oraclesim/trust/calendar.hpp"
#include "oraclesim/trust/schedule.hpp"

namespace oraclesim::sim {

using Day = trust::Day;

struct SourceSpec {
  std::string id;
  std::set<std::string> domain_tags;  // empty = generalist
  double bias = 0.0;
  std::optional<Day> corrupt_from;    // inclusive; bias applies inside the
  std::optional<Day> corrupt_to;      // window, or always when no window
  bool reference_only = false;        // serves audits/disputes, not queries
  Day delay_days = 0;                 // fixed transport delay to the contract
};

struct PetitionerSpec {
  std::string id;
  trust::Tier tier = trust::Tier::Standard;
  std::map<lex::QueryCategory, double> query_mix;  // weights, sum > 0
  double queries_per_day = 1.0;
  double binary_fraction = 0.3;  // chance a query takes the quick binary path
  double urn_fraction = 0.0;     // chance a submission is a sealed-urn choice
};

// Bribes a target source: forces `bias` onto it for [from_day, to_day].
struct BriberSpec {
  std::string target;
  double bias = 0.0;
  Day from_day = 0;
  Day to_day = 0;
};

// Attempts n fresh (non-whitelisted) registrations at each month start.
struct SybilSpec {
  int n = 1;
};

// The controlled source only ever copies the latest visible answer for the
// same query; with nothing visible it abstains.
struct FreeloaderSpec {
  std::string source;
};

// The controlled source returns one constant regardless of the question.
struct LazySpec {
  std::string source;
  double constant = 0.0;
};

using AdversarySpec =
    std::variant<BriberSpec, SybilSpec, FreeloaderSpec, LazySpec>;

struct FeeSchedule {
  double base = 10.0;
};

struct ScenarioConfig {
  Day duration_days = 1;
  trust::Calendar calendar;
  std::uint64_t seed = 0;
  Day dispute_window_days = 2;
  double audit_probability_per_month = 0.0;  // per active source, per month
  double tolerance = 0.01;
  std::vector<SourceSpec> sources;
  std::vector<PetitionerSpec> petitioners;
  std::vector<AdversarySpec> adversaries;
  int witness_count = 3;
  FeeSchedule fees;
  // Chance per day that a deviating pending answer draws a dispute.
  double challenge_probability = 0.0;

  // Throws Error(InvalidConfig) naming the offending field.
  void validate() const;

  static ScenarioConfig from_json(const nlohmann::json& json);
  static ScenarioConfig load(const std::filesystem::path& file);
  nlohmann::ordered_json to_json() const;
};

}  // namespace oraclesim::sim
