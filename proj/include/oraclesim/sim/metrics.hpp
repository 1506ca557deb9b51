#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "oraclesim/lex/classify.hpp"
#include "oraclesim/sim/event.hpp"
#include "oraclesim/sim/scenario.hpp"

namespace oraclesim::sim {

struct CategoryStats {
  std::uint64_t count = 0;             // submissions in this category
  double mean_latency_days = 0.0;      // submission -> service, served only

  bool operator==(const CategoryStats&) const = default;
};

// Everything a run reports. Each value is recomputable from the event log
// (plus the config, which names the corrupted sources).
struct MetricsReport {
  std::array<CategoryStats, lex::kCategoryCount> per_category{};
  double manipulation_success_rate = 0.0;   // finalized answers != truth
  double detection_rate = 0.0;              // corrupted sources caught
  double mean_detection_latency_days = 0.0; // corruption start -> expulsion
  std::uint64_t expulsions = 0;
  double fee_revenue = 0.0;                 // payments minus refunds
  double freeloader_copy_rate = 0.0;        // copied / produced answers
  double lazy_constant_rate = 0.0;          // constant / produced answers
  std::uint64_t run_seed = 0;

  bool operator==(const MetricsReport&) const = default;

  nlohmann::ordered_json to_json() const;
};

// Recomputes the full report by replaying the raw event log.
MetricsReport report_from_log(const ScenarioConfig& config, const EventLog& log,
                              std::uint64_t run_seed);

struct ReplicateStat {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single run
};

struct ReplicateCategoryStat {
  ReplicateStat count;
  ReplicateStat mean_latency_days;
};

// Mean and sample standard deviation of every metric across n runs seeded
// seed, seed+1, ...
struct ReplicateReport {
  int n_runs = 0;
  std::uint64_t base_seed = 0;
  std::map<std::string, ReplicateStat> metrics;
  std::array<ReplicateCategoryStat, lex::kCategoryCount> per_category{};

  nlohmann::ordered_json to_json() const;
};

ReplicateReport aggregate_reports(const std::vector<MetricsReport>& reports,
                                  std::uint64_t base_seed);

}  // namespace oraclesim::sim
