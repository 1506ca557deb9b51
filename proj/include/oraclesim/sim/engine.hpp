#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oraclesim/sim/event.hpp"
#include "oraclesim/sim/metrics.hpp"
#include "oraclesim/sim/scenario.hpp"

namespace oraclesim::sim {

// What an adversary can see of the world: the day and every answer already
// made public (proposed or resolved values, keyed by query id).
struct WorldView {
  Day day = 0;
  const std::unordered_map<std::string, double>* visible_answers = nullptr;

  std::optional<double> visible_for(const std::string& query_id) const {
    if (visible_answers == nullptr) return std::nullopt;
    auto it = visible_answers->find(query_id);
    if (it == visible_answers->end()) return std::nullopt;
    return it->second;
  }
};

// Adversary behavior primitives, exercised by the engine once per answer
// opportunity.

// Copies the latest visible answer to the same query; abstains (nullopt)
// when nothing is visible yet. Simultaneous probes therefore starve it.
std::optional<double> freeloader_answer(const WorldView& view,
                                        const std::string& query_id);

// The same constant regardless of the question.
double lazy_answer(const LazySpec& spec);

// Is the bribe forcing the target's bias on this day?
bool bribe_active(const BriberSpec& spec, Day day);

// Fresh identities the Sybil tries to register this month. None of them is
// whitelisted, so in attributable mode every attempt is rejected.
std::vector<std::string> sybil_identities(const SybilSpec& spec, int month_index);

struct RunResult {
  MetricsReport report;
  EventLog log;
};

// One deterministic run; (config, seed) fully determine the event log.
// Throws Error(InvalidConfig) on a bad config.
RunResult run_with_seed(const ScenarioConfig& config, std::uint64_t seed);

inline RunResult run(const ScenarioConfig& config) {
  return run_with_seed(config, config.seed);
}

// Called once per finished run, possibly from a worker thread; must be
// thread-safe.
using RunCallback = std::function<void(int run_index, const RunResult& result)>;

// n_runs independent runs seeded seed, seed+1, ...; aggregated means and
// sample standard deviations. jobs <= 0 uses the hardware concurrency.
ReplicateReport replicate(const ScenarioConfig& config, int n_runs,
                          int jobs = 0, const RunCallback& callback = nullptr);

}  // namespace oraclesim::sim
