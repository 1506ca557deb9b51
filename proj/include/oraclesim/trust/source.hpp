#pragma once

#include <set>
#include <string>
#include <string_view>

namespace oraclesim::trust {

// Expelled is absorbing: there is no transition back to Active.
enum class SourceStatus { Active, Expelled };

inline std::string_view to_string(SourceStatus status) {
  return status == SourceStatus::Active ? "Active" : "Expelled";
}

// An attributable data source. `bias` is a simulation-only behavior knob:
// the offset the source adds to the true value while corrupted. It is never
// visible to the protocol itself.
struct OracleSource {
  std::string id;
  std::set<std::string> domain_tags;
  SourceStatus status = SourceStatus::Active;
  double reputation = 1.0;
  double bias = 0.0;
};

inline constexpr double kInitialReputation = 1.0;
inline constexpr double kReputationCap = 10.0;
inline constexpr double kFinalizedMultiplier = 1.01;
inline constexpr double kOverturnedMultiplier = 0.8;

}  // namespace oraclesim::trust
