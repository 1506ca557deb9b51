#pragma once

#include <string_view>

#include "oraclesim/lex/classify.hpp"

namespace oraclesim::trust {

enum class RoutingDecision {
  StandardPath,        // served normally
  LowReliabilityFlag,  // served, but marked and surcharged
  Reject,              // never reaches a source; fee refunded
  ComputePath,         // resolved by computation, no source involved
};

inline std::string_view to_string(RoutingDecision decision) {
  switch (decision) {
    case RoutingDecision::StandardPath: return "StandardPath";
    case RoutingDecision::LowReliabilityFlag: return "LowReliabilityFlag";
    case RoutingDecision::Reject: return "Reject";
    case RoutingDecision::ComputePath: return "ComputePath";
  }
  return "?";
}

// Total over QueryCategory: observable/authoritative queries take the
// standard path, interpretive or single-source ones are served flagged,
// unanswerable ones are rejected, computations skip sources entirely.
constexpr RoutingDecision route(lex::QueryCategory category) {
  switch (category) {
    case lex::QueryCategory::Discernible:
    case lex::QueryCategory::Sanctioned:
      return RoutingDecision::StandardPath;
    case lex::QueryCategory::Ambiguous:
    case lex::QueryCategory::Recondite:
      return RoutingDecision::LowReliabilityFlag;
    case lex::QueryCategory::NonEvent:
      return RoutingDecision::Reject;
    case lex::QueryCategory::Computational:
      return RoutingDecision::ComputePath;
  }
  return RoutingDecision::Reject;
}

// Flagged queries pay double.
inline constexpr double kFlaggedFeeMultiplier = 2.0;

constexpr double required_fee(RoutingDecision decision, double base_fee) {
  return decision == RoutingDecision::LowReliabilityFlag
             ? base_fee * kFlaggedFeeMultiplier
             : base_fee;
}

}  // namespace oraclesim::trust
