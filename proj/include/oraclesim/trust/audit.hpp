#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oraclesim/trust/calendar.hpp"

namespace oraclesim::trust {

// Answers are numeric or categorical.
using AnswerValue = std::variant<double, std::string>;

inline constexpr double kDeviationEpsilon = 1e-9;
inline constexpr std::size_t kMinAuditReferences = 3;

enum class AuditVerdict { Pass, ManipulationDetected };

inline std::string_view to_string(AuditVerdict verdict) {
  return verdict == AuditVerdict::Pass ? "Pass" : "ManipulationDetected";
}

// Outcome of probing one subject against simultaneously queried references.
struct AuditReport {
  std::string subject_id;
  std::string probe_query;
  Day scheduled_time = 0;
  double subject_value = 0.0;
  std::vector<double> reference_values;
  double reference_median = 0.0;
  double deviation = 0.0;  // |subject - median| / max(|median|, eps)
  AuditVerdict verdict = AuditVerdict::Pass;
};

// Median of the values; even counts average the middle two.
double median(std::vector<double> values);

double relative_deviation(double subject, double reference_median);

// Pure audit arithmetic: requires >= 3 references (TooFewReferences
// otherwise); detects iff the deviation exceeds the tolerance.
AuditReport evaluate_audit(std::string subject_id, std::string probe_query,
                           Day scheduled_time, double subject_value,
                           std::vector<double> reference_values,
                           double tolerance);

// Fallback multi-source vote used when a pending answer is disputed:
// median for numeric answers, plurality (lexicographic tie-break) for
// categorical ones. Requires at least one reference.
AnswerValue resolve_reference_vote(std::span<const AnswerValue> references);

// Was the proposed answer wrong, judged against the vote result? Numeric
// answers use the audit deviation rule; categorical ones require equality.
bool overturned(const AnswerValue& proposed, const AnswerValue& resolved,
                double tolerance);

}  // namespace oraclesim::trust
