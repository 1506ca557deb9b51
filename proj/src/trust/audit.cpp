#include "oraclesim/trust/audit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "oraclesim/error.hpp"

namespace oraclesim::trust {

double median(std::vector<double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::TooFewReferences, "median of an empty set");
  }
  std::sort(values.begin(), values.end());
  std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

double relative_deviation(double subject, double reference_median) {
  double scale = std::max(std::abs(reference_median), kDeviationEpsilon);
  return std::abs(subject - reference_median) / scale;
}

AuditReport evaluate_audit(std::string subject_id, std::string probe_query,
                           Day scheduled_time, double subject_value,
                           std::vector<double> reference_values,
                           double tolerance) {
  if (reference_values.size() < kMinAuditReferences) {
    throw Error(ErrorCode::TooFewReferences,
                "audit needs at least 3 reference values, got " +
                    std::to_string(reference_values.size()));
  }
  AuditReport report;
  report.subject_id = std::move(subject_id);
  report.probe_query = std::move(probe_query);
  report.scheduled_time = scheduled_time;
  report.subject_value = subject_value;
  report.reference_median = median(reference_values);
  report.reference_values = std::move(reference_values);
  report.deviation = relative_deviation(subject_value, report.reference_median);
  report.verdict = report.deviation > tolerance
                       ? AuditVerdict::ManipulationDetected
                       : AuditVerdict::Pass;
  return report;
}

AnswerValue resolve_reference_vote(std::span<const AnswerValue> references) {
  if (references.empty()) {
    throw Error(ErrorCode::TooFewReferences, "vote over an empty reference set");
  }
  if (std::holds_alternative<double>(references.front())) {
    std::vector<double> values;
    values.reserve(references.size());
    for (const AnswerValue& v : references) values.push_back(std::get<double>(v));
    return median(std::move(values));
  }
  std::map<std::string, std::size_t> tally;
  for (const AnswerValue& v : references) ++tally[std::get<std::string>(v)];
  auto best = tally.begin();
  for (auto it = tally.begin(); it != tally.end(); ++it) {
    if (it->second > best->second) best = it;  // ties keep the earlier key
  }
  return best->first;
}

bool overturned(const AnswerValue& proposed, const AnswerValue& resolved,
                double tolerance) {
  if (proposed.index() != resolved.index()) return true;
  if (std::holds_alternative<double>(proposed)) {
    return relative_deviation(std::get<double>(proposed),
                              std::get<double>(resolved)) > tolerance;
  }
  return std::get<std::string>(proposed) != std::get<std::string>(resolved);
}

}  // namespace oraclesim::trust
