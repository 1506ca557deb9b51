#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "oraclesim/trust/audit.hpp"
#include "oraclesim/trust/source.hpp"

namespace oraclesim::trust {

enum class AnswerState { Pending, Finalized, Escalated };

inline std::string_view to_string(AnswerState state) {
  switch (state) {
    case AnswerState::Pending: return "Pending";
    case AnswerState::Finalized: return "Finalized";
    case AnswerState::Escalated: return "Escalated";
  }
  return "?";
}

// An optimistically proposed answer inside the time-threshold pipeline.
struct PendingAnswer {
  std::string query_id;
  std::string source_id;
  AnswerValue value;
  Day proposed_at = 0;
  Day window_end = 0;  // proposed_at + dispute_window
  bool disputed = false;
  AnswerState state = AnswerState::Pending;
};

enum class FinalizeStatus { Finalized, NotYetFinal };

enum class ReputationEvent { AnswerFinalized, AnswerOverturned };

struct EscalationResult {
  AnswerValue resolved;
  bool overturned = false;
};

struct AuditOutcome {
  AuditReport report;
  std::vector<std::string> invalidated;  // pending answers dropped by expulsion
};

// Single-writer state machine over sources and pending answers. All mutating
// calls must come from one logical owner in event order; snapshots taken via
// to_json may be shared freely.
class Network {
 public:
  // Open registration; for tests.
  Network() = default;

  // Attributable mode: only whitelisted identities may register.
  explicit Network(std::set<std::string> whitelist)
      : whitelist_(std::move(whitelist)) {}

  // Errors: NotWhitelisted, DuplicateIdentity, IdentityExpelled. An expelled
  // identity can never register again.
  const OracleSource& register_source(const std::string& id,
                                      std::set<std::string> domain_tags);

  const OracleSource* find(const std::string& id) const;
  bool is_expelled(const std::string& id) const {
    return expelled_.count(id) > 0;
  }

  // Ids of Active sources, sorted.
  std::vector<std::string> active_ids() const;

  // Errors: SourceExpelled, SourceInactive, DuplicateQuery.
  const PendingAnswer& propose(const std::string& query_id,
                               const std::string& source_id, AnswerValue value,
                               Day now, Day dispute_window);

  // Escalates a pending answer. Errors: UnknownQuery, AlreadyResolved (not
  // pending anymore), WindowClosed (now >= window_end).
  const PendingAnswer& dispute(const std::string& query_id,
                               const std::string& challenger_id, Day now);

  // Finalizes iff now >= window_end and the answer was never disputed;
  // otherwise reports NotYetFinal and leaves the answer unchanged.
  std::pair<FinalizeStatus, const PendingAnswer*> finalize(
      const std::string& query_id, Day now);

  // Resolves an escalated answer by reference vote; reports whether the
  // proposed value was overturned. Errors: UnknownQuery, InvalidRequest
  // (answer not escalated), TooFewReferences.
  EscalationResult resolve_escalation(const std::string& query_id,
                                      std::span<const AnswerValue> references,
                                      double tolerance);

  // Simultaneous probe of a subject against >= 3 reference values; a
  // detected manipulation expels the subject on the spot.
  // Errors: SourceInactive, SourceExpelled, TooFewReferences.
  AuditOutcome croesus_audit(const std::string& subject_id,
                             std::string probe_query, Day scheduled_time,
                             double subject_value,
                             std::vector<double> reference_values,
                             double tolerance);

  // Permanent removal; idempotent. Invalidates (drops) the source's
  // non-finalized answers and bars the id forever. Returns the invalidated
  // query ids.
  std::vector<std::string> expel(const std::string& source_id);

  // x1.01 on a finalized answer (capped), x0.8 on an overturned one.
  // Reputation only; no currency is ever deducted. Errors: SourceExpelled,
  // SourceInactive.
  double update_reputation(const std::string& source_id, ReputationEvent event);

  const PendingAnswer* answer(const std::string& query_id) const;

  // Pending (not finalized, not escalated) answers sorted by query id.
  std::vector<const PendingAnswer*> pending_answers() const;

  // Checkpointing.
  nlohmann::ordered_json to_json() const;
  static Network from_json(const nlohmann::json& snapshot);

 private:
  OracleSource& active_or_throw(const std::string& id);

  std::optional<std::set<std::string>> whitelist_;
  std::map<std::string, OracleSource> sources_;
  std::set<std::string> expelled_;
  std::map<std::string, PendingAnswer> answers_;
};

}  // namespace oraclesim::trust
