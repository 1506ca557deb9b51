#include "oraclesim/trust/network.hpp"

#include <algorithm>

#include "oraclesim/error.hpp"

namespace oraclesim::trust {

const OracleSource& Network::register_source(const std::string& id,
                                             std::set<std::string> domain_tags) {
  if (expelled_.count(id) > 0) {
    throw Error(ErrorCode::IdentityExpelled,
                "identity '" + id + "' was expelled and is barred for good");
  }
  if (sources_.count(id) > 0) {
    throw Error(ErrorCode::DuplicateIdentity,
                "identity '" + id + "' is already registered");
  }
  if (whitelist_ && whitelist_->count(id) == 0) {
    throw Error(ErrorCode::NotWhitelisted,
                "identity '" + id + "' is not on the whitelist");
  }
  OracleSource source;
  source.id = id;
  source.domain_tags = std::move(domain_tags);
  source.status = SourceStatus::Active;
  source.reputation = kInitialReputation;
  return sources_.emplace(id, std::move(source)).first->second;
}

const OracleSource* Network::find(const std::string& id) const {
  auto it = sources_.find(id);
  return it == sources_.end() ? nullptr : &it->second;
}

std::vector<std::string> Network::active_ids() const {
  std::vector<std::string> ids;
  for (const auto& [id, source] : sources_) {
    if (source.status == SourceStatus::Active) ids.push_back(id);
  }
  return ids;  // sources_ is ordered, so ids are sorted
}

OracleSource& Network::active_or_throw(const std::string& id) {
  if (expelled_.count(id) > 0) {
    throw Error(ErrorCode::SourceExpelled, "source '" + id + "' is expelled");
  }
  auto it = sources_.find(id);
  if (it == sources_.end()) {
    throw Error(ErrorCode::SourceInactive, "source '" + id + "' is not registered");
  }
  return it->second;
}

const PendingAnswer& Network::propose(const std::string& query_id,
                                      const std::string& source_id,
                                      AnswerValue value, Day now,
                                      Day dispute_window) {
  active_or_throw(source_id);
  if (answers_.count(query_id) > 0) {
    throw Error(ErrorCode::DuplicateQuery,
                "query '" + query_id + "' already has an answer on record");
  }
  PendingAnswer answer;
  answer.query_id = query_id;
  answer.source_id = source_id;
  answer.value = std::move(value);
  answer.proposed_at = now;
  answer.window_end = now + dispute_window;
  return answers_.emplace(query_id, std::move(answer)).first->second;
}

const PendingAnswer& Network::dispute(const std::string& query_id,
                                      const std::string& challenger_id,
                                      Day now) {
  (void)challenger_id;  // recorded by the caller's event log
  auto it = answers_.find(query_id);
  if (it == answers_.end()) {
    throw Error(ErrorCode::UnknownQuery, "no answer for query '" + query_id + "'");
  }
  PendingAnswer& answer = it->second;
  if (answer.state != AnswerState::Pending) {
    throw Error(ErrorCode::AlreadyResolved,
                "answer for '" + query_id + "' is " +
                    std::string(to_string(answer.state)));
  }
  if (now >= answer.window_end) {
    throw Error(ErrorCode::WindowClosed,
                "dispute window for '" + query_id + "' closed at day " +
                    std::to_string(answer.window_end));
  }
  answer.disputed = true;
  answer.state = AnswerState::Escalated;
  return answer;
}

std::pair<FinalizeStatus, const PendingAnswer*> Network::finalize(
    const std::string& query_id, Day now) {
  auto it = answers_.find(query_id);
  if (it == answers_.end()) {
    throw Error(ErrorCode::UnknownQuery, "no answer for query '" + query_id + "'");
  }
  PendingAnswer& answer = it->second;
  if (answer.state != AnswerState::Pending || answer.disputed ||
      now < answer.window_end) {
    return {FinalizeStatus::NotYetFinal, &answer};
  }
  answer.state = AnswerState::Finalized;
  return {FinalizeStatus::Finalized, &answer};
}

EscalationResult Network::resolve_escalation(
    const std::string& query_id, std::span<const AnswerValue> references,
    double tolerance) {
  auto it = answers_.find(query_id);
  if (it == answers_.end()) {
    throw Error(ErrorCode::UnknownQuery, "no answer for query '" + query_id + "'");
  }
  if (it->second.state != AnswerState::Escalated) {
    throw Error(ErrorCode::InvalidRequest,
                "answer for '" + query_id + "' is not escalated");
  }
  EscalationResult result;
  result.resolved = resolve_reference_vote(references);
  result.overturned = overturned(it->second.value, result.resolved, tolerance);
  return result;
}

AuditOutcome Network::croesus_audit(const std::string& subject_id,
                                    std::string probe_query, Day scheduled_time,
                                    double subject_value,
                                    std::vector<double> reference_values,
                                    double tolerance) {
  active_or_throw(subject_id);
  AuditOutcome outcome;
  outcome.report =
      evaluate_audit(subject_id, std::move(probe_query), scheduled_time,
                     subject_value, std::move(reference_values), tolerance);
  if (outcome.report.verdict == AuditVerdict::ManipulationDetected) {
    outcome.invalidated = expel(subject_id);
  }
  return outcome;
}

std::vector<std::string> Network::expel(const std::string& source_id) {
  expelled_.insert(source_id);
  auto it = sources_.find(source_id);
  if (it != sources_.end()) it->second.status = SourceStatus::Expelled;

  std::vector<std::string> invalidated;
  for (auto answer_it = answers_.begin(); answer_it != answers_.end();) {
    const PendingAnswer& answer = answer_it->second;
    if (answer.source_id == source_id && answer.state != AnswerState::Finalized) {
      invalidated.push_back(answer.query_id);
      answer_it = answers_.erase(answer_it);
    } else {
      ++answer_it;
    }
  }
  return invalidated;
}

double Network::update_reputation(const std::string& source_id,
                                  ReputationEvent event) {
  OracleSource& source = active_or_throw(source_id);
  switch (event) {
    case ReputationEvent::AnswerFinalized:
      source.reputation = std::min(source.reputation * kFinalizedMultiplier,
                                   kReputationCap);
      break;
    case ReputationEvent::AnswerOverturned:
      source.reputation *= kOverturnedMultiplier;
      break;
  }
  return source.reputation;
}

const PendingAnswer* Network::answer(const std::string& query_id) const {
  auto it = answers_.find(query_id);
  return it == answers_.end() ? nullptr : &it->second;
}

std::vector<const PendingAnswer*> Network::pending_answers() const {
  std::vector<const PendingAnswer*> pending;
  for (const auto& [query_id, answer] : answers_) {
    if (answer.state == AnswerState::Pending) pending.push_back(&answer);
  }
  return pending;  // answers_ is ordered by query id
}

namespace {

nlohmann::ordered_json value_to_json(const AnswerValue& value) {
  if (std::holds_alternative<double>(value)) {
    return std::get<double>(value);
  }
  return std::get<std::string>(value);
}

AnswerValue value_from_json(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.get<double>();
}

}  // namespace

nlohmann::ordered_json Network::to_json() const {
  nlohmann::ordered_json snapshot;
  snapshot["whitelist"] = nlohmann::ordered_json::array();
  if (whitelist_) {
    for (const std::string& id : *whitelist_) snapshot["whitelist"].push_back(id);
  } else {
    snapshot["whitelist"] = nullptr;
  }
  snapshot["sources"] = nlohmann::ordered_json::array();
  for (const auto& [id, source] : sources_) {
    snapshot["sources"].push_back(
        {{"id", source.id},
         {"domain_tags", source.domain_tags},
         {"status", to_string(source.status)},
         {"reputation", source.reputation},
         {"bias", source.bias}});
  }
  snapshot["expelled"] = expelled_;
  snapshot["answers"] = nlohmann::ordered_json::array();
  for (const auto& [query_id, answer] : answers_) {
    snapshot["answers"].push_back({{"query_id", answer.query_id},
                                   {"source_id", answer.source_id},
                                   {"value", value_to_json(answer.value)},
                                   {"proposed_at", answer.proposed_at},
                                   {"window_end", answer.window_end},
                                   {"disputed", answer.disputed},
                                   {"state", to_string(answer.state)}});
  }
  return snapshot;
}

Network Network::from_json(const nlohmann::json& snapshot) {
  Network network;
  if (!snapshot.at("whitelist").is_null()) {
    network.whitelist_ =
        snapshot.at("whitelist").get<std::set<std::string>>();
  }
  for (const auto& entry : snapshot.at("sources")) {
    OracleSource source;
    source.id = entry.at("id").get<std::string>();
    source.domain_tags = entry.at("domain_tags").get<std::set<std::string>>();
    source.status = entry.at("status").get<std::string>() == "Expelled"
                        ? SourceStatus::Expelled
                        : SourceStatus::Active;
    source.reputation = entry.at("reputation").get<double>();
    source.bias = entry.at("bias").get<double>();
    network.sources_.emplace(source.id, std::move(source));
  }
  network.expelled_ = snapshot.at("expelled").get<std::set<std::string>>();
  for (const auto& entry : snapshot.at("answers")) {
    PendingAnswer answer;
    answer.query_id = entry.at("query_id").get<std::string>();
    answer.source_id = entry.at("source_id").get<std::string>();
    answer.value = value_from_json(entry.at("value"));
    answer.proposed_at = entry.at("proposed_at").get<Day>();
    answer.window_end = entry.at("window_end").get<Day>();
    answer.disputed = entry.at("disputed").get<bool>();
    std::string state = entry.at("state").get<std::string>();
    answer.state = state == "Finalized"  ? AnswerState::Finalized
                   : state == "Escalated" ? AnswerState::Escalated
                                          : AnswerState::Pending;
    network.answers_.emplace(answer.query_id, std::move(answer));
  }
  return network;
}

}  // namespace oraclesim::trust
