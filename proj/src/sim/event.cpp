#include "oraclesim/sim/event.hpp"

#include <cassert>
#include <ostream>

namespace oraclesim::sim {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Submit: return "Submit";
    case EventKind::Propose: return "Propose";
    case EventKind::Dispute: return "Dispute";
    case EventKind::Finalize: return "Finalize";
    case EventKind::Audit: return "Audit";
    case EventKind::Expel: return "Expel";
    case EventKind::UrnCommit: return "UrnCommit";
    case EventKind::UrnSelect: return "UrnSelect";
    case EventKind::UrnReveal: return "UrnReveal";
    case EventKind::FeePaid: return "FeePaid";
  }
  return "?";
}

namespace {

using nlohmann::ordered_json;

ordered_json references_json(const std::vector<ReferenceSample>& references) {
  ordered_json out = ordered_json::array();
  for (const ReferenceSample& sample : references) {
    out.push_back({{"source_id", sample.source_id}, {"value", sample.value}});
  }
  return out;
}

struct PayloadWriter {
  ordered_json& out;

  void operator()(const SubmitPayload& p) const {
    out["query_id"] = p.query_id;
    out["petitioner_id"] = p.petitioner_id;
    out["category"] = lex::to_string(p.category);
    out["form"] = trust::to_string(p.form);
    out["tier"] = trust::to_string(p.tier);
    out["routing"] = p.routing;
    out["mechanism"] = p.mechanism;
    out["service_day"] = p.service_day;
  }
  void operator()(const FeePaidPayload& p) const {
    out["query_id"] = p.query_id;
    out["petitioner_id"] = p.petitioner_id;
    out["amount"] = p.amount;
    out["refund"] = p.refund;
  }
  void operator()(const ProposePayload& p) const {
    out["query_id"] = p.query_id;
    out["source_id"] = p.source_id;
    out["value"] = p.value;
    out["truth"] = p.truth;
    out["proposed_at"] = p.proposed_at;
    out["window_end"] = p.window_end;
  }
  void operator()(const DisputePayload& p) const {
    out["query_id"] = p.query_id;
    out["challenger_id"] = p.challenger_id;
    out["references"] = references_json(p.references);
    out["resolved_value"] = p.resolved_value;
    out["overturned"] = p.overturned;
  }
  void operator()(const FinalizePayload& p) const {
    out["query_id"] = p.query_id;
    out["source_id"] = p.source_id;
    out["value"] = p.value;
    out["truth"] = p.truth;
    out["proposed_at"] = p.proposed_at;
    out["window_end"] = p.window_end;
    out["path"] = p.path;
  }
  void operator()(const AuditPayload& p) const {
    out["subject_id"] = p.subject_id;
    out["probe_query"] = p.probe_query;
    out["subject_value"] = p.subject_value;
    out["references"] = references_json(p.references);
    out["reference_median"] = p.reference_median;
    out["deviation"] = p.deviation;
    out["detected"] = p.detected;
    out["subject_corrupt"] = p.subject_corrupt;
  }
  void operator()(const ExpelPayload& p) const {
    out["source_id"] = p.source_id;
    out["invalidated_queries"] = p.invalidated_queries;
  }
  void operator()(const UrnCommitPayload& p) const {
    out["query_id"] = p.query_id;
    out["petitioner_id"] = p.petitioner_id;
    out["gold"] = p.gold_hex;
    out["silver"] = p.silver_hex;
    out["witnesses"] = p.witnesses;
  }
  void operator()(const UrnSelectPayload& p) const {
    out["query_id"] = p.query_id;
    out["beacon_seed"] = p.beacon_seed;
    out["draw"] = p.draw;
    out["chosen"] = p.chosen;
  }
  void operator()(const UrnRevealPayload& p) const {
    out["query_id"] = p.query_id;
    out["verdict"] = p.verdict;
    out["digest"] = p.digest_hex;
  }
};

}  // namespace

nlohmann::ordered_json Event::to_json() const {
  ordered_json out;
  out["at"] = at;
  out["seq"] = seq;
  out["kind"] = to_string(kind);
  std::visit(PayloadWriter{out}, payload);
  return out;
}

void EventLog::append(Day at, EventKind kind, EventPayload payload) {
  // events must be appended in simulation order
  assert(events_.empty() || at > events_.back().at ||
         (at == events_.back().at && next_seq_ > events_.back().seq));
  Event event;
  event.at = at;
  event.seq = next_seq_++;
  event.kind = kind;
  event.payload = std::move(payload);
  events_.push_back(std::move(event));
}

void EventLog::write_jsonl(std::ostream& out) const {
  for (const Event& event : events_) {
    out << event.to_json().dump() << '\n';
  }
}

}  // namespace oraclesim::sim
