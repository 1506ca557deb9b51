#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "oraclesim/lex/classify.hpp"
#include "oraclesim/trust/schedule.hpp"

namespace oraclesim::sim {

using Day = trust::Day;

enum class EventKind {
  Submit,
  Propose,
  Dispute,
  Finalize,
  Audit,
  Expel,
  UrnCommit,
  UrnSelect,
  UrnReveal,
  FeePaid,
};

std::string_view to_string(EventKind kind);

struct SubmitPayload {
  std::string query_id;
  std::string petitioner_id;
  lex::QueryCategory category = lex::QueryCategory::Discernible;
  trust::QueryForm form = trust::QueryForm::Binary;
  trust::Tier tier = trust::Tier::Standard;
  std::string routing;    // RoutingDecision name
  std::string mechanism;  // "standard" | "compute" | "urn" | "rejected"
  Day service_day = -1;   // -1 when rejected
};

struct FeePaidPayload {
  std::string query_id;
  std::string petitioner_id;
  double amount = 0.0;  // negative amounts are refunds
  bool refund = false;
};

struct ProposePayload {
  std::string query_id;
  std::string source_id;
  double value = 0.0;
  double truth = 0.0;
  Day proposed_at = 0;
  Day window_end = 0;
};

struct ReferenceSample {
  std::string source_id;
  double value = 0.0;
};

struct DisputePayload {
  std::string query_id;
  std::string challenger_id;
  std::vector<ReferenceSample> references;
  double resolved_value = 0.0;
  bool overturned = false;
};

struct FinalizePayload {
  std::string query_id;
  std::string source_id;  // empty on the compute path
  double value = 0.0;
  double truth = 0.0;
  Day proposed_at = 0;
  Day window_end = 0;
  std::string path;  // "standard" | "compute"
};

struct AuditPayload {
  std::string subject_id;
  std::string probe_query;
  double subject_value = 0.0;
  std::vector<ReferenceSample> references;
  double reference_median = 0.0;
  double deviation = 0.0;
  bool detected = false;
  bool subject_corrupt = false;  // was the subject biased at audit time
};

struct ExpelPayload {
  std::string source_id;
  std::vector<std::string> invalidated_queries;
};

struct UrnCommitPayload {
  std::string query_id;
  std::string petitioner_id;
  std::string gold_hex;
  std::string silver_hex;
  int witnesses = 0;
};

struct UrnSelectPayload {
  std::string query_id;
  std::uint64_t beacon_seed = 0;
  std::uint8_t draw = 0;
  std::string chosen;  // "Gold" | "Silver"
};

struct UrnRevealPayload {
  std::string query_id;
  std::string verdict;  // "Accepted" | "Rejected"
  std::string digest_hex;
};

using EventPayload =
    std::variant<SubmitPayload, FeePaidPayload, ProposePayload, DisputePayload,
                 FinalizePayload, AuditPayload, ExpelPayload, UrnCommitPayload,
                 UrnSelectPayload, UrnRevealPayload>;

struct Event {
  Day at = 0;
  std::uint64_t seq = 0;  // insertion sequence, unique per run
  EventKind kind = EventKind::Submit;
  EventPayload payload;

  nlohmann::ordered_json to_json() const;
};

// Append-only log; entries must arrive in nondecreasing (day, seq) order.
class EventLog {
 public:
  void append(Day at, EventKind kind, EventPayload payload);

  const std::vector<Event>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  // One JSON object per line.
  void write_jsonl(std::ostream& out) const;

 private:
  std::vector<Event> events_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace oraclesim::sim
