#include "oraclesim/sim/engine.hpp"

#include <atomic>
#include <cassert>
#include <cmath>
#include <map>
#include <set>
#include <thread>
#include <unordered_set>

#include "oraclesim/error.hpp"
#include "oraclesim/rng.hpp"
#include "oraclesim/trust/network.hpp"
#include "oraclesim/urn/urn.hpp"

namespace oraclesim::sim {

std::optional<double> freeloader_answer(const WorldView& view,
                                        const std::string& query_id) {
  return view.visible_for(query_id);
}

double lazy_answer(const LazySpec& spec) { return spec.constant; }

bool bribe_active(const BriberSpec& spec, Day day) {
  return day >= spec.from_day && day <= spec.to_day;
}

std::vector<std::string> sybil_identities(const SybilSpec& spec,
                                          int month_index) {
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    ids.push_back("sybil-m" + std::to_string(month_index) + "-" +
                  std::to_string(i));
  }
  return ids;
}

namespace {

constexpr double kValueMatchEps = 1e-12;
constexpr double kTruthLow = 50.0;
constexpr double kTruthHigh = 150.0;

bool values_differ(double a, double b) { return std::abs(a - b) > kValueMatchEps; }

struct QueryInfo {
  std::string petitioner_id;
  lex::QueryCategory category = lex::QueryCategory::Discernible;
  trust::QueryForm form = trust::QueryForm::Binary;
  trust::Tier tier = trust::Tier::Standard;
  trust::RoutingDecision routing = trust::RoutingDecision::StandardPath;
  std::string topic;
  double truth = 0.0;
  bool urn = false;
  Day submitted_at = 0;
  Rng rng{0};  // per-query stream; persists from submission through service
};

struct UrnConsult {
  urn::UrnPair pair;
  urn::UrnOpenings openings;
};

// An answer produced on the service day but still in transit to the contract.
struct InFlightAnswer {
  std::string query_id;
  std::string source_id;
  double value = 0.0;
};

class Engine {
 public:
  Engine(const ScenarioConfig& config, std::uint64_t seed)
      : config_(config),
        seed_(seed),
        scheduler_(config.calendar, config.fees.base) {}

  RunResult run();

 private:
  void setup();
  void month_start(Day day);
  void run_audits(Day day);
  void submit_queries(Day day);
  void submit_one(const PetitionerSpec& petitioner, Day day);
  void serve_due(Day day);
  void record_proposal(Day day, const std::string& query_id,
                       const std::string& source_id, double value);
  void challenge_pending(Day day);
  void finalize_due(Day day);

  double current_bias(const std::string& source_id, Day day) const;
  std::optional<double> source_answer(const std::string& source_id,
                                      const std::string& query_id, double truth,
                                      Day day);
  void note_answer(const std::string& source_id, const std::string& query_id,
                   double value);
  void sample_latency(const QueryInfo& info, Day service_day);
  double probe_truth(const std::string& probe_id) const;
  void emit(Day day, EventKind kind, EventPayload payload) {
    log_.append(day, kind, std::move(payload));
  }

  const ScenarioConfig& config_;
  std::uint64_t seed_;
  trust::Scheduler scheduler_;
  trust::Network network_;
  EventLog log_;

  std::unordered_map<std::string, const SourceSpec*> source_specs_;
  std::unordered_map<std::string, double> lazy_constants_;
  std::unordered_set<std::string> freeloader_sources_;
  std::vector<const BriberSpec*> bribers_;
  std::vector<const SybilSpec*> sybils_;
  std::vector<std::string> topic_universe_;
  std::unordered_map<std::string, Rng> audit_rngs_;
  std::unordered_map<std::string, Bytes> witness_secrets_;  // sorted at setup
  std::vector<std::string> witness_ids_;

  std::unordered_map<std::string, QueryInfo> queries_;
  std::unordered_map<std::string, UrnConsult> urn_consults_;
  std::map<Day, std::vector<InFlightAnswer>> in_flight_;
  std::unordered_map<std::string, double> visible_;
  std::unordered_map<std::string, Rng> petitioner_rngs_;
  std::unordered_map<std::string, std::uint64_t> petitioner_counters_;

  // report accumulators; report_from_log() recomputes these independently
  std::array<std::uint64_t, lex::kCategoryCount> category_counts_{};
  std::array<std::uint64_t, lex::kCategoryCount> latency_samples_{};
  std::array<double, lex::kCategoryCount> latency_sum_{};
  std::uint64_t finalized_ = 0;
  std::uint64_t manipulated_ = 0;
  std::uint64_t expulsions_ = 0;
  double fee_revenue_ = 0.0;
  std::uint64_t freeloader_answers_ = 0, freeloader_copies_ = 0;
  std::uint64_t lazy_answers_ = 0, lazy_matches_ = 0;
  std::unordered_map<std::string, Day> corrupt_start_;
  std::unordered_map<std::string, Day> expelled_at_;
};

void Engine::setup() {
  std::set<std::string> whitelist;
  for (const SourceSpec& source : config_.sources) whitelist.insert(source.id);
  network_ = trust::Network(std::move(whitelist));

  for (const SourceSpec& source : config_.sources) {
    source_specs_[source.id] = &source;
    network_.register_source(source.id, source.domain_tags);
    audit_rngs_.emplace(source.id,
                        Rng(derive_seed(seed_, "audit:" + source.id)));
    if (source.bias != 0.0) {
      corrupt_start_[source.id] = source.corrupt_from ? *source.corrupt_from : 0;
    }
  }
  for (const AdversarySpec& adversary : config_.adversaries) {
    if (const auto* briber = std::get_if<BriberSpec>(&adversary)) {
      bribers_.push_back(briber);
      if (briber->bias != 0.0) corrupt_start_[briber->target] = briber->from_day;
    } else if (const auto* sybil = std::get_if<SybilSpec>(&adversary)) {
      sybils_.push_back(sybil);
    } else if (const auto* freeloader = std::get_if<FreeloaderSpec>(&adversary)) {
      freeloader_sources_.insert(freeloader->source);
    } else if (const auto* lazy = std::get_if<LazySpec>(&adversary)) {
      lazy_constants_[lazy->source] = lazy->constant;
    }
  }

  std::set<std::string> topics;
  for (const SourceSpec& source : config_.sources) {
    if (source.reference_only) continue;
    if (source.domain_tags.empty()) {
      topics.insert("general");
    } else {
      topics.insert(source.domain_tags.begin(), source.domain_tags.end());
    }
  }
  if (topics.empty()) topics.insert("general");
  topic_universe_.assign(topics.begin(), topics.end());

  for (int i = 1; i <= config_.witness_count; ++i) {
    std::string id = "witness-" + std::to_string(i);
    Rng rng(derive_seed(seed_, "witness:" + id));
    Bytes secret(32);
    rng.fill_bytes(secret);
    witness_ids_.push_back(id);
    witness_secrets_.emplace(std::move(id), std::move(secret));
  }

  for (const PetitionerSpec& petitioner : config_.petitioners) {
    petitioner_rngs_.emplace(petitioner.id,
                             Rng(derive_seed(seed_, "petitioner:" + petitioner.id)));
    petitioner_counters_[petitioner.id] = 0;
  }
}

double Engine::current_bias(const std::string& source_id, Day day) const {
  double bias = 0.0;
  auto it = source_specs_.find(source_id);
  if (it != source_specs_.end()) {
    const SourceSpec& spec = *it->second;
    if (spec.bias != 0.0) {
      bool inside = !spec.corrupt_from ||
                    (day >= *spec.corrupt_from && day <= *spec.corrupt_to);
      if (inside) bias = spec.bias;
    }
  }
  for (const BriberSpec* briber : bribers_) {
    if (briber->target == source_id && bribe_active(*briber, day)) {
      bias = briber->bias;
    }
  }
  return bias;
}

std::optional<double> Engine::source_answer(const std::string& source_id,
                                            const std::string& query_id,
                                            double truth, Day day) {
  if (freeloader_sources_.count(source_id) > 0) {
    WorldView view{day, &visible_};
    return freeloader_answer(view, query_id);
  }
  auto lazy_it = lazy_constants_.find(source_id);
  if (lazy_it != lazy_constants_.end()) {
    return lazy_it->second;
  }
  return truth + current_bias(source_id, day);
}

void Engine::note_answer(const std::string& source_id,
                         const std::string& query_id, double value) {
  if (freeloader_sources_.count(source_id) > 0) {
    ++freeloader_answers_;
    auto it = visible_.find(query_id);
    if (it != visible_.end() && !values_differ(it->second, value)) {
      ++freeloader_copies_;
    }
  }
  auto lazy_it = lazy_constants_.find(source_id);
  if (lazy_it != lazy_constants_.end()) {
    ++lazy_answers_;
    if (!values_differ(lazy_it->second, value)) ++lazy_matches_;
  }
}

void Engine::sample_latency(const QueryInfo& info, Day service_day) {
  std::size_t category = lex::category_index(info.category);
  ++latency_samples_[category];
  latency_sum_[category] += static_cast<double>(service_day - info.submitted_at);
}

double Engine::probe_truth(const std::string& probe_id) const {
  Rng rng(derive_seed(seed_, "probe:" + probe_id));
  return rng.uniform(kTruthLow, kTruthHigh);
}

void Engine::month_start(Day day) {
  int month_index = static_cast<int>(day / config_.calendar.month_length);
  for (const SybilSpec* sybil : sybils_) {
    for (const std::string& id : sybil_identities(*sybil, month_index)) {
      try {
        network_.register_source(id, {});
      } catch (const Error& error) {
        // attributable mode: every non-whitelisted identity bounces
        assert(error.code() == ErrorCode::NotWhitelisted);
        (void)error;
      }
    }
  }
  run_audits(day);
}

void Engine::run_audits(Day day) {
  double p = config_.audit_probability_per_month;
  if (p <= 0.0) return;
  int month_index = static_cast<int>(day / config_.calendar.month_length);
  std::vector<std::string> subjects = network_.active_ids();
  for (const std::string& subject : subjects) {
    if (!audit_rngs_.at(subject).bernoulli(p)) continue;

    std::string probe_id = "probe-m" + std::to_string(month_index) + "-" + subject;
    double truth = probe_truth(probe_id);
    std::optional<double> subject_value =
        source_answer(subject, probe_id, truth, day);
    if (!subject_value) continue;  // abstaining subjects cannot be scored

    std::vector<ReferenceSample> references;
    std::vector<double> reference_values;
    for (const std::string& other : network_.active_ids()) {
      if (other == subject) continue;
      std::optional<double> value = source_answer(other, probe_id, truth, day);
      if (!value) continue;
      references.push_back({other, *value});
      reference_values.push_back(*value);
    }
    if (reference_values.size() < trust::kMinAuditReferences) continue;

    trust::AuditOutcome outcome = network_.croesus_audit(
        subject, probe_id, day, *subject_value, reference_values,
        config_.tolerance);

    for (const ReferenceSample& reference : references) {
      note_answer(reference.source_id, probe_id, reference.value);
    }
    note_answer(subject, probe_id, *subject_value);

    AuditPayload payload;
    payload.subject_id = subject;
    payload.probe_query = probe_id;
    payload.subject_value = *subject_value;
    payload.references = std::move(references);
    payload.reference_median = outcome.report.reference_median;
    payload.deviation = outcome.report.deviation;
    payload.detected =
        outcome.report.verdict == trust::AuditVerdict::ManipulationDetected;
    payload.subject_corrupt = current_bias(subject, day) != 0.0;
    bool detected = payload.detected;
    emit(day, EventKind::Audit, std::move(payload));

    if (detected) {
      ++expulsions_;
      expelled_at_.emplace(subject, day);
      emit(day, EventKind::Expel, ExpelPayload{subject, outcome.invalidated});
    }
  }
}

void Engine::submit_queries(Day day) {
  for (const PetitionerSpec& petitioner : config_.petitioners) {
    Rng& rng = petitioner_rngs_.at(petitioner.id);
    double rate = petitioner.queries_per_day;
    auto count = static_cast<std::uint64_t>(rate);
    double fraction = rate - static_cast<double>(count);
    if (fraction > 0.0 && rng.bernoulli(fraction)) ++count;
    for (std::uint64_t i = 0; i < count; ++i) submit_one(petitioner, day);
  }
}

void Engine::submit_one(const PetitionerSpec& petitioner, Day day) {
  std::uint64_t n = petitioner_counters_[petitioner.id]++;
  std::string query_id = petitioner.id + "-q" + std::to_string(n);

  QueryInfo info;
  info.petitioner_id = petitioner.id;
  info.tier = petitioner.tier;
  info.submitted_at = day;
  info.rng = Rng(derive_seed(seed_, "query:" + query_id));

  // fixed per-query draw order: category, form, urn, topic, truth
  double total = 0.0;
  for (const auto& [category, weight] : petitioner.query_mix) total += weight;
  double roll = info.rng.next_double() * total;
  info.category = petitioner.query_mix.begin()->first;
  for (const auto& [category, weight] : petitioner.query_mix) {
    info.category = category;
    if (roll < weight) break;
    roll -= weight;
  }
  info.form = info.rng.bernoulli(petitioner.binary_fraction)
                  ? trust::QueryForm::Binary
                  : trust::QueryForm::Complex;
  info.urn = info.rng.bernoulli(petitioner.urn_fraction);
  if (info.urn) info.form = trust::QueryForm::Complex;
  info.topic =
      topic_universe_[info.rng.below(topic_universe_.size())];
  info.truth = info.rng.uniform(kTruthLow, kTruthHigh);
  info.routing = trust::route(info.category);

  double fee = trust::required_fee(info.routing, config_.fees.base);
  bool rejected = info.routing == trust::RoutingDecision::Reject;

  SubmitPayload submit;
  submit.query_id = query_id;
  submit.petitioner_id = petitioner.id;
  submit.category = info.category;
  submit.form = info.form;
  submit.tier = info.tier;
  submit.routing = std::string(trust::to_string(info.routing));
  submit.mechanism = rejected            ? "rejected"
                     : info.urn          ? "urn"
                     : info.routing == trust::RoutingDecision::ComputePath
                         ? "compute"
                         : "standard";

  if (rejected) {
    submit.service_day = -1;
    std::size_t category = lex::category_index(info.category);
    ++category_counts_[category];
    emit(day, EventKind::Submit, std::move(submit));
    emit(day, EventKind::FeePaid, FeePaidPayload{query_id, petitioner.id, fee, false});
    fee_revenue_ += fee;
    emit(day, EventKind::FeePaid, FeePaidPayload{query_id, petitioner.id, -fee, true});
    fee_revenue_ -= fee;
    return;
  }

  trust::ConsultationRequest request;
  request.petitioner_id = petitioner.id;
  request.query_id = query_id;
  request.query = query_id;  // the simulator carries no natural-language text
  request.category = info.category;
  request.form = info.form;
  request.tier = info.tier;
  request.fee_paid = fee;
  request.submitted_at = day;
  trust::ServiceSlot slot = scheduler_.schedule(request, day);

  submit.service_day = slot.day;
  std::size_t category = lex::category_index(info.category);
  ++category_counts_[category];
  emit(day, EventKind::Submit, std::move(submit));
  emit(day, EventKind::FeePaid, FeePaidPayload{query_id, petitioner.id, fee, false});
  fee_revenue_ += fee;

  if (info.urn) {
    auto [pair, openings] = urn::make_urn_pair(
        to_bytes("option-a:" + query_id), to_bytes("option-b:" + query_id),
        info.rng, day);
    int attested = 0;
    for (const std::string& witness_id : witness_ids_) {
      const Bytes& secret = witness_secrets_.at(witness_id);
      urn::WitnessAttestation attestation =
          urn::attest(witness_id, secret, pair, day);
      assert(urn::verify_attestation(attestation, secret, pair));
      (void)attestation;
      ++attested;
    }
    UrnCommitPayload payload;
    payload.query_id = query_id;
    payload.petitioner_id = petitioner.id;
    payload.gold_hex = pair.gold.hex();
    payload.silver_hex = pair.silver.hex();
    payload.witnesses = attested;
    emit(day, EventKind::UrnCommit, std::move(payload));
    urn_consults_.emplace(query_id, UrnConsult{pair, std::move(openings)});
  }

  queries_.emplace(std::move(query_id), std::move(info));
}

void Engine::record_proposal(Day day, const std::string& query_id,
                             const std::string& source_id, double value) {
  const QueryInfo& info = queries_.at(query_id);
  network_.propose(query_id, source_id, value, day,
                   config_.dispute_window_days);
  note_answer(source_id, query_id, value);
  emit(day, EventKind::Propose,
       ProposePayload{query_id, source_id, value, info.truth, day,
                      day + config_.dispute_window_days});
  visible_[query_id] = value;
  sample_latency(info, day);
}

void Engine::serve_due(Day day) {
  // answers dispatched on earlier days land before today's consultations
  auto arrivals = in_flight_.find(day);
  if (arrivals != in_flight_.end()) {
    for (const InFlightAnswer& answer : arrivals->second) {
      if (network_.find(answer.source_id) == nullptr ||
          network_.find(answer.source_id)->status != trust::SourceStatus::Active) {
        continue;  // expelled mid-flight; the answer is dropped
      }
      record_proposal(day, answer.query_id, answer.source_id, answer.value);
    }
    in_flight_.erase(arrivals);
  }

  for (const trust::ConsultationRequest& request : scheduler_.take_due(day)) {
    QueryInfo& info = queries_.at(request.query_id);

    if (info.urn) {
      const UrnConsult& consult = urn_consults_.at(request.query_id);
      std::uint64_t beacon_seed =
          derive_seed(seed_, "beacon:" + request.query_id);
      urn::Selection selection = urn::select(consult.pair, beacon_seed);
      emit(day, EventKind::UrnSelect,
           UrnSelectPayload{request.query_id, beacon_seed, selection.draw,
                            std::string(to_string(selection.chosen))});
      const urn::Opening& opening = selection.chosen == urn::UrnSide::Gold
                                        ? consult.openings.gold
                                        : consult.openings.silver;
      urn::RevealOutcome outcome = urn::reveal_verify(
          consult.pair, selection, opening.message, opening.nonce);
      const urn::Commitment& chosen = selection.chosen == urn::UrnSide::Gold
                                          ? consult.pair.gold
                                          : consult.pair.silver;
      emit(day, EventKind::UrnReveal,
           UrnRevealPayload{request.query_id,
                            std::string(to_string(outcome.verdict)),
                            chosen.hex()});
      sample_latency(info, day);
      continue;
    }

    if (info.routing == trust::RoutingDecision::ComputePath) {
      // verifiable computation: resolved by the contract itself, no window
      emit(day, EventKind::Finalize,
           FinalizePayload{request.query_id, "", info.truth, info.truth, day,
                           day, "compute"});
      ++finalized_;
      sample_latency(info, day);
      continue;
    }

    // pick an eligible source; freeloaders may abstain and pass the turn on
    std::vector<std::string> eligible;
    for (const std::string& id : network_.active_ids()) {
      const SourceSpec* spec = source_specs_.at(id);
      if (spec->reference_only) continue;
      bool matches = spec->domain_tags.empty()
                         ? info.topic == "general"
                         : spec->domain_tags.count(info.topic) > 0;
      if (matches) eligible.push_back(id);
    }
    if (eligible.empty()) continue;  // unserved; the submission stays logged

    std::size_t start = info.rng.below(eligible.size());
    std::optional<double> value;
    std::string chosen;
    for (std::size_t k = 0; k < eligible.size(); ++k) {
      const std::string& candidate = eligible[(start + k) % eligible.size()];
      value = source_answer(candidate, request.query_id, info.truth, day);
      if (value) {
        chosen = candidate;
        break;
      }
    }
    if (!value) continue;  // every eligible source abstained

    Day delay = source_specs_.at(chosen)->delay_days;
    if (delay > 0) {
      in_flight_[day + delay].push_back({request.query_id, chosen, *value});
    } else {
      record_proposal(day, request.query_id, chosen, *value);
    }
  }
}

void Engine::challenge_pending(Day day) {
  if (config_.challenge_probability <= 0.0) return;
  for (const trust::PendingAnswer* pending : network_.pending_answers()) {
    if (day >= pending->window_end) continue;
    const QueryInfo& info = queries_.at(pending->query_id);
    double value = std::get<double>(pending->value);
    if (!values_differ(value, info.truth)) continue;  // nothing to contest

    Rng challenge_rng(derive_seed(
        seed_, "challenge:" + pending->query_id + ":" + std::to_string(day)));
    if (!challenge_rng.bernoulli(config_.challenge_probability)) continue;

    std::string challenger;
    std::vector<ReferenceSample> references;
    std::vector<trust::AnswerValue> reference_values;
    for (const std::string& other : network_.active_ids()) {
      if (other == pending->source_id) continue;
      if (challenger.empty()) challenger = other;
      std::optional<double> ref =
          source_answer(other, pending->query_id, info.truth, day);
      if (!ref) continue;
      references.push_back({other, *ref});
      reference_values.emplace_back(*ref);
    }
    if (challenger.empty() || reference_values.empty()) continue;

    std::string query_id = pending->query_id;
    std::string proposer = pending->source_id;
    network_.dispute(query_id, challenger, day);
    trust::EscalationResult resolution = network_.resolve_escalation(
        query_id, reference_values, config_.tolerance);
    if (resolution.overturned) {
      network_.update_reputation(proposer, trust::ReputationEvent::AnswerOverturned);
    }
    for (const ReferenceSample& reference : references) {
      note_answer(reference.source_id, query_id, reference.value);
    }
    double resolved_value = std::get<double>(resolution.resolved);
    emit(day, EventKind::Dispute,
         DisputePayload{query_id, challenger, std::move(references),
                        resolved_value, resolution.overturned});
    visible_[query_id] = resolved_value;
  }
}

void Engine::finalize_due(Day day) {
  std::vector<std::string> due;
  for (const trust::PendingAnswer* pending : network_.pending_answers()) {
    if (pending->window_end <= day) due.push_back(pending->query_id);
  }
  for (const std::string& query_id : due) {
    auto [status, answer] = network_.finalize(query_id, day);
    assert(status == trust::FinalizeStatus::Finalized);
    if (status != trust::FinalizeStatus::Finalized) continue;
    network_.update_reputation(answer->source_id,
                               trust::ReputationEvent::AnswerFinalized);
    const QueryInfo& info = queries_.at(query_id);
    double value = std::get<double>(answer->value);
    emit(day, EventKind::Finalize,
         FinalizePayload{query_id, answer->source_id, value, info.truth,
                         answer->proposed_at, answer->window_end, "standard"});
    ++finalized_;
    if (values_differ(value, info.truth)) ++manipulated_;
  }
}

RunResult Engine::run() {
  setup();
  for (Day day = 0; day < config_.duration_days; ++day) {
    if (config_.calendar.is_month_start(day)) month_start(day);
    submit_queries(day);
    serve_due(day);
    challenge_pending(day);
    finalize_due(day);
  }

  MetricsReport report;
  report.run_seed = seed_;
  for (std::size_t i = 0; i < lex::kCategoryCount; ++i) {
    report.per_category[i].count = category_counts_[i];
    if (latency_samples_[i] > 0) {
      report.per_category[i].mean_latency_days =
          latency_sum_[i] / static_cast<double>(latency_samples_[i]);
    }
  }
  if (finalized_ > 0) {
    report.manipulation_success_rate =
        static_cast<double>(manipulated_) / static_cast<double>(finalized_);
  }
  if (!corrupt_start_.empty()) {
    std::uint64_t detected = 0;
    double latency_total = 0.0;
    for (const auto& [source_id, start] : corrupt_start_) {
      auto it = expelled_at_.find(source_id);
      if (it == expelled_at_.end()) continue;
      ++detected;
      latency_total += static_cast<double>(it->second - start);
    }
    report.detection_rate = static_cast<double>(detected) /
                            static_cast<double>(corrupt_start_.size());
    if (detected > 0) {
      report.mean_detection_latency_days =
          latency_total / static_cast<double>(detected);
    }
  }
  report.expulsions = expulsions_;
  report.fee_revenue = fee_revenue_;
  if (freeloader_answers_ > 0) {
    report.freeloader_copy_rate = static_cast<double>(freeloader_copies_) /
                                  static_cast<double>(freeloader_answers_);
  }
  if (lazy_answers_ > 0) {
    report.lazy_constant_rate =
        static_cast<double>(lazy_matches_) / static_cast<double>(lazy_answers_);
  }
  return RunResult{std::move(report), std::move(log_)};
}

}  // namespace

RunResult run_with_seed(const ScenarioConfig& config, std::uint64_t seed) {
  config.validate();
  Engine engine(config, seed);
  return engine.run();
}

ReplicateReport replicate(const ScenarioConfig& config, int n_runs, int jobs,
                          const RunCallback& callback) {
  if (n_runs < 1) {
    throw Error(ErrorCode::InvalidConfig, "n_runs: must be >= 1");
  }
  config.validate();

  std::vector<MetricsReport> reports(static_cast<std::size_t>(n_runs));
  if (jobs <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    jobs = hw == 0 ? 1 : static_cast<int>(hw);
  }
  jobs = std::min(jobs, n_runs);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int index = next.fetch_add(1);
      if (index >= n_runs) return;
      RunResult result = run_with_seed(
          config, config.seed + static_cast<std::uint64_t>(index));
      if (callback) callback(index, result);
      reports[static_cast<std::size_t>(index)] = std::move(result.report);
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (std::thread& thread : pool) thread.join();
  }
  return aggregate_reports(reports, config.seed);
}

}  // namespace oraclesim::sim
