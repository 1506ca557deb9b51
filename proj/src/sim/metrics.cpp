#include "oraclesim/sim/metrics.hpp"

#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace oraclesim::sim {

namespace {

constexpr double kValueMatchEps = 1e-12;

bool values_differ(double a, double b) { return std::abs(a - b) > kValueMatchEps; }

}  // namespace

nlohmann::ordered_json MetricsReport::to_json() const {
  nlohmann::ordered_json per_cat;
  for (std::size_t i = 0; i < lex::kCategoryCount; ++i) {
    per_cat[std::string(lex::to_string(lex::kAllCategories[i]))] = {
        {"count", per_category[i].count},
        {"mean_latency_days", per_category[i].mean_latency_days}};
  }
  return nlohmann::ordered_json{
      {"per_category", per_cat},
      {"manipulation_success_rate", manipulation_success_rate},
      {"detection_rate", detection_rate},
      {"mean_detection_latency_days", mean_detection_latency_days},
      {"expulsions", expulsions},
      {"fee_revenue", fee_revenue},
      {"freeloader_copy_rate", freeloader_copy_rate},
      {"lazy_constant_rate", lazy_constant_rate},
      {"run_seed", run_seed}};
}

MetricsReport report_from_log(const ScenarioConfig& config, const EventLog& log,
                              std::uint64_t run_seed) {
  MetricsReport report;
  report.run_seed = run_seed;

  // Corrupted sources and their corruption start days, per the config.
  std::unordered_map<std::string, Day> corrupt_start;
  for (const SourceSpec& source : config.sources) {
    if (source.bias == 0.0) continue;
    corrupt_start[source.id] =
        source.corrupt_from ? *source.corrupt_from : Day{0};
  }
  for (const AdversarySpec& adversary : config.adversaries) {
    if (const auto* briber = std::get_if<BriberSpec>(&adversary)) {
      if (briber->bias != 0.0) corrupt_start[briber->target] = briber->from_day;
    }
  }
  std::unordered_set<std::string> freeloader_sources;
  std::unordered_map<std::string, double> lazy_constants;
  for (const AdversarySpec& adversary : config.adversaries) {
    if (const auto* freeloader = std::get_if<FreeloaderSpec>(&adversary)) {
      freeloader_sources.insert(freeloader->source);
    } else if (const auto* lazy = std::get_if<LazySpec>(&adversary)) {
      lazy_constants[lazy->source] = lazy->constant;
    }
  }

  std::array<std::uint64_t, lex::kCategoryCount> latency_samples{};
  std::array<double, lex::kCategoryCount> latency_sum{};
  std::unordered_map<std::string, Day> submitted_at;
  std::unordered_map<std::string, std::size_t> submitted_category;
  std::unordered_set<std::string> latency_counted;
  // Latest value visible for each query while replaying, for copy detection.
  std::unordered_map<std::string, double> visible;

  std::uint64_t finalized = 0, manipulated = 0;
  std::uint64_t freeloader_answers = 0, freeloader_copies = 0;
  std::uint64_t lazy_answers = 0, lazy_matches = 0;
  std::unordered_map<std::string, Day> expelled_at;

  auto sample_latency = [&](const std::string& query_id, Day service_day) {
    if (!latency_counted.insert(query_id).second) return;
    auto it = submitted_at.find(query_id);
    if (it == submitted_at.end()) return;
    std::size_t category = submitted_category[query_id];
    ++latency_samples[category];
    latency_sum[category] += static_cast<double>(service_day - it->second);
  };

  auto note_answer = [&](const std::string& source_id, const std::string& query_id,
                         double value) {
    if (freeloader_sources.count(source_id) > 0) {
      ++freeloader_answers;
      auto it = visible.find(query_id);
      if (it != visible.end() && !values_differ(it->second, value)) {
        ++freeloader_copies;
      }
    }
    auto lazy_it = lazy_constants.find(source_id);
    if (lazy_it != lazy_constants.end()) {
      ++lazy_answers;
      if (!values_differ(lazy_it->second, value)) ++lazy_matches;
    }
  };

  for (const Event& event : log.events()) {
    switch (event.kind) {
      case EventKind::Submit: {
        const auto& p = std::get<SubmitPayload>(event.payload);
        std::size_t category = lex::category_index(p.category);
        ++report.per_category[category].count;
        submitted_at[p.query_id] = event.at;
        submitted_category[p.query_id] = category;
        break;
      }
      case EventKind::FeePaid: {
        const auto& p = std::get<FeePaidPayload>(event.payload);
        report.fee_revenue += p.amount;
        break;
      }
      case EventKind::Propose: {
        const auto& p = std::get<ProposePayload>(event.payload);
        sample_latency(p.query_id, event.at);
        note_answer(p.source_id, p.query_id, p.value);
        visible[p.query_id] = p.value;
        break;
      }
      case EventKind::Dispute: {
        const auto& p = std::get<DisputePayload>(event.payload);
        for (const ReferenceSample& ref : p.references) {
          note_answer(ref.source_id, p.query_id, ref.value);
        }
        visible[p.query_id] = p.resolved_value;
        break;
      }
      case EventKind::Finalize: {
        const auto& p = std::get<FinalizePayload>(event.payload);
        sample_latency(p.query_id, p.path == "compute" ? event.at : p.proposed_at);
        ++finalized;
        if (values_differ(p.value, p.truth)) ++manipulated;
        break;
      }
      case EventKind::Audit: {
        const auto& p = std::get<AuditPayload>(event.payload);
        for (const ReferenceSample& ref : p.references) {
          note_answer(ref.source_id, p.probe_query, ref.value);
        }
        note_answer(p.subject_id, p.probe_query, p.subject_value);
        break;
      }
      case EventKind::Expel: {
        const auto& p = std::get<ExpelPayload>(event.payload);
        ++report.expulsions;
        expelled_at.emplace(p.source_id, event.at);
        break;
      }
      case EventKind::UrnReveal: {
        const auto& p = std::get<UrnRevealPayload>(event.payload);
        sample_latency(p.query_id, event.at);
        break;
      }
      case EventKind::UrnCommit:
      case EventKind::UrnSelect:
        break;
    }
  }

  for (std::size_t i = 0; i < lex::kCategoryCount; ++i) {
    if (latency_samples[i] > 0) {
      report.per_category[i].mean_latency_days =
          latency_sum[i] / static_cast<double>(latency_samples[i]);
    }
  }
  if (finalized > 0) {
    report.manipulation_success_rate =
        static_cast<double>(manipulated) / static_cast<double>(finalized);
  }
  if (!corrupt_start.empty()) {
    std::uint64_t detected = 0;
    double latency_total = 0.0;
    for (const auto& [source_id, start] : corrupt_start) {
      auto it = expelled_at.find(source_id);
      if (it == expelled_at.end()) continue;
      ++detected;
      latency_total += static_cast<double>(it->second - start);
    }
    report.detection_rate = static_cast<double>(detected) /
                            static_cast<double>(corrupt_start.size());
    if (detected > 0) {
      report.mean_detection_latency_days =
          latency_total / static_cast<double>(detected);
    }
  }
  if (freeloader_answers > 0) {
    report.freeloader_copy_rate = static_cast<double>(freeloader_copies) /
                                  static_cast<double>(freeloader_answers);
  }
  if (lazy_answers > 0) {
    report.lazy_constant_rate =
        static_cast<double>(lazy_matches) / static_cast<double>(lazy_answers);
  }
  return report;
}

namespace {

ReplicateStat stat_over(const std::vector<double>& samples) {
  ReplicateStat stat;
  if (samples.empty()) return stat;
  double sum = 0.0;
  for (double x : samples) sum += x;
  stat.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double x : samples) ss += (x - stat.mean) * (x - stat.mean);
    stat.stddev = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  }
  return stat;
}

}  // namespace

ReplicateReport aggregate_reports(const std::vector<MetricsReport>& reports,
                                  std::uint64_t base_seed) {
  ReplicateReport out;
  out.n_runs = static_cast<int>(reports.size());
  out.base_seed = base_seed;

  auto collect = [&](const char* name, auto field) {
    std::vector<double> samples;
    samples.reserve(reports.size());
    for (const MetricsReport& report : reports) samples.push_back(field(report));
    out.metrics[name] = stat_over(samples);
  };
  collect("manipulation_success_rate",
          [](const MetricsReport& r) { return r.manipulation_success_rate; });
  collect("detection_rate",
          [](const MetricsReport& r) { return r.detection_rate; });
  collect("mean_detection_latency_days",
          [](const MetricsReport& r) { return r.mean_detection_latency_days; });
  collect("expulsions",
          [](const MetricsReport& r) { return static_cast<double>(r.expulsions); });
  collect("fee_revenue", [](const MetricsReport& r) { return r.fee_revenue; });
  collect("freeloader_copy_rate",
          [](const MetricsReport& r) { return r.freeloader_copy_rate; });
  collect("lazy_constant_rate",
          [](const MetricsReport& r) { return r.lazy_constant_rate; });

  for (std::size_t i = 0; i < lex::kCategoryCount; ++i) {
    std::vector<double> counts, latencies;
    counts.reserve(reports.size());
    latencies.reserve(reports.size());
    for (const MetricsReport& report : reports) {
      counts.push_back(static_cast<double>(report.per_category[i].count));
      latencies.push_back(report.per_category[i].mean_latency_days);
    }
    out.per_category[i].count = stat_over(counts);
    out.per_category[i].mean_latency_days = stat_over(latencies);
  }
  return out;
}

nlohmann::ordered_json ReplicateReport::to_json() const {
  nlohmann::ordered_json metrics_json;
  for (const auto& [name, stat] : metrics) {
    metrics_json[name] = {{"mean", stat.mean}, {"stddev", stat.stddev}};
  }
  nlohmann::ordered_json per_cat;
  for (std::size_t i = 0; i < lex::kCategoryCount; ++i) {
    per_cat[std::string(lex::to_string(lex::kAllCategories[i]))] = {
        {"count",
         {{"mean", per_category[i].count.mean},
          {"stddev", per_category[i].count.stddev}}},
        {"mean_latency_days",
         {{"mean", per_category[i].mean_latency_days.mean},
          {"stddev", per_category[i].mean_latency_days.stddev}}}};
  }
  return nlohmann::ordered_json{{"n_runs", n_runs},
                                {"base_seed", base_seed},
                                {"metrics", metrics_json},
                                {"per_category", per_cat}};
}

}  // namespace oraclesim::sim
