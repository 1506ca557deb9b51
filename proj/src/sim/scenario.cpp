#include "oraclesim/sim/scenario.hpp"

#include <fstream>
#include <unordered_set>

#include "oraclesim/error.hpp"

namespace oraclesim::sim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& detail) {
  throw Error(ErrorCode::InvalidConfig, field + ": " + detail);
}

void require_keys(const json& object, const std::string& path,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
  for (const char* key : required) {
    if (!object.contains(key)) fail(path + "." + key, "missing required field");
  }
  std::unordered_set<std::string> known;
  for (const char* key : required) known.insert(key);
  for (const char* key : optional) known.insert(key);
  for (const auto& [key, value] : object.items()) {
    if (known.count(key) == 0) fail(path + "." + key, "unknown field");
  }
}

double number_at(const json& object, const std::string& path, const char* key) {
  const json& value = object.at(key);
  if (!value.is_number()) fail(path + "." + key, "expected a number");
  return value.get<double>();
}

std::string string_at(const json& object, const std::string& path,
                      const char* key) {
  const json& value = object.at(key);
  if (!value.is_string()) fail(path + "." + key, "expected a string");
  return value.get<std::string>();
}

trust::Calendar calendar_from_json(const json& object) {
  trust::Calendar calendar;
  if (!object.is_object()) fail("calendar", "expected an object");
  require_keys(object, "calendar", {},
               {"month_length", "consultation_day", "off_season"});
  if (object.contains("month_length")) {
    calendar.month_length =
        static_cast<int>(number_at(object, "calendar", "month_length"));
  }
  if (object.contains("consultation_day")) {
    calendar.consultation_day =
        static_cast<int>(number_at(object, "calendar", "consultation_day"));
  }
  if (object.contains("off_season")) {
    const json& months = object.at("off_season");
    if (!months.is_array()) fail("calendar.off_season", "expected an array");
    calendar.off_season.clear();
    for (const json& month : months) {
      if (!month.is_number_integer()) {
        fail("calendar.off_season", "expected integer month indices");
      }
      calendar.off_season.insert(month.get<int>());
    }
  }
  return calendar;
}

SourceSpec source_from_json(const json& object, const std::string& path) {
  if (!object.is_object()) fail(path, "expected an object");
  require_keys(object, path, {"id"},
               {"domain_tags", "bias", "corrupt_from", "corrupt_to",
                "reference_only", "delay_days"});
  SourceSpec spec;
  spec.id = string_at(object, path, "id");
  if (object.contains("domain_tags")) {
    for (const json& tag : object.at("domain_tags")) {
      if (!tag.is_string()) fail(path + ".domain_tags", "expected strings");
      spec.domain_tags.insert(tag.get<std::string>());
    }
  }
  if (object.contains("bias")) spec.bias = number_at(object, path, "bias");
  if (object.contains("corrupt_from")) {
    spec.corrupt_from = static_cast<Day>(number_at(object, path, "corrupt_from"));
  }
  if (object.contains("corrupt_to")) {
    spec.corrupt_to = static_cast<Day>(number_at(object, path, "corrupt_to"));
  }
  if (object.contains("reference_only")) {
    if (!object.at("reference_only").is_boolean()) {
      fail(path + ".reference_only", "expected a boolean");
    }
    spec.reference_only = object.at("reference_only").get<bool>();
  }
  if (object.contains("delay_days")) {
    spec.delay_days = static_cast<Day>(number_at(object, path, "delay_days"));
  }
  return spec;
}

PetitionerSpec petitioner_from_json(const json& object, const std::string& path) {
  if (!object.is_object()) fail(path, "expected an object");
  require_keys(object, path, {"id", "tier", "query_mix"},
               {"queries_per_day", "binary_fraction", "urn_fraction"});
  PetitionerSpec spec;
  spec.id = string_at(object, path, "id");
  std::string tier = string_at(object, path, "tier");
  if (tier == "Promanteia") {
    spec.tier = trust::Tier::Promanteia;
  } else if (tier == "Standard") {
    spec.tier = trust::Tier::Standard;
  } else {
    fail(path + ".tier", "expected 'Promanteia' or 'Standard', got '" + tier + "'");
  }
  const json& mix = object.at("query_mix");
  if (!mix.is_object()) fail(path + ".query_mix", "expected an object");
  for (const auto& [name, weight] : mix.items()) {
    auto category = lex::category_from_string(name);
    if (!category) fail(path + ".query_mix", "unknown category '" + name + "'");
    if (!weight.is_number()) {
      fail(path + ".query_mix." + name, "expected a number");
    }
    spec.query_mix[*category] = weight.get<double>();
  }
  if (object.contains("queries_per_day")) {
    spec.queries_per_day = number_at(object, path, "queries_per_day");
  }
  if (object.contains("binary_fraction")) {
    spec.binary_fraction = number_at(object, path, "binary_fraction");
  }
  if (object.contains("urn_fraction")) {
    spec.urn_fraction = number_at(object, path, "urn_fraction");
  }
  return spec;
}

AdversarySpec adversary_from_json(const json& object, const std::string& path) {
  if (!object.is_object()) fail(path, "expected an object");
  std::string kind =
      object.contains("kind") ? string_at(object, path, "kind") : "";
  if (kind == "Briber") {
    require_keys(object, path, {"kind", "target", "bias", "from_day", "to_day"}, {});
    BriberSpec spec;
    spec.target = string_at(object, path, "target");
    spec.bias = number_at(object, path, "bias");
    spec.from_day = static_cast<Day>(number_at(object, path, "from_day"));
    spec.to_day = static_cast<Day>(number_at(object, path, "to_day"));
    return spec;
  }
  if (kind == "Sybil") {
    require_keys(object, path, {"kind", "n"}, {});
    SybilSpec spec;
    spec.n = static_cast<int>(number_at(object, path, "n"));
    return spec;
  }
  if (kind == "Freeloader") {
    require_keys(object, path, {"kind", "source"}, {});
    return FreeloaderSpec{string_at(object, path, "source")};
  }
  if (kind == "Lazy") {
    require_keys(object, path, {"kind", "source", "constant"}, {});
    LazySpec spec;
    spec.source = string_at(object, path, "source");
    spec.constant = number_at(object, path, "constant");
    return spec;
  }
  fail(path + ".kind",
       "expected one of Briber, Sybil, Freeloader, Lazy; got '" + kind + "'");
}

}  // namespace

void ScenarioConfig::validate() const {
  if (duration_days < 1) fail("duration_days", "must be >= 1");
  calendar.validate();
  if (dispute_window_days < 0) fail("dispute_window_days", "must be >= 0");
  if (audit_probability_per_month < 0.0 || audit_probability_per_month > 1.0) {
    fail("audit_probability_per_month", "must lie in [0, 1]");
  }
  if (tolerance < 0.0) fail("tolerance", "must be >= 0");
  if (witness_count < 3 || witness_count > 64) {
    fail("witness_count", "must lie in [3, 64]");
  }
  if (fees.base < 0.0) fail("fees.base", "must be >= 0");
  if (challenge_probability < 0.0 || challenge_probability > 1.0) {
    fail("challenge_probability", "must lie in [0, 1]");
  }

  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const SourceSpec& source = sources[i];
    std::string path = "sources[" + std::to_string(i) + "]";
    if (source.id.empty()) fail(path + ".id", "must be non-empty");
    if (!ids.insert(source.id).second) fail(path + ".id", "duplicate id");
    if (source.corrupt_from.has_value() != source.corrupt_to.has_value()) {
      fail(path, "corrupt_from and corrupt_to must be given together");
    }
    if (source.corrupt_from && *source.corrupt_from > *source.corrupt_to) {
      fail(path, "corrupt window is empty (from > to)");
    }
    if (source.delay_days < 0) fail(path + ".delay_days", "must be >= 0");
  }
  for (std::size_t i = 0; i < petitioners.size(); ++i) {
    const PetitionerSpec& petitioner = petitioners[i];
    std::string path = "petitioners[" + std::to_string(i) + "]";
    if (petitioner.id.empty()) fail(path + ".id", "must be non-empty");
    if (!ids.insert(petitioner.id).second) fail(path + ".id", "duplicate id");
    double total = 0.0;
    for (const auto& [category, weight] : petitioner.query_mix) {
      if (weight < 0.0) fail(path + ".query_mix", "weights must be >= 0");
      total += weight;
    }
    if (total <= 0.0) fail(path + ".query_mix", "weights must sum to > 0");
    if (petitioner.queries_per_day < 0.0) {
      fail(path + ".queries_per_day", "must be >= 0");
    }
    if (petitioner.binary_fraction < 0.0 || petitioner.binary_fraction > 1.0) {
      fail(path + ".binary_fraction", "must lie in [0, 1]");
    }
    if (petitioner.urn_fraction < 0.0 || petitioner.urn_fraction > 1.0) {
      fail(path + ".urn_fraction", "must lie in [0, 1]");
    }
  }
  auto source_exists = [&](const std::string& id) {
    for (const SourceSpec& source : sources) {
      if (source.id == id) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < adversaries.size(); ++i) {
    std::string path = "adversaries[" + std::to_string(i) + "]";
    const AdversarySpec& adversary = adversaries[i];
    if (const auto* briber = std::get_if<BriberSpec>(&adversary)) {
      if (!source_exists(briber->target)) {
        fail(path + ".target", "unknown source '" + briber->target + "'");
      }
      if (briber->from_day > briber->to_day) fail(path, "empty bribe window");
    } else if (const auto* sybil = std::get_if<SybilSpec>(&adversary)) {
      if (sybil->n < 1) fail(path + ".n", "must be >= 1");
    } else if (const auto* freeloader = std::get_if<FreeloaderSpec>(&adversary)) {
      if (!source_exists(freeloader->source)) {
        fail(path + ".source", "unknown source '" + freeloader->source + "'");
      }
    } else if (const auto* lazy = std::get_if<LazySpec>(&adversary)) {
      if (!source_exists(lazy->source)) {
        fail(path + ".source", "unknown source '" + lazy->source + "'");
      }
    }
  }
}

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json& json_in) {
  if (!json_in.is_object()) fail("<root>", "expected a JSON object");
  require_keys(json_in, "<root>",
               {"duration_days", "seed", "sources", "petitioners"},
               {"calendar", "dispute_window_days", "audit_probability_per_month",
                "tolerance", "adversaries", "witness_count", "fees",
                "challenge_probability"});
  ScenarioConfig config;
  config.duration_days =
      static_cast<Day>(number_at(json_in, "<root>", "duration_days"));
  config.seed = json_in.at("seed").get<std::uint64_t>();
  if (json_in.contains("calendar")) {
    config.calendar = calendar_from_json(json_in.at("calendar"));
  }
  if (json_in.contains("dispute_window_days")) {
    config.dispute_window_days =
        static_cast<Day>(number_at(json_in, "<root>", "dispute_window_days"));
  }
  if (json_in.contains("audit_probability_per_month")) {
    config.audit_probability_per_month =
        number_at(json_in, "<root>", "audit_probability_per_month");
  }
  if (json_in.contains("tolerance")) {
    config.tolerance = number_at(json_in, "<root>", "tolerance");
  }
  const nlohmann::json& sources = json_in.at("sources");
  if (!sources.is_array()) fail("sources", "expected an array");
  for (std::size_t i = 0; i < sources.size(); ++i) {
    config.sources.push_back(
        source_from_json(sources[i], "sources[" + std::to_string(i) + "]"));
  }
  const nlohmann::json& petitioners = json_in.at("petitioners");
  if (!petitioners.is_array()) fail("petitioners", "expected an array");
  for (std::size_t i = 0; i < petitioners.size(); ++i) {
    config.petitioners.push_back(petitioner_from_json(
        petitioners[i], "petitioners[" + std::to_string(i) + "]"));
  }
  if (json_in.contains("adversaries")) {
    const nlohmann::json& adversaries = json_in.at("adversaries");
    if (!adversaries.is_array()) fail("adversaries", "expected an array");
    for (std::size_t i = 0; i < adversaries.size(); ++i) {
      config.adversaries.push_back(adversary_from_json(
          adversaries[i], "adversaries[" + std::to_string(i) + "]"));
    }
  }
  if (json_in.contains("witness_count")) {
    config.witness_count =
        static_cast<int>(number_at(json_in, "<root>", "witness_count"));
  }
  if (json_in.contains("fees")) {
    const nlohmann::json& fees = json_in.at("fees");
    if (!fees.is_object()) fail("fees", "expected an object");
    require_keys(fees, "fees", {}, {"base"});
    if (fees.contains("base")) {
      config.fees.base = number_at(fees, "fees", "base");
    }
  }
  if (json_in.contains("challenge_probability")) {
    config.challenge_probability =
        number_at(json_in, "<root>", "challenge_probability");
  }
  config.validate();
  return config;
}

ScenarioConfig ScenarioConfig::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw Error(ErrorCode::InvalidConfig,
                "scenario file: cannot open " + file.string());
  }
  nlohmann::json parsed = nlohmann::json::parse(in, nullptr, false);
  if (parsed.is_discarded()) {
    throw Error(ErrorCode::InvalidConfig,
                "scenario file: " + file.string() + " is not valid JSON");
  }
  return from_json(parsed);
}

nlohmann::ordered_json ScenarioConfig::to_json() const {
  nlohmann::ordered_json out;
  out["duration_days"] = duration_days;
  out["calendar"] = {{"month_length", calendar.month_length},
                     {"consultation_day", calendar.consultation_day},
                     {"off_season", calendar.off_season}};
  out["seed"] = seed;
  out["dispute_window_days"] = dispute_window_days;
  out["audit_probability_per_month"] = audit_probability_per_month;
  out["tolerance"] = tolerance;
  out["sources"] = nlohmann::ordered_json::array();
  for (const SourceSpec& source : sources) {
    nlohmann::ordered_json entry{{"id", source.id},
                                 {"domain_tags", source.domain_tags},
                                 {"bias", source.bias}};
    if (source.corrupt_from) entry["corrupt_from"] = *source.corrupt_from;
    if (source.corrupt_to) entry["corrupt_to"] = *source.corrupt_to;
    if (source.reference_only) entry["reference_only"] = true;
    if (source.delay_days != 0) entry["delay_days"] = source.delay_days;
    out["sources"].push_back(entry);
  }
  out["petitioners"] = nlohmann::ordered_json::array();
  for (const PetitionerSpec& petitioner : petitioners) {
    nlohmann::ordered_json mix;
    for (const auto& [category, weight] : petitioner.query_mix) {
      mix[std::string(lex::to_string(category))] = weight;
    }
    out["petitioners"].push_back({{"id", petitioner.id},
                                  {"tier", to_string(petitioner.tier)},
                                  {"query_mix", mix},
                                  {"queries_per_day", petitioner.queries_per_day},
                                  {"binary_fraction", petitioner.binary_fraction},
                                  {"urn_fraction", petitioner.urn_fraction}});
  }
  out["adversaries"] = nlohmann::ordered_json::array();
  for (const AdversarySpec& adversary : adversaries) {
    if (const auto* briber = std::get_if<BriberSpec>(&adversary)) {
      out["adversaries"].push_back({{"kind", "Briber"},
                                    {"target", briber->target},
                                    {"bias", briber->bias},
                                    {"from_day", briber->from_day},
                                    {"to_day", briber->to_day}});
    } else if (const auto* sybil = std::get_if<SybilSpec>(&adversary)) {
      out["adversaries"].push_back({{"kind", "Sybil"}, {"n", sybil->n}});
    } else if (const auto* freeloader = std::get_if<FreeloaderSpec>(&adversary)) {
      out["adversaries"].push_back(
          {{"kind", "Freeloader"}, {"source", freeloader->source}});
    } else if (const auto* lazy = std::get_if<LazySpec>(&adversary)) {
      out["adversaries"].push_back({{"kind", "Lazy"},
                                    {"source", lazy->source},
                                    {"constant", lazy->constant}});
    }
  }
  out["witness_count"] = witness_count;
  out["fees"] = {{"base", fees.base}};
  out["challenge_probability"] = challenge_probability;
  return out;
}

}  // namespace oraclesim::sim
