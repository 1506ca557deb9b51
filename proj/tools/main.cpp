// oraclesim: deterministic oracle-network simulator, lexical query pipeline,
// and sealed-urn protocol demo behind one binary.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "oraclesim/error.hpp"
#include "oraclesim/hex.hpp"
#include "oraclesim/lex/classify.hpp"
#include "oraclesim/lex/corpus.hpp"
#include "oraclesim/lex/lexicon.hpp"
#include "oraclesim/rng.hpp"
#include "oraclesim/sim/engine.hpp"
#include "oraclesim/urn/urn.hpp"

namespace {

using oraclesim::Error;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;

#ifndef ORACLESIM_DEFAULT_DATA_DIR
#define ORACLESIM_DEFAULT_DATA_DIR "data"
#endif

// Resolution order: ORACLESIM_DATA_DIR env var, then --data-dir, then the
// built-in default.
std::filesystem::path resolve_data_dir(const std::string& flag_value) {
  if (const char* env = std::getenv("ORACLESIM_DATA_DIR"); env && *env) {
    return env;
  }
  if (!flag_value.empty()) return flag_value;
  return ORACLESIM_DEFAULT_DATA_DIR;
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw Error(oraclesim::ErrorCode::InvalidRequest,
                "cannot open output file " + out_path);
  }
  out << text;
}

std::string json_text(const nlohmann::ordered_json& value) {
  return value.dump(2) + "\n";
}

// --- sim ---------------------------------------------------------------

struct SimRunArgs {
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string log;
  std::string csv;
};

std::string report_csv(const oraclesim::sim::MetricsReport& report) {
  std::ostringstream out;
  out << "metric,value\n";
  auto row = [&](const std::string& name, const nlohmann::ordered_json& value) {
    out << name << ',' << value.dump() << '\n';
  };
  for (std::size_t i = 0; i < oraclesim::lex::kCategoryCount; ++i) {
    std::string name(oraclesim::lex::to_string(oraclesim::lex::kAllCategories[i]));
    row("count_" + name, report.per_category[i].count);
    row("mean_latency_days_" + name, report.per_category[i].mean_latency_days);
  }
  row("manipulation_success_rate", report.manipulation_success_rate);
  row("detection_rate", report.detection_rate);
  row("mean_detection_latency_days", report.mean_detection_latency_days);
  row("expulsions", report.expulsions);
  row("fee_revenue", report.fee_revenue);
  row("freeloader_copy_rate", report.freeloader_copy_rate);
  row("lazy_constant_rate", report.lazy_constant_rate);
  row("run_seed", report.run_seed);
  return out.str();
}

int cmd_sim_run(const SimRunArgs& args) {
  auto config = oraclesim::sim::ScenarioConfig::load(args.scenario);
  std::uint64_t seed = args.seed.value_or(config.seed);
  oraclesim::sim::RunResult result = run_with_seed(config, seed);

  if (!args.log.empty()) {
    std::ofstream log_out(args.log, std::ios::binary);
    if (!log_out) {
      throw Error(oraclesim::ErrorCode::InvalidRequest,
                  "cannot open log file " + args.log);
    }
    result.log.write_jsonl(log_out);
  }
  if (!args.csv.empty()) {
    write_text(args.csv, report_csv(result.report));
  }
  write_text(args.out, json_text(result.report.to_json()));
  return kExitOk;
}

struct SimReplicateArgs {
  std::string scenario;
  int runs = 1;
  std::optional<std::uint64_t> seed;
  int jobs = 0;
  std::string out;
};

int cmd_sim_replicate(const SimReplicateArgs& args) {
  auto config = oraclesim::sim::ScenarioConfig::load(args.scenario);
  if (args.seed) config.seed = *args.seed;
  auto report = oraclesim::sim::replicate(config, args.runs, args.jobs);
  write_text(args.out, json_text(report.to_json()));
  return kExitOk;
}

// --- lex ---------------------------------------------------------------

struct LexAnalyzeArgs {
  std::string corpus;
  std::string format = "csv";
  std::string out;
  std::string data_dir;
};

int cmd_lex_analyze(const LexAnalyzeArgs& args) {
  auto lexicon =
      oraclesim::lex::Lexicon::load(resolve_data_dir(args.data_dir) / "lexica");
  auto corpus = oraclesim::lex::load_corpus_jsonl(args.corpus);
  auto aggregates = oraclesim::lex::aggregate(corpus, lexicon);
  if (args.format == "csv") {
    write_text(args.out, oraclesim::lex::aggregates_to_csv(aggregates));
  } else {
    write_text(args.out,
               json_text(oraclesim::lex::aggregates_to_json(aggregates)));
  }
  return kExitOk;
}

struct LexClassifyArgs {
  std::string answerable_by;
  bool pure_computation = false;
  bool interpretation_conflict = false;
};

int cmd_lex_classify(const LexClassifyArgs& args) {
  auto answerable = oraclesim::lex::answerable_from_string(args.answerable_by);
  if (!answerable) {
    std::cerr << "error: --answerable-by must be one of ManyObservers, "
                 "AuthoritySubset, SingleExclusiveSource, NoOne\n";
    return kExitUsage;
  }
  oraclesim::lex::QueryFeatures features;
  features.answerable_by = *answerable;
  features.is_pure_computation = args.pure_computation;
  features.honest_interpretation_conflict = args.interpretation_conflict;
  try {
    features.validate();
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  }
  nlohmann::ordered_json out{
      {"category", oraclesim::lex::to_string(oraclesim::lex::classify(features))}};
  std::cout << json_text(out);
  return kExitOk;
}

// --- urn ---------------------------------------------------------------

struct UrnDemoArgs {
  std::string m_gold;
  std::string m_silver;
  int witnesses = 3;
  std::uint64_t seed = 0;
  bool tamper = false;
};

int cmd_urn_demo(const UrnDemoArgs& args) {
  namespace urn = oraclesim::urn;
  oraclesim::Rng rng(oraclesim::derive_seed(args.seed, "urn-demo"));

  auto [pair, openings] = urn::make_urn_pair(
      oraclesim::to_bytes(args.m_gold), oraclesim::to_bytes(args.m_silver), rng, 0);

  nlohmann::ordered_json transcript;
  transcript["protocol"] = "sealed-urn";
  transcript["seed"] = args.seed;
  transcript["commit"] = {{"gold", pair.gold.hex()},
                          {"silver", pair.silver.hex()},
                          {"created_at", pair.created_at}};

  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  for (int i = 1; i <= args.witnesses; ++i) {
    std::string id = "witness-" + std::to_string(i);
    oraclesim::Bytes secret(32);
    oraclesim::Rng secret_rng(oraclesim::derive_seed(args.seed, "witness:" + id));
    secret_rng.fill_bytes(secret);
    urn::WitnessAttestation attestation = urn::attest(id, secret, pair, 0);
    witnesses.push_back({{"id", attestation.witness_id},
                         {"secret", oraclesim::to_hex(secret)},
                         {"timestamp", attestation.timestamp},
                         {"tag", oraclesim::to_hex(attestation.tag)},
                         {"valid", urn::verify_attestation(attestation, secret, pair)}});
  }
  transcript["witnesses"] = witnesses;

  std::uint64_t beacon_seed = oraclesim::derive_seed(args.seed, "beacon");
  urn::Selection selection = urn::select(pair, beacon_seed);
  transcript["selection"] = {{"beacon_seed", selection.beacon_seed},
                             {"draw", selection.draw},
                             {"chosen", to_string(selection.chosen)}};

  urn::Opening opening = selection.chosen == urn::UrnSide::Gold
                             ? openings.gold
                             : openings.silver;
  if (args.tamper && !opening.message.empty()) {
    opening.message[0] ^= 0x01;  // one flipped bit is enough to sink it
  }
  urn::RevealOutcome outcome =
      urn::reveal_verify(pair, selection, opening.message, opening.nonce);

  nlohmann::ordered_json reveal;
  reveal["message"] = std::string(opening.message.begin(), opening.message.end());
  reveal["nonce"] = oraclesim::to_hex(opening.nonce);
  reveal["verdict"] = to_string(outcome.verdict);
  if (outcome.evidence) {
    reveal["evidence"] = {{"recomputed", oraclesim::to_hex(outcome.evidence->recomputed)},
                          {"expected", oraclesim::to_hex(outcome.evidence->expected)}};
  }
  transcript["reveal"] = reveal;

  std::cout << json_text(transcript);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic oracle-network simulator and protocol toolbox"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // sim
  auto* sim = app.add_subcommand("sim", "Run the network simulator");
  sim->require_subcommand(1);

  SimRunArgs sim_run_args;
  auto* sim_run = sim->add_subcommand("run", "Run one scenario");
  sim_run->add_option("--scenario", sim_run_args.scenario, "Scenario JSON file")
      ->required();
  sim_run->add_option("--seed", sim_run_args.seed, "Override the scenario seed");
  sim_run->add_option("--out", sim_run_args.out, "Report JSON path (default stdout)");
  sim_run->add_option("--log", sim_run_args.log, "Event log JSONL path");
  sim_run->add_option("--csv", sim_run_args.csv, "CSV summary path");

  SimReplicateArgs sim_rep_args;
  auto* sim_rep = sim->add_subcommand("replicate", "Aggregate many runs");
  sim_rep->add_option("--scenario", sim_rep_args.scenario, "Scenario JSON file")
      ->required();
  sim_rep->add_option("--runs", sim_rep_args.runs, "Number of runs")
      ->required()
      ->check(CLI::PositiveNumber);
  sim_rep->add_option("--seed", sim_rep_args.seed, "Override the base seed");
  sim_rep->add_option("--jobs", sim_rep_args.jobs,
                      "Worker threads (default: hardware)");
  sim_rep->add_option("--out", sim_rep_args.out, "Output path (default stdout)");

  // lex
  auto* lex = app.add_subcommand("lex", "Lexical query pipeline");
  lex->require_subcommand(1);

  LexAnalyzeArgs lex_args;
  auto* lex_analyze = lex->add_subcommand("analyze", "Aggregate corpus metrics");
  lex_analyze->add_option("--corpus", lex_args.corpus, "Corpus JSONL file")
      ->required();
  lex_analyze->add_option("--format", lex_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  lex_analyze->add_option("--out", lex_args.out, "Output path (default stdout)");
  lex_analyze->add_option("--data-dir", lex_args.data_dir,
                          "Data directory holding lexica/");

  LexClassifyArgs classify_args;
  auto* lex_classify = lex->add_subcommand("classify", "Classify query features");
  lex_classify
      ->add_option("--answerable-by", classify_args.answerable_by,
                   "ManyObservers|AuthoritySubset|SingleExclusiveSource|NoOne")
      ->required();
  lex_classify->add_flag("--pure-computation", classify_args.pure_computation,
                         "The query is a pure computation");
  lex_classify->add_flag("--interpretation-conflict",
                         classify_args.interpretation_conflict,
                         "Honest parties would answer differently");

  // urn
  auto* urn_cmd = app.add_subcommand("urn", "Sealed-urn protocol");
  urn_cmd->require_subcommand(1);

  UrnDemoArgs urn_args;
  auto* urn_demo = urn_cmd->add_subcommand("demo", "Full protocol transcript");
  urn_demo->add_option("--m-gold", urn_args.m_gold, "Gold urn message")->required();
  urn_demo->add_option("--m-silver", urn_args.m_silver, "Silver urn message")
      ->required();
  urn_demo->add_option("--witnesses", urn_args.witnesses, "Witness count")
      ->check(CLI::Range(1, 64));
  urn_demo->add_option("--seed", urn_args.seed, "Transcript seed");
  urn_demo->add_flag("--tamper", urn_args.tamper,
                     "Mutate the revealed message to show rejection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    if (error.get_name() == "CallForHelp" ||
        error.get_name() == "CallForAllHelp") {
      return app.exit(error);
    }
    app.exit(error, std::cout, std::cerr);
    return kExitUsage;
  }

  try {
    if (sim_run->parsed()) return cmd_sim_run(sim_run_args);
    if (sim_rep->parsed()) return cmd_sim_replicate(sim_rep_args);
    if (lex_analyze->parsed()) return cmd_lex_analyze(lex_args);
    if (lex_classify->parsed()) return cmd_lex_classify(classify_args);
    if (urn_demo->parsed()) return cmd_urn_demo(urn_args);
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsage;
}
