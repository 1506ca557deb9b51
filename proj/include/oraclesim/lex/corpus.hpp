#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "oraclesim/lex/classify.hpp"
#include "oraclesim/lex/lexicon.hpp"
#include "oraclesim/lex/profile.hpp"

namespace oraclesim::lex {

struct CorpusRecord {
  std::string id;  // unique within a corpus
  QueryCategory category = QueryCategory::Discernible;
  std::string question;
  std::string answer;  // non-empty; the profiled text
};

// Reads a JSON Lines corpus: one object per line with keys id, category,
// question, answer. Blank lines are skipped. Throws Error(MalformedInput)
// with the offending line number, or Error(DuplicateId).
std::vector<CorpusRecord> load_corpus_jsonl(const std::filesystem::path& file);
std::vector<CorpusRecord> load_corpus_jsonl(std::istream& in,
                                            const std::string& origin);

struct CategoryAggregate {
  QueryCategory category = QueryCategory::Discernible;
  std::uint64_t occurrences = 0;
  double avg_word_count = 0.0;
  double avg_entropy = 0.0;
  double avg_modal_density = 0.0;
  double avg_hedge_density = 0.0;
  double avg_polarity = 0.0;
  double avg_subjectivity = 0.0;
};

// Profiles each record's answer and averages per category (plain arithmetic
// means of per-record profiles). One row per category present, in canonical
// category order. Throws Error(DuplicateId) on repeated record ids.
std::vector<CategoryAggregate> aggregate(std::span<const CorpusRecord> corpus,
                                         const Lexicon& lexicon);

// CSV rendering: fixed header, one row per aggregate, numeric fields rounded
// to two decimals for display.
std::string aggregates_to_csv(std::span<const CategoryAggregate> aggregates);

// Full-precision JSON rendering.
nlohmann::ordered_json aggregates_to_json(
    std::span<const CategoryAggregate> aggregates);

}  // namespace oraclesim::lex
