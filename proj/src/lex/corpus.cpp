#include "oraclesim/lex/corpus.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "oraclesim/error.hpp"

namespace oraclesim::lex {

namespace {

std::string field_error(const std::string& origin, int line_no,
                        const std::string& detail) {
  return origin + ":" + std::to_string(line_no) + ": " + detail;
}

// Two-decimal display rounding; "-0.00" collapses to "0.00".
std::string format2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace

std::vector<CorpusRecord> load_corpus_jsonl(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw Error(ErrorCode::MalformedInput,
                "cannot open corpus file " + file.string());
  }
  return load_corpus_jsonl(in, file.string());
}

std::vector<CorpusRecord> load_corpus_jsonl(std::istream& in,
                                            const std::string& origin) {
  std::vector<CorpusRecord> records;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    nlohmann::json object = nlohmann::json::parse(line, nullptr, false);
    if (object.is_discarded() || !object.is_object()) {
      throw Error(ErrorCode::MalformedInput,
                  field_error(origin, line_no, "not a JSON object"));
    }
    for (const char* key : {"id", "category", "question", "answer"}) {
      if (!object.contains(key) || !object[key].is_string()) {
        throw Error(ErrorCode::MalformedInput,
                    field_error(origin, line_no,
                                std::string("missing string key '") + key + "'"));
      }
    }

    CorpusRecord record;
    record.id = object["id"].get<std::string>();
    record.question = object["question"].get<std::string>();
    record.answer = object["answer"].get<std::string>();

    auto category = category_from_string(object["category"].get<std::string>());
    if (!category) {
      throw Error(ErrorCode::MalformedInput,
                  field_error(origin, line_no,
                              "unknown category '" +
                                  object["category"].get<std::string>() + "'"));
    }
    record.category = *category;

    if (record.answer.empty()) {
      throw Error(ErrorCode::MalformedInput,
                  field_error(origin, line_no, "empty answer"));
    }
    if (!seen_ids.insert(record.id).second) {
      throw Error(ErrorCode::DuplicateId,
                  field_error(origin, line_no,
                              "duplicate record id '" + record.id + "'"));
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<CategoryAggregate> aggregate(std::span<const CorpusRecord> corpus,
                                         const Lexicon& lexicon) {
  std::unordered_set<std::string> seen_ids;
  for (const CorpusRecord& record : corpus) {
    if (!seen_ids.insert(record.id).second) {
      throw Error(ErrorCode::DuplicateId,
                  "duplicate record id '" + record.id + "'");
    }
  }

  struct Accumulator {
    std::uint64_t n = 0;
    double word_count = 0, entropy = 0, modal = 0, hedge = 0;
    double polarity = 0, subjectivity = 0;
  };
  std::map<QueryCategory, Accumulator> buckets;  // ordered by enum = canonical
  for (const CorpusRecord& record : corpus) {
    LexicalProfile p = profile(record.answer, lexicon);
    Accumulator& acc = buckets[record.category];
    ++acc.n;
    acc.word_count += static_cast<double>(p.word_count);
    acc.entropy += p.shannon_entropy;
    acc.modal += p.modal_density;
    acc.hedge += p.hedge_density;
    acc.polarity += p.polarity;
    acc.subjectivity += p.subjectivity;
  }

  std::vector<CategoryAggregate> result;
  result.reserve(buckets.size());
  for (const auto& [category, acc] : buckets) {
    CategoryAggregate row;
    row.category = category;
    row.occurrences = acc.n;
    const double n = static_cast<double>(acc.n);
    row.avg_word_count = acc.word_count / n;
    row.avg_entropy = acc.entropy / n;
    row.avg_modal_density = acc.modal / n;
    row.avg_hedge_density = acc.hedge / n;
    row.avg_polarity = acc.polarity / n;
    row.avg_subjectivity = acc.subjectivity / n;
    result.push_back(row);
  }
  return result;
}

std::string aggregates_to_csv(std::span<const CategoryAggregate> aggregates) {
  std::ostringstream out;
  out << "category,occurrences,avg_word_count,avg_entropy,avg_modal_density,"
         "avg_hedge_density,avg_polarity,avg_subjectivity\n";
  for (const CategoryAggregate& row : aggregates) {
    out << to_string(row.category) << ',' << row.occurrences << ','
        << format2(row.avg_word_count) << ',' << format2(row.avg_entropy) << ','
        << format2(row.avg_modal_density) << ','
        << format2(row.avg_hedge_density) << ',' << format2(row.avg_polarity)
        << ',' << format2(row.avg_subjectivity) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json aggregates_to_json(
    std::span<const CategoryAggregate> aggregates) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CategoryAggregate& row : aggregates) {
    rows.push_back({{"category", to_string(row.category)},
                    {"occurrences", row.occurrences},
                    {"avg_word_count", row.avg_word_count},
                    {"avg_entropy", row.avg_entropy},
                    {"avg_modal_density", row.avg_modal_density},
                    {"avg_hedge_density", row.avg_hedge_density},
                    {"avg_polarity", row.avg_polarity},
                    {"avg_subjectivity", row.avg_subjectivity}});
  }
  return rows;
}

}  // namespace oraclesim::lex
