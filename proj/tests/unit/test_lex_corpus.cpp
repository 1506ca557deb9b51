#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oraclesim/error.hpp"
#include "oraclesim/lex/corpus.hpp"

using namespace oraclesim;
using namespace oraclesim::lex;

namespace {

const std::string kDataDir = ORACLESIM_TEST_DATA_DIR;

Lexicon bundled_lexicon() { return Lexicon::load(kDataDir + "/lexica"); }

}  // namespace

TEST_CASE("empty corpus aggregates to nothing") {
  auto rows = aggregate({}, bundled_lexicon());
  CHECK(rows.empty());
  CHECK(aggregates_to_csv(rows) ==
        "category,occurrences,avg_word_count,avg_entropy,avg_modal_density,"
        "avg_hedge_density,avg_polarity,avg_subjectivity\n");
}

TEST_CASE("a single record reproduces its own profile in every mean") {
  Lexicon lexicon = bundled_lexicon();
  CorpusRecord record{"x1", QueryCategory::Sanctioned, "",
                      "the council will perhaps act with great care"};
  auto rows = aggregate(std::vector<CorpusRecord>{record}, lexicon);
  REQUIRE(rows.size() == 1);
  LexicalProfile p = profile(record.answer, lexicon);
  CHECK(rows[0].category == QueryCategory::Sanctioned);
  CHECK(rows[0].occurrences == 1);
  CHECK(rows[0].avg_word_count == doctest::Approx(double(p.word_count)));
  CHECK(rows[0].avg_entropy == doctest::Approx(p.shannon_entropy));
  CHECK(rows[0].avg_modal_density == doctest::Approx(p.modal_density));
  CHECK(rows[0].avg_hedge_density == doctest::Approx(p.hedge_density));
  CHECK(rows[0].avg_polarity == doctest::Approx(p.polarity));
  CHECK(rows[0].avg_subjectivity == doctest::Approx(p.subjectivity));
}

TEST_CASE("duplicate ids are refused") {
  std::vector<CorpusRecord> corpus{
      {"same", QueryCategory::Discernible, "", "yes"},
      {"same", QueryCategory::Recondite, "", "no"}};
  CHECK_THROWS_AS(aggregate(corpus, bundled_lexicon()), Error);
  try {
    aggregate(corpus, bundled_lexicon());
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::DuplicateId);
  }
}

TEST_CASE("rows come out in canonical category order") {
  std::vector<CorpusRecord> corpus{
      {"1", QueryCategory::Sanctioned, "", "one"},
      {"2", QueryCategory::Ambiguous, "", "two"},
      {"3", QueryCategory::Discernible, "", "three"},
      {"4", QueryCategory::Ambiguous, "", "four"}};
  auto rows = aggregate(corpus, bundled_lexicon());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].category == QueryCategory::Ambiguous);
  CHECK(rows[0].occurrences == 2);
  CHECK(rows[1].category == QueryCategory::Discernible);
  CHECK(rows[2].category == QueryCategory::Sanctioned);
}

TEST_CASE("jsonl loader reports bad lines with their number") {
  std::istringstream in(
      R"({"id": "a", "category": "Discernible", "question": "q", "answer": "fine"}
not json at all
)");
  try {
    load_corpus_jsonl(in, "test.jsonl");
    FAIL("expected MalformedInput");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::MalformedInput);
    CHECK(std::string(error.what()).find("test.jsonl:2") != std::string::npos);
  }
}

TEST_CASE("jsonl loader enforces category names and non-empty answers") {
  std::istringstream bad_category(
      R"({"id": "a", "category": "Mystery", "question": "q", "answer": "x"})");
  CHECK_THROWS_AS(load_corpus_jsonl(bad_category, "t"), Error);

  std::istringstream empty_answer(
      R"({"id": "a", "category": "Recondite", "question": "q", "answer": ""})");
  CHECK_THROWS_AS(load_corpus_jsonl(empty_answer, "t"), Error);

  std::istringstream dup(
      R"({"id": "a", "category": "Recondite", "question": "q", "answer": "x"}
{"id": "a", "category": "Recondite", "question": "q", "answer": "y"}
)");
  try {
    load_corpus_jsonl(dup, "t");
    FAIL("expected DuplicateId");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::DuplicateId);
  }
}

TEST_CASE("bundled sample corpus matches the shipped reference CSV") {
  Lexicon lexicon = bundled_lexicon();
  auto corpus = load_corpus_jsonl(kDataDir + "/corpus/sample25.jsonl");
  CHECK(corpus.size() == 25);
  auto rows = aggregate(corpus, lexicon);
  std::string csv = aggregates_to_csv(rows);

  std::ifstream reference_file(kDataDir + "/corpus/sample25_reference.csv",
                               std::ios::binary);
  REQUIRE(reference_file.good());
  std::stringstream reference;
  reference << reference_file.rdbuf();
  CHECK(csv == reference.str());
}

TEST_CASE("json output carries full precision") {
  Lexicon lexicon = bundled_lexicon();
  auto corpus = load_corpus_jsonl(kDataDir + "/corpus/sample25.jsonl");
  auto rows = aggregate(corpus, lexicon);
  auto json = aggregates_to_json(rows);
  REQUIRE(json.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(json[i]["avg_entropy"].get<double>() == rows[i].avg_entropy);
    CHECK(json[i]["occurrences"].get<std::uint64_t>() == rows[i].occurrences);
  }
}
