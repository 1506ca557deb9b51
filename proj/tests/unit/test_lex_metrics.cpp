#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oraclesim/error.hpp"
#include "oraclesim/lex/lexicon.hpp"
#include "oraclesim/lex/profile.hpp"
#include "oraclesim/rng.hpp"

using namespace oraclesim;
using namespace oraclesim::lex;

namespace {

Lexicon test_lexicon() {
  return Lexicon::from_lists(
      {"shall", "must", "will", "should", "ought", "may", "might", "can",
       "cannot", "could", "would"},
      {"perhaps", "maybe", "might", "possibly", "probably", "seems", "likely",
       "unclear", "uncertain", "somewhat"},
      {{"great", {0.8, 0.75}}, {"doom", {-0.8, 0.7}}});
}

std::vector<Token> repeat(std::initializer_list<const char*> words) {
  std::vector<Token> tokens;
  for (const char* w : words) tokens.emplace_back(w);
  return tokens;
}

}  // namespace

TEST_CASE("entropy of degenerate inputs is zero") {
  CHECK(shannon_entropy({}) == 0.0);
  CHECK(shannon_entropy(repeat({"apollo"})) == 0.0);
  CHECK(shannon_entropy(repeat({"apollo", "apollo", "apollo"})) == 0.0);
}

TEST_CASE("entropy of uniform tokens equals log2 n") {
  CHECK(shannon_entropy(repeat({"go", "west", "young", "man"})) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // frozen from an independent hand computation of counts (3,3,1,1)/8
  CHECK(shannon_entropy(repeat({"to", "be", "to", "be", "or", "not", "to", "be"})) ==
        doctest::Approx(1.811278124459133).epsilon(1e-12));
}

TEST_CASE("entropy is permutation invariant and bounded by log2 n") {
  std::vector<Token> tokens = repeat(
      {"the", "god", "speaks", "the", "truth", "in", "riddles", "of", "the", "deep"});
  double base = shannon_entropy(tokens);
  CHECK(base <= std::log2(static_cast<double>(tokens.size())) + 1e-12);
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    for (std::size_t i = tokens.size(); i > 1; --i) {
      std::swap(tokens[i - 1], tokens[rng.below(i)]);
    }
    CHECK(shannon_entropy(tokens) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("densities count bundled list hits") {
  Lexicon lexicon = test_lexicon();
  CHECK(modal_density(repeat({"fly", "fly", "to", "the", "ends"}), lexicon) == 0.0);
  CHECK(modal_density(
            repeat({"croesus", "will", "destroy", "a", "great", "empire"}),
            lexicon) == doctest::Approx(1.0 / 6.0));
  CHECK(hedge_density({}, lexicon) == 0.0);
  CHECK(hedge_density(repeat({"perhaps", "you", "might", "flee"}), lexicon) ==
        doctest::Approx(0.5));
  // "might" sits in both lists; the metrics stay independent
  CHECK(modal_density(repeat({"might"}), lexicon) == 1.0);
  CHECK(hedge_density(repeat({"might"}), lexicon) == 1.0);
}

TEST_CASE("densities are ratios of integer counts in [0,1]") {
  Lexicon lexicon = test_lexicon();
  Rng rng(3);
  std::vector<Token> pool = repeat(
      {"will", "perhaps", "stone", "river", "might", "gold", "ship", "maybe"});
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Token> text;
    std::size_t n = 1 + rng.below(40);
    for (std::size_t i = 0; i < n; ++i) text.push_back(pool[rng.below(pool.size())]);
    for (double d : {modal_density(text, lexicon), hedge_density(text, lexicon)}) {
      CHECK(d >= 0.0);
      CHECK(d <= 1.0);
      double count = d * static_cast<double>(n);
      CHECK(std::abs(count - std::round(count)) < 1e-9);
    }
  }
}

TEST_CASE("sentiment means over matched entries") {
  Lexicon lexicon = test_lexicon();
  Sentiment none = sentiment(repeat({"the", "bronze", "cauldron"}), lexicon);
  CHECK(none.polarity == 0.0);
  CHECK(none.subjectivity == 0.0);

  Sentiment one = sentiment(repeat({"great"}), lexicon);
  CHECK(one.polarity == doctest::Approx(0.8));
  CHECK(one.subjectivity == doctest::Approx(0.75));

  // negation rule: -0.5 x 0.8, subjectivity untouched
  Sentiment negated = sentiment(repeat({"not", "great"}), lexicon);
  CHECK(negated.polarity == doctest::Approx(-0.4));
  CHECK(negated.subjectivity == doctest::Approx(0.75));

  Sentiment two = sentiment(repeat({"great", "doom"}), lexicon);
  CHECK(two.polarity == doctest::Approx(0.0));
  CHECK(two.subjectivity == doctest::Approx(0.725));
}

TEST_CASE("profile composes the metrics") {
  Lexicon lexicon = test_lexicon();

  LexicalProfile empty = profile("", lexicon);
  CHECK(empty == LexicalProfile{});

  LexicalProfile p = profile("go west young man", lexicon);
  CHECK(p.word_count == 4);
  CHECK(p.shannon_entropy == doctest::Approx(2.0));
  CHECK(p.modal_density == 0.0);
  CHECK(p.hedge_density == 0.0);
  CHECK(p.polarity == 0.0);
  CHECK(p.subjectivity == 0.0);
}

TEST_CASE("profile is deterministic and respects the entropy bound") {
  Lexicon lexicon = test_lexicon();
  Rng rng(17);
  std::vector<Token> pool = repeat(
      {"will", "perhaps", "great", "doom", "not", "stone", "river", "the"});
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    std::size_t n = rng.below(30);
    for (std::size_t i = 0; i < n; ++i) {
      if (!text.empty()) text += ' ';
      text += pool[rng.below(pool.size())];
    }
    LexicalProfile a = profile(text, lexicon);
    LexicalProfile b = profile(text, lexicon);
    CHECK(a == b);
    if (a.word_count > 0) {
      CHECK(a.shannon_entropy <=
            std::log2(static_cast<double>(a.word_count)) + 1e-12);
    } else {
      CHECK(a == LexicalProfile{});
    }
    CHECK(a.polarity >= -1.0);
    CHECK(a.polarity <= 1.0);
    CHECK(a.subjectivity >= 0.0);
    CHECK(a.subjectivity <= 1.0);
  }
}

TEST_CASE("lexicon load fails loudly when files are missing") {
  CHECK_THROWS_AS(Lexicon::load("/nonexistent/lexica"), Error);
  try {
    Lexicon::load("/nonexistent/lexica");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::LexiconUnavailable);
  }
}

TEST_CASE("bundled lexica load and contain the pinned entries") {
  Lexicon lexicon = Lexicon::load(std::string(ORACLESIM_TEST_DATA_DIR) + "/lexica");
  CHECK(lexicon.is_modal("will"));
  CHECK(lexicon.is_hedge("perhaps"));
  CHECK(lexicon.is_modal("might"));
  CHECK(lexicon.is_hedge("might"));
  const SentimentEntry* great = lexicon.sentiment("great");
  REQUIRE(great != nullptr);
  CHECK(great->polarity == doctest::Approx(0.8));
  CHECK(great->subjectivity == doctest::Approx(0.75));
}
