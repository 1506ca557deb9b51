#include <doctest.h>

#include "oraclesim/lex/token.hpp"

using oraclesim::lex::Token;
using oraclesim::lex::tokenize;

TEST_CASE("empty input yields no tokens") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \t\n  ").empty());
  CHECK(tokenize("... --- !!!").empty());
}

TEST_CASE("hand tokenization of short phrases") {
  CHECK((tokenize("Fly, fly to the ends") ==
        std::vector<Token>{"fly", "fly", "to", "the", "ends"}));
  // apostrophes are word characters, even trailing ones
  CHECK((tokenize("Orestes' bones?") == std::vector<Token>{"orestes'", "bones"}));
  CHECK((tokenize("don't stop") == std::vector<Token>{"don't", "stop"}));
}

TEST_CASE("punctuation is stripped only at the edges") {
  CHECK((tokenize("(hello) [world]!") == std::vector<Token>{"hello", "world"}));
  CHECK((tokenize("well-known") == std::vector<Token>{"well-known"}));
  CHECK((tokenize("a.b") == std::vector<Token>{"a.b"}));
}

TEST_CASE("tokens are lowercase and whitespace-free") {
  for (const Token& token : tokenize("The QUICK \t Brown\nFox, 99 Bottles!")) {
    CHECK_FALSE(token.empty());
    for (char c : token) {
      CHECK_FALSE(c == ' ');
      CHECK_FALSE((c >= 'A' && c <= 'Z'));
    }
  }
}

TEST_CASE("non-ascii bytes pass through untouched") {
  auto tokens = tokenize("delphi \xce\xb4\xce\xb5\xce\xbb\xcf\x86\xce\xbf\xce\xaf");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0] == "delphi");
  CHECK(tokens[1] == "\xce\xb4\xce\xb5\xce\xbb\xcf\x86\xce\xbf\xce\xaf");
}
