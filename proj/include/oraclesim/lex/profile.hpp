#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "oraclesim/lex/lexicon.hpp"
#include "oraclesim/lex/token.hpp"

namespace oraclesim::lex {

// The six per-text metrics. An empty text profiles as all zeros.
struct LexicalProfile {
  std::uint64_t word_count = 0;
  double shannon_entropy = 0.0;  // bits, <= log2(word_count)
  double modal_density = 0.0;    // [0, 1]
  double hedge_density = 0.0;    // [0, 1]
  double polarity = 0.0;         // [-1, 1]
  double subjectivity = 0.0;     // [0, 1]

  bool operator==(const LexicalProfile&) const = default;
};

struct Sentiment {
  double polarity = 0.0;
  double subjectivity = 0.0;
};

// H = -sum p_w log2 p_w over the token frequency distribution; 0 for N <= 1.
double shannon_entropy(std::span<const Token> tokens);

// Fraction of tokens found in the modal list; 0 for empty input.
double modal_density(std::span<const Token> tokens, const Lexicon& lexicon);

// Fraction of tokens found in the hedge list; 0 for empty input.
double hedge_density(std::span<const Token> tokens, const Lexicon& lexicon);

// Mean polarity/subjectivity over matched lexicon entries, (0, 0) when
// nothing matches. A negator immediately before a matched entry multiplies
// that entry's polarity by -0.5.
Sentiment sentiment(std::span<const Token> tokens, const Lexicon& lexicon);

// All six metrics over one tokenization of `text`.
LexicalProfile profile(std::string_view text, const Lexicon& lexicon);

}  // namespace oraclesim::lex
