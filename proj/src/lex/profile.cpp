#include "oraclesim/lex/profile.hpp"

#include <cmath>
#include <unordered_map>

namespace oraclesim::lex {

double shannon_entropy(std::span<const Token> tokens) {
  if (tokens.size() <= 1) return 0.0;
  std::unordered_map<std::string_view, std::uint64_t> counts;
  counts.reserve(tokens.size());
  for (const Token& t : tokens) ++counts[t];

  const double n = static_cast<double>(tokens.size());
  double entropy = 0.0;
  for (const auto& [word, count] : counts) {
    double p = static_cast<double>(count) / n;
    entropy -= p * std::log2(p);
  }
  return entropy < 0.0 ? 0.0 : entropy;
}

double modal_density(std::span<const Token> tokens, const Lexicon& lexicon) {
  if (tokens.empty()) return 0.0;
  std::uint64_t hits = 0;
  for (const Token& t : tokens) {
    if (lexicon.is_modal(t)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

double hedge_density(std::span<const Token> tokens, const Lexicon& lexicon) {
  if (tokens.empty()) return 0.0;
  std::uint64_t hits = 0;
  for (const Token& t : tokens) {
    if (lexicon.is_hedge(t)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

Sentiment sentiment(std::span<const Token> tokens, const Lexicon& lexicon) {
  double polarity_sum = 0.0;
  double subjectivity_sum = 0.0;
  std::uint64_t matches = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const SentimentEntry* entry = lexicon.sentiment(tokens[i]);
    if (entry == nullptr) continue;
    double polarity = entry->polarity;
    if (i > 0 && lexicon.is_negator(tokens[i - 1])) polarity *= -0.5;
    polarity_sum += polarity;
    subjectivity_sum += entry->subjectivity;
    ++matches;
  }
  if (matches == 0) return {};
  return {polarity_sum / static_cast<double>(matches),
          subjectivity_sum / static_cast<double>(matches)};
}

LexicalProfile profile(std::string_view text, const Lexicon& lexicon) {
  std::vector<Token> tokens = tokenize(text);
  LexicalProfile result;
  result.word_count = tokens.size();
  if (tokens.empty()) return result;
  result.shannon_entropy = shannon_entropy(tokens);
  result.modal_density = modal_density(tokens, lexicon);
  result.hedge_density = hedge_density(tokens, lexicon);
  Sentiment s = sentiment(tokens, lexicon);
  result.polarity = s.polarity;
  result.subjectivity = s.subjectivity;
  return result;
}

}  // namespace oraclesim::lex
