#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "oraclesim/lex/token.hpp"

namespace oraclesim::lex {

struct SentimentEntry {
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
};

// Word lists backing the density and sentiment metrics. Loaded from plain
// data files: modal.txt and hedge.txt hold one token per line; sentiment.tsv
// holds "token<TAB>polarity<TAB>subjectivity" lines. Lines starting with '#'
// are comments.
class Lexicon {
 public:
  Lexicon() = default;

  // Reads modal.txt, hedge.txt and sentiment.tsv from `dir`.
  // Throws Error(LexiconUnavailable) when a file is missing or malformed.
  static Lexicon load(const std::filesystem::path& dir);

  static Lexicon from_lists(std::unordered_set<std::string> modal,
                            std::unordered_set<std::string> hedge,
                            std::unordered_map<std::string, SentimentEntry> sentiment);

  bool is_modal(const Token& token) const { return modal_.count(token) > 0; }
  bool is_hedge(const Token& token) const { return hedge_.count(token) > 0; }
  bool is_negator(const Token& token) const;

  // nullptr when the token has no sentiment entry.
  const SentimentEntry* sentiment(const Token& token) const {
    auto it = sentiment_.find(token);
    return it == sentiment_.end() ? nullptr : &it->second;
  }

  std::size_t modal_size() const { return modal_.size(); }
  std::size_t hedge_size() const { return hedge_.size(); }
  std::size_t sentiment_size() const { return sentiment_.size(); }

 private:
  std::unordered_set<std::string> modal_;
  std::unordered_set<std::string> hedge_;
  std::unordered_map<std::string, SentimentEntry> sentiment_;
};

}  // namespace oraclesim::lex
