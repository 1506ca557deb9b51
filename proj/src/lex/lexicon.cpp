#include "oraclesim/lex/lexicon.hpp"

#include <array>
#include <charconv>
#include <fstream>

#include "oraclesim/error.hpp"

namespace oraclesim::lex {

namespace {

// Tokens that flip the polarity of the entry that follows them.
const std::unordered_set<std::string> kNegators = {
    "not", "no", "never", "neither", "nor", "cannot"};

std::ifstream open_or_throw(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw Error(ErrorCode::LexiconUnavailable,
                "cannot open lexicon file " + file.string());
  }
  return in;
}

bool skippable(const std::string& line) {
  return line.empty() || line[0] == '#';
}

std::unordered_set<std::string> load_word_list(const std::filesystem::path& file) {
  auto in = open_or_throw(file);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skippable(line)) continue;
    words.insert(line);
  }
  return words;
}

double parse_double(std::string_view text, const std::filesystem::path& file,
                    int line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::LexiconUnavailable,
                file.string() + ":" + std::to_string(line_no) +
                    ": bad numeric field '" + std::string(text) + "'");
  }
  return value;
}

std::unordered_map<std::string, SentimentEntry> load_sentiment(
    const std::filesystem::path& file) {
  auto in = open_or_throw(file);
  std::unordered_map<std::string, SentimentEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skippable(line)) continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = (t1 == std::string::npos) ? std::string::npos
                                               : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw Error(ErrorCode::LexiconUnavailable,
                  file.string() + ":" + std::to_string(line_no) +
                      ": expected token<TAB>polarity<TAB>subjectivity");
    }
    std::string token = line.substr(0, t1);
    SentimentEntry entry;
    entry.polarity = parse_double(
        std::string_view(line).substr(t1 + 1, t2 - t1 - 1), file, line_no);
    entry.subjectivity =
        parse_double(std::string_view(line).substr(t2 + 1), file, line_no);
    entries[std::move(token)] = entry;
  }
  return entries;
}

}  // namespace

Lexicon Lexicon::load(const std::filesystem::path& dir) {
  Lexicon lexicon;
  lexicon.modal_ = load_word_list(dir / "modal.txt");
  lexicon.hedge_ = load_word_list(dir / "hedge.txt");
  lexicon.sentiment_ = load_sentiment(dir / "sentiment.tsv");
  return lexicon;
}

Lexicon Lexicon::from_lists(
    std::unordered_set<std::string> modal, std::unordered_set<std::string> hedge,
    std::unordered_map<std::string, SentimentEntry> sentiment) {
  Lexicon lexicon;
  lexicon.modal_ = std::move(modal);
  lexicon.hedge_ = std::move(hedge);
  lexicon.sentiment_ = std::move(sentiment);
  return lexicon;
}

bool Lexicon::is_negator(const Token& token) const {
  return kNegators.count(token) > 0;
}

}  // namespace oraclesim::lex
