#include "oraclesim/lex/token.hpp"

namespace oraclesim::lex {

namespace {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Word characters: ASCII letters, digits, apostrophe, and any non-ASCII byte.
inline bool is_word_char(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u >= 0x80) return true;
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '\'';
}

inline char lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    std::string_view fragment = text.substr(start, i - start);

    std::size_t lo = 0;
    std::size_t hi = fragment.size();
    while (lo < hi && !is_word_char(fragment[lo])) ++lo;
    while (hi > lo && !is_word_char(fragment[hi - 1])) --hi;
    if (lo == hi) continue;

    Token token;
    token.reserve(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) token.push_back(lower(fragment[k]));
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace oraclesim::lex
