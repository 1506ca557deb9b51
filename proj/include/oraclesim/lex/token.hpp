#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace oraclesim::lex {

// A lowercased word: non-empty, whitespace-free, equal to its own lowercase
// form. Produced only by tokenize().
using Token = std::string;

// Deterministic tokenization: split on whitespace, strip leading/trailing
// punctuation, lowercase, drop empty fragments. Apostrophes count as word
// characters ("orestes'" keeps its trailing apostrophe); bytes outside ASCII
// are passed through untouched, which is all the unicode handling this
// pipeline needs.
std::vector<Token> tokenize(std::string_view text);

}  // namespace oraclesim::lex
