#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ordlat::detail {

enum class TokenKind { name, integer, star, caret, minus, lparen, rparen, meet, join, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::int64_t value = 0;
  std::size_t position = 0;
};

// Shared tokenizer for words and lattice terms. `/\` is meet, `\/` is join.
std::vector<Token> tokenize(std::string_view text);

std::string_view describe(TokenKind kind);

}  // namespace ordlat::detail
