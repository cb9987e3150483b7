#include <cctype>
#include <charconv>

#include "ordlat/detail/lexer.hpp"
#include "ordlat/error.hpp"
#include "ordlat/group.hpp"

namespace ordlat {
namespace detail {

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::name: return "generator";
    case TokenKind::integer: return "integer";
    case TokenKind::star: return "'*'";
    case TokenKind::caret: return "'^'";
    case TokenKind::minus: return "'-'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::meet: return "'/\\'";
    case TokenKind::join: return "'\\/'";
    case TokenKind::end: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::islower(static_cast<unsigned char>(c))) {
      ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      tokens.push_back({TokenKind::name, std::string(text.substr(start, i - start)), 0, start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
      if (ec != std::errc()) throw SyntaxError("integer out of range", start);
      tokens.push_back({TokenKind::integer, std::string(text.substr(start, i - start)), value, start});
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '\\') {
      tokens.push_back({TokenKind::meet, "/\\", 0, start});
      i += 2;
      continue;
    }
    if (c == '\\' && i + 1 < text.size() && text[i + 1] == '/') {
      tokens.push_back({TokenKind::join, "\\/", 0, start});
      i += 2;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '*': kind = TokenKind::star; break;
      case '^': kind = TokenKind::caret; break;
      case '-': kind = TokenKind::minus; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
    tokens.push_back({kind, std::string(1, c), 0, start});
    ++i;
  }
  tokens.push_back({TokenKind::end, "", 0, text.size()});
  return tokens;
}

}  // namespace detail

namespace {

using detail::Token;
using detail::TokenKind;

class WordParser {
 public:
  WordParser(const Group& group, std::string_view text)
      : group_(group), tokens_(detail::tokenize(text)) {}

  Word parse() {
    Word w = product();
    expect(TokenKind::end);
    return w;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  void expect(TokenKind kind) {
    if (peek().kind != kind) {
      throw SyntaxError("expected " + std::string(detail::describe(kind)) + ", found " +
                            std::string(detail::describe(peek().kind)),
                        peek().position);
    }
    ++pos_;
  }

  Word product() {
    Word w = factor();
    while (peek().kind == TokenKind::star) {
      ++pos_;
      w = w * factor();
    }
    return w;
  }

  Word factor() {
    Word w = atom();
    if (peek().kind == TokenKind::caret) {
      ++pos_;
      bool negative = false;
      if (peek().kind == TokenKind::minus) {
        negative = true;
        ++pos_;
      }
      const Token& t = peek();
      expect(TokenKind::integer);
      w = w.pow(negative ? -t.value : t.value);
    }
    return w;
  }

  Word atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::integer:
        if (t.value != 1) throw SyntaxError("only the integer 1 denotes an element", t.position);
        ++pos_;
        return group_.identity();
      case TokenKind::name: {
        auto index = group_.generator_index(t.text);
        if (!index) {
          throw Error(ErrorKind::invalid_generator,
                      "unknown generator '" + t.text + "' for " + group_.spec() +
                          " at position " + std::to_string(t.position));
        }
        ++pos_;
        return group_.generator(*index);
      }
      case TokenKind::lparen: {
        ++pos_;
        Word w = product();
        expect(TokenKind::rparen);
        return w;
      }
      default:
        throw SyntaxError("expected a generator, '1' or '(', found " +
                              std::string(detail::describe(t.kind)),
                          t.position);
    }
  }

  const Group& group_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Group::parse_word(std::string_view text) const { return WordParser(*this, text).parse(); }

}  // namespace ordlat
