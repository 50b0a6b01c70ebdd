#pragma once

// Concrete formula syntax shared by every knowledge-base format.
//
//   identifiers  [a-zA-Z_][a-zA-Z0-9_]*
//   literals     true false
//   operators    ~  &  |  ->  <->      (tightest to loosest; -> is
//                                       right-associative, the others left)
//
// The lexer also produces the punctuation the KB formats need (`:` `,` `/`
// and numbers), and `#` starts a comment that runs to the end of the line.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "worldseq/logic.hpp"

namespace worldseq {

enum class TokenKind {
  Identifier,
  Number,
  Not,
  And,
  Or,
  Implies,
  Iff,
  LParen,
  RParen,
  Colon,
  Comma,
  Slash,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

/// Tokenizes one line. The result always ends with an End token positioned
/// just past the last character. Throws ParseError on an unexpected character.
std::vector<Token> tokenize(std::string_view line, std::size_t line_number = 1);

/// Cursor over a token vector, used by the formula parser and the KB parsers.
class TokenCursor {
 public:
  explicit TokenCursor(const std::vector<Token>& tokens) : tokens_(tokens) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_keyword(std::string_view word) const;
  bool accept(TokenKind kind);
  const Token& expect(TokenKind kind, std::string_view what);
  void expect_keyword(std::string_view word);
  [[noreturn]] void fail(std::string_view message) const;

  std::size_t position() const noexcept { return pos_; }
  const Token& token(std::size_t index) const { return tokens_.at(index); }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

/// Parses one formula starting at the cursor and stops at the first token that
/// cannot continue it.
Formula parse_formula(TokenCursor& cursor);

/// Parses a unary-level formula: a constant, a literal, a negation or a
/// parenthesised formula. Used for the operand of the belief operator `L`.
Formula parse_unary(TokenCursor& cursor);

/// Parses a complete formula; trailing tokens are an error.
Formula parse_formula(std::string_view text);

/// Words with a fixed meaning in some KB format; never accepted as constants.
bool is_reserved_word(std::string_view word);

}  // namespace worldseq
