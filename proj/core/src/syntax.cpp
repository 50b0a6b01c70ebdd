#include "worldseq/syntax.hpp"

#include <array>
#include <cctype>

#include "worldseq/error.hpp"

namespace worldseq {

std::vector<Token> tokenize(std::string_view line, std::size_t line_number) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](TokenKind kind, std::size_t start, std::size_t len) {
    out.push_back(Token{kind, std::string(line.substr(start, len)), line_number, start + 1});
    i = start + len;
  };
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      push(TokenKind::Identifier, i, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < line.size() &&
                                                         std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
      std::size_t j = i;
      bool point = false;
      while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || (line[j] == '.' && !point))) {
        if (line[j] == '.') point = true;
        ++j;
      }
      push(TokenKind::Number, i, j - i);
      continue;
    }
    if (line.compare(i, 3, "<->") == 0) {
      push(TokenKind::Iff, i, 3);
      continue;
    }
    if (line.compare(i, 2, "->") == 0) {
      push(TokenKind::Implies, i, 2);
      continue;
    }
    switch (c) {
      case '~': push(TokenKind::Not, i, 1); continue;
      case '&': push(TokenKind::And, i, 1); continue;
      case '|': push(TokenKind::Or, i, 1); continue;
      case '(': push(TokenKind::LParen, i, 1); continue;
      case ')': push(TokenKind::RParen, i, 1); continue;
      case ':': push(TokenKind::Colon, i, 1); continue;
      case ',': push(TokenKind::Comma, i, 1); continue;
      case '/': push(TokenKind::Slash, i, 1); continue;
      default: break;
    }
    throw ParseError(line_number, i + 1, std::string("unexpected character '") + c + "'");
  }
  out.push_back(Token{TokenKind::End, "", line_number, line.size() + 1});
  return out;
}

const Token& TokenCursor::peek(std::size_t ahead) const {
  const std::size_t at = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[at];
}

const Token& TokenCursor::next() {
  const Token& t = tokens_[pos_];
  if (t.kind != TokenKind::End) ++pos_;
  return t;
}

bool TokenCursor::at_keyword(std::string_view word) const {
  return peek().kind == TokenKind::Identifier && peek().text == word;
}

bool TokenCursor::accept(TokenKind kind) {
  if (!at(kind)) return false;
  next();
  return true;
}

const Token& TokenCursor::expect(TokenKind kind, std::string_view what) {
  if (!at(kind)) fail("expected " + std::string(what));
  return next();
}

void TokenCursor::expect_keyword(std::string_view word) {
  if (!at_keyword(word)) fail("expected '" + std::string(word) + "'");
  next();
}

void TokenCursor::fail(std::string_view message) const {
  const Token& t = peek();
  std::string found = t.kind == TokenKind::End ? "end of line" : "'" + t.text + "'";
  throw ParseError(t.line, t.column, std::string(message) + ", found " + found);
}

bool is_reserved_word(std::string_view word) {
  static constexpr std::array<std::string_view, 9> kReserved = {
      "true", "false", "L", "M", "rule", "fact", "world", "poss", "vocab"};
  for (auto r : kReserved) {
    if (r == word) return true;
  }
  return false;
}

namespace {

Formula parse_iff(TokenCursor& cursor);

Formula parse_primary(TokenCursor& cursor) {
  const Token& t = cursor.peek();
  if (t.kind == TokenKind::LParen) {
    cursor.next();
    Formula inner = parse_iff(cursor);
    cursor.expect(TokenKind::RParen, "')'");
    return inner;
  }
  if (t.kind == TokenKind::Identifier) {
    if (t.text == "true") {
      cursor.next();
      return Formula::top();
    }
    if (t.text == "false") {
      cursor.next();
      return Formula::bottom();
    }
    if (is_reserved_word(t.text)) cursor.fail("reserved word cannot be used as a constant");
    return Formula::atom(cursor.next().text);
  }
  cursor.fail("expected a formula");
}

Formula parse_and(TokenCursor& cursor) {
  Formula out = parse_unary(cursor);
  while (cursor.accept(TokenKind::And)) out = out & parse_unary(cursor);
  return out;
}

Formula parse_or(TokenCursor& cursor) {
  Formula out = parse_and(cursor);
  while (cursor.accept(TokenKind::Or)) out = out | parse_and(cursor);
  return out;
}

Formula parse_implies(TokenCursor& cursor) {
  Formula lhs = parse_or(cursor);
  if (cursor.accept(TokenKind::Implies)) return implies(lhs, parse_implies(cursor));
  return lhs;
}

Formula parse_iff(TokenCursor& cursor) {
  Formula out = parse_implies(cursor);
  while (cursor.accept(TokenKind::Iff)) out = iff(out, parse_implies(cursor));
  return out;
}

// Binding strength used by the printer; higher binds tighter.
int strength(Connective op) {
  switch (op) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    case Connective::Not: return 5;
    default: return 6;
  }
}

void print(const Formula& f, std::string& out) {
  auto child = [&out](const Formula& sub, bool parens) {
    if (parens) out += '(';
    print(sub, out);
    if (parens) out += ')';
  };
  const Connective op = f.connective();
  switch (op) {
    case Connective::Atom: out += f.name(); return;
    case Connective::True: out += "true"; return;
    case Connective::False: out += "false"; return;
    case Connective::Not:
      out += '~';
      child(f.left(), strength(f.left().connective()) < strength(Connective::Not));
      return;
    default: break;
  }
  const int s = strength(op);
  // Left-associative operators need parentheses on an equal-strength right
  // operand; -> is right-associative, so the reverse.
  const bool right_assoc = op == Connective::Implies;
  const int ls = strength(f.left().connective());
  const int rs = strength(f.right().connective());
  child(f.left(), right_assoc ? ls <= s : ls < s);
  switch (op) {
    case Connective::And: out += " & "; break;
    case Connective::Or: out += " | "; break;
    case Connective::Implies: out += " -> "; break;
    default: out += " <-> "; break;
  }
  child(f.right(), right_assoc ? rs < s : rs <= s);
}

}  // namespace

Formula parse_unary(TokenCursor& cursor) {
  if (cursor.accept(TokenKind::Not)) return ~parse_unary(cursor);
  return parse_primary(cursor);
}

Formula parse_formula(TokenCursor& cursor) { return parse_iff(cursor); }

Formula parse_formula(std::string_view text) {
  const auto tokens = tokenize(text);
  TokenCursor cursor(tokens);
  Formula out = parse_formula(cursor);
  if (!cursor.at(TokenKind::End)) cursor.fail("unexpected trailing input");
  return out;
}

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

}  // namespace worldseq
