#include "worldseq/kb.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "worldseq/error.hpp"
#include "worldseq/syntax.hpp"

namespace worldseq {

std::string_view to_string(KbKind kind) {
  switch (kind) {
    case KbKind::Default: return "default";
    case KbKind::Autoepistemic: return "ael";
    case KbKind::Probability: return "prob";
    case KbKind::Possibility: return "poss";
  }
  return "default";
}

KbKind kb_kind_from_extension(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".dl")) return KbKind::Default;
  if (ends_with(".ael")) return KbKind::Autoepistemic;
  if (ends_with(".prob")) return KbKind::Probability;
  if (ends_with(".poss")) return KbKind::Possibility;
  throw SemanticError("cannot tell the KB kind of '" + std::string(path) + "' from its extension");
}

namespace {

// Vocabulary being declared or inferred while a document is read.
class VocabularyBuilder {
 public:
  bool declared() const { return declared_; }

  void declare(TokenCursor& cursor) {
    cursor.expect_keyword("vocab");
    cursor.expect(TokenKind::Colon, "':' after 'vocab'");
    do {
      const Token& t = cursor.expect(TokenKind::Identifier, "a constant name");
      if (t.text == "true" || t.text == "false" || is_reserved_word(t.text)) {
        throw ParseError(t.line, t.column, "reserved word '" + t.text + "' cannot be a constant");
      }
      if (std::find(names_.begin(), names_.end(), t.text) != names_.end()) {
        throw ParseError(t.line, t.column, "duplicate constant '" + t.text + "'");
      }
      names_.push_back(t.text);
    } while (cursor.accept(TokenKind::Comma));
    declared_ = true;
  }

  // Checks (or, without a header, records) a constant at its source location.
  void use(const Token& t) {
    if (std::find(names_.begin(), names_.end(), t.text) != names_.end()) return;
    if (declared_) throw ParseError(t.line, t.column, "unknown constant '" + t.text + "'");
    names_.push_back(t.text);
  }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  Vocabulary build() const { return Vocabulary(names_); }

 private:
  bool declared_ = false;
  std::vector<std::string> names_;
};

// Parses with `parse` and routes every constant in the consumed tokens
// through the vocabulary builder.
template <typename ParseFn>
Formula checked(TokenCursor& cursor, VocabularyBuilder& vocab, ParseFn parse) {
  const std::size_t start = cursor.position();
  Formula f = parse(cursor);
  for (std::size_t i = start; i < cursor.position(); ++i) {
    const Token& t = cursor.token(i);
    if (t.kind == TokenKind::Identifier && t.text != "true" && t.text != "false") vocab.use(t);
  }
  return f;
}

Formula formula(TokenCursor& cursor, VocabularyBuilder& vocab) {
  return checked(cursor, vocab, [](TokenCursor& c) { return parse_formula(c); });
}

Formula unary(TokenCursor& cursor, VocabularyBuilder& vocab) {
  return checked(cursor, vocab, [](TokenCursor& c) { return parse_unary(c); });
}

Rational number(TokenCursor& cursor, std::string_view what) {
  const Token& first = cursor.expect(TokenKind::Number, what);
  std::string text = first.text;
  if (cursor.accept(TokenKind::Slash)) text += "/" + cursor.expect(TokenKind::Number, "a denominator").text;
  try {
    return parse_rational(text);
  } catch (const SemanticError& e) {
    throw ParseError(first.line, first.column, e.what());
  }
}

void end_of_line(TokenCursor& cursor) {
  if (!cursor.at(TokenKind::End)) cursor.fail("unexpected trailing input");
}

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = tokenize(line, number);
    if (tokens.size() > 1) out.push_back(Line{number, std::move(tokens)});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

// Handles an optional leading vocab header; returns the lines after it.
std::span<const Line> read_header(std::span<const Line> lines, VocabularyBuilder& vocab, bool required) {
  if (!lines.empty()) {
    TokenCursor cursor(lines.front().tokens);
    if (cursor.at_keyword("vocab")) {
      vocab.declare(cursor);
      end_of_line(cursor);
      lines = lines.subspan(1);
    }
  }
  if (required && !vocab.declared()) {
    const std::size_t line = lines.empty() ? 1 : lines.front().number;
    throw ParseError(line, 1, "expected a 'vocab:' header line");
  }
  for (const auto& l : lines) {
    TokenCursor cursor(l.tokens);
    if (cursor.at_keyword("vocab") && cursor.peek(1).kind == TokenKind::Colon) {
      cursor.fail("the vocab header must come first");
    }
  }
  return lines;
}

KbDocument parse_default(std::span<const Line> all, const Limits& limits) {
  VocabularyBuilder vocab;
  const auto lines = read_header(all, vocab, false);
  std::vector<Formula> facts;
  std::vector<DefaultRule> rules;
  std::vector<std::size_t> item_lines;
  std::set<std::string> ids;

  for (const auto& line : lines) {
    TokenCursor cursor(line.tokens);
    if (cursor.at_keyword("fact")) {
      cursor.next();
      cursor.expect(TokenKind::Colon, "':' after 'fact'");
      facts.push_back(formula(cursor, vocab));
    } else if (cursor.at_keyword("rule")) {
      cursor.next();
      const Token& id = cursor.expect(TokenKind::Identifier, "a rule id");
      if (!ids.insert(id.text).second) throw ParseError(id.line, id.column, "duplicate rule id '" + id.text + "'");
      cursor.expect(TokenKind::Colon, "':' after the rule id");
      DefaultRule rule;
      rule.id = id.text;
      rule.prerequisite = formula(cursor, vocab);
      cursor.expect(TokenKind::Colon, "':' after the prerequisite");
      do {
        cursor.expect_keyword("M");
        rule.justifications.push_back(formula(cursor, vocab));
      } while (cursor.accept(TokenKind::Comma));
      cursor.expect(TokenKind::Slash, "'/' before the consequent");
      rule.consequent = formula(cursor, vocab);
      rules.push_back(std::move(rule));
    } else {
      cursor.fail("expected 'fact:' or 'rule'");
    }
    end_of_line(cursor);
    item_lines.push_back(line.number);
  }
  Vocabulary v = vocab.build();
  DefaultTheory theory(v, std::move(rules), std::move(facts), limits);
  return KbDocument{KbKind::Default, std::move(v), std::move(theory), std::move(item_lines)};
}

ModalFormula premise(TokenCursor& cursor, VocabularyBuilder& vocab) {
  const bool modal = cursor.at_keyword("L") || (cursor.at(TokenKind::Not) && cursor.peek(1).kind == TokenKind::Identifier &&
                                                cursor.peek(1).text == "L");
  if (!modal) return ModalFormula{std::nullopt, {}, formula(cursor, vocab)};

  ModalFormula out{std::nullopt, {}, Formula::bottom()};
  if (cursor.at_keyword("L")) {
    cursor.next();
    out.belief = unary(cursor, vocab);
  } else {
    cursor.expect(TokenKind::Not, "'~'");
    cursor.expect_keyword("L");
    out.disbeliefs.push_back(unary(cursor, vocab));
  }
  while (cursor.accept(TokenKind::And)) {
    cursor.expect(TokenKind::Not, "'~L' (non-modal parts belong in the consequent)");
    cursor.expect_keyword("L");
    out.disbeliefs.push_back(unary(cursor, vocab));
  }
  if (cursor.accept(TokenKind::Implies)) {
    out.consequent = formula(cursor, vocab);
    return out;
  }
  // Bare L a is ~L a -> false; bare ~L b is L b -> false.
  if (out.belief && out.disbeliefs.empty()) return ModalFormula{std::nullopt, {*out.belief}, Formula::bottom()};
  if (!out.belief && out.disbeliefs.size() == 1) return ModalFormula{out.disbeliefs.front(), {}, Formula::bottom()};
  cursor.fail("expected '->'");
}

KbDocument parse_ael(std::span<const Line> all, const Limits& limits) {
  VocabularyBuilder vocab;
  const auto lines = read_header(all, vocab, false);
  std::vector<ModalFormula> premises;
  std::vector<std::size_t> item_lines;
  for (const auto& line : lines) {
    TokenCursor cursor(line.tokens);
    premises.push_back(premise(cursor, vocab));
    end_of_line(cursor);
    item_lines.push_back(line.number);
  }
  Vocabulary v = vocab.build();
  AelPremises body(v, std::move(premises), limits);
  return KbDocument{KbKind::Autoepistemic, std::move(v), std::move(body), std::move(item_lines)};
}

KbDocument parse_prob(std::span<const Line> all, std::size_t last_line) {
  VocabularyBuilder vocab;
  const auto lines = read_header(all, vocab, true);
  const Vocabulary v = vocab.build();
  std::vector<World> worlds;
  std::vector<std::size_t> item_lines;
  std::set<Assignment> seen;
  Rational total = 0;

  for (const auto& line : lines) {
    TokenCursor cursor(line.tokens);
    const Token& head = cursor.peek();
    cursor.expect_keyword("world");
    std::vector<bool> assigned(v.size(), false);
    std::vector<std::uint32_t> true_atoms;
    do {
      const bool negated = cursor.accept(TokenKind::Not);
      const Token& name = cursor.expect(TokenKind::Identifier, "a literal");
      const auto index = vocab.find(name.text);
      if (!index) throw ParseError(name.line, name.column, "unknown constant '" + name.text + "'");
      if (assigned[*index]) throw ParseError(name.line, name.column, "'" + name.text + "' is assigned twice");
      assigned[*index] = true;
      if (!negated) true_atoms.push_back(static_cast<std::uint32_t>(*index));
    } while (cursor.accept(TokenKind::Comma));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!assigned[i]) throw ParseError(head.line, head.column, "world does not assign '" + v.name(i) + "'");
    }
    cursor.expect(TokenKind::Colon, "':' before the weight");
    World w{Assignment(std::move(true_atoms)), number(cursor, "a weight")};
    end_of_line(cursor);
    if (!seen.insert(w.assignment).second) {
      throw ParseError(head.line, head.column, "world " + describe(w, v) + " is listed twice");
    }
    total += w.weight;
    worlds.push_back(std::move(w));
    item_lines.push_back(line.number);
  }
  if (!approx_equal(total, Rational(1), weight_tolerance())) {
    throw ParseError(last_line, 1, "world weights sum to " + format_rational(total) + ", not 1");
  }
  SampleSpace space(v, std::move(worlds));
  return KbDocument{KbKind::Probability, v, std::move(space), std::move(item_lines)};
}

KbDocument parse_poss(std::span<const Line> all, const Limits& limits) {
  VocabularyBuilder vocab;
  const auto lines = read_header(all, vocab, false);
  std::vector<std::pair<Rational, Formula>> statements;
  std::vector<std::size_t> item_lines;
  for (const auto& line : lines) {
    TokenCursor cursor(line.tokens);
    cursor.expect_keyword("poss");
    const Token& at = cursor.peek();
    Rational degree = number(cursor, "a possibility degree");
    if (degree < 0 || degree > 1) throw ParseError(at.line, at.column, "possibility degree must lie in [0, 1]");
    cursor.expect(TokenKind::Colon, "':' before the formula");
    statements.emplace_back(std::move(degree), formula(cursor, vocab));
    end_of_line(cursor);
    item_lines.push_back(line.number);
  }
  Vocabulary v = vocab.build();
  auto kb = PossibilisticKB::from_statements(v, statements, limits);
  return KbDocument{KbKind::Possibility, std::move(v), std::move(kb), std::move(item_lines)};
}

}  // namespace

KbDocument parse_kb(std::string_view text, KbKind kind, const Limits& limits) {
  const auto lines = lines_of(text);
  const std::size_t last_line = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
  switch (kind) {
    case KbKind::Default: return parse_default(lines, limits);
    case KbKind::Autoepistemic: return parse_ael(lines, limits);
    case KbKind::Probability: return parse_prob(lines, last_line);
    case KbKind::Possibility: return parse_poss(lines, limits);
  }
  throw SemanticError("unknown KB kind");
}

namespace {

std::string vocab_header(const Vocabulary& vocab) {
  std::string out = "vocab:";
  for (std::size_t i = 0; i < vocab.size(); ++i) out += (i ? ", " : " ") + vocab.name(i);
  return out + "\n";
}

}  // namespace

std::string serialize_kb(const KbDocument& doc) {
  std::string out = vocab_header(doc.vocab);
  switch (doc.kind) {
    case KbKind::Default: {
      const auto& theory = doc.default_theory();
      for (const auto& f : theory.facts()) out += "fact: " + f.to_string() + "\n";
      for (const auto& r : theory.rules()) {
        out += "rule " + r.id + ": " + r.prerequisite.to_string() + " : ";
        for (std::size_t i = 0; i < r.justifications.size(); ++i) {
          out += (i ? ", M " : "M ") + r.justifications[i].to_string();
        }
        out += " / " + r.consequent.to_string() + "\n";
      }
      break;
    }
    case KbKind::Autoepistemic:
      for (const auto& p : doc.ael_premises().premises()) out += p.to_string() + "\n";
      break;
    case KbKind::Probability:
      for (const auto& w : doc.sample_space().worlds()) {
        std::string lits;
        for (std::size_t i = 0; i < doc.vocab.size(); ++i) {
          if (i) lits += ',';
          if (!w.assignment.holds(i)) lits += '~';
          lits += doc.vocab.name(i);
        }
        out += "world " + lits + " : " + format_rational(w.weight) + "\n";
      }
      break;
    case KbKind::Possibility:
      for (const auto& level : doc.possibilistic_kb().levels()) {
        for (const auto& f : level.formulas) out += "poss " + format_rational(level.degree) + " : " + f.to_string() + "\n";
      }
      break;
  }
  return out;
}

KbDocument make_document(DefaultTheory theory) {
  Vocabulary v = theory.vocab();
  return KbDocument{KbKind::Default, std::move(v), std::move(theory), {}};
}

KbDocument make_document(AelPremises premises) {
  Vocabulary v = premises.vocab();
  return KbDocument{KbKind::Autoepistemic, std::move(v), std::move(premises), {}};
}

KbDocument make_document(SampleSpace space) {
  Vocabulary v = space.vocab();
  return KbDocument{KbKind::Probability, std::move(v), std::move(space), {}};
}

KbDocument make_document(PossibilisticKB kb) {
  Vocabulary v = kb.vocab();
  return KbDocument{KbKind::Possibility, std::move(v), std::move(kb), {}};
}

}  // namespace worldseq
