#pragma once

// Text formats for the four knowledge-base kinds. All share the formula
// syntax of syntax.hpp, `#` comments, and an optional `vocab: a, b, c` header
// (required for .prob). Without a header the vocabulary is the constants in
// order of first appearance.
//
//   .dl    fact: <formula>
//          rule <id>: <formula> : M <formula> [, M <formula>]* / <formula>
//   .ael   [L <unary>] [& ~L <unary>]* -> <formula>   or a bare <formula>,
//          `L <unary>` or `~L <unary>`
//   .prob  world <lit>[,<lit>]* : <weight>            lit = name | ~name
//   .poss  poss <degree> : <formula>
//
// Weights and degrees are decimals or fractions (`0.3`, `1/99`), held exactly.
// The operand of L must be unary-level; parenthesise anything larger.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "worldseq/autoepistemic.hpp"
#include "worldseq/default_logic.hpp"
#include "worldseq/possibility.hpp"
#include "worldseq/probability.hpp"

namespace worldseq {

enum class KbKind { Default, Autoepistemic, Probability, Possibility };

std::string_view to_string(KbKind kind);
/// Kind from a file extension (".dl", ".ael", ".prob", ".poss"); throws
/// SemanticError otherwise.
KbKind kb_kind_from_extension(std::string_view path);

using KbBody = std::variant<DefaultTheory, AelPremises, SampleSpace, PossibilisticKB>;

struct KbDocument {
  KbKind kind;
  Vocabulary vocab;
  KbBody body;
  /// 1-based source line of each item (rule or fact, premise, world,
  /// statement) in the order the items appear in the text.
  std::vector<std::size_t> item_lines;

  const DefaultTheory& default_theory() const { return std::get<DefaultTheory>(body); }
  const AelPremises& ael_premises() const { return std::get<AelPremises>(body); }
  const SampleSpace& sample_space() const { return std::get<SampleSpace>(body); }
  const PossibilisticKB& possibilistic_kb() const { return std::get<PossibilisticKB>(body); }

  /// Structural equality of kind, vocabulary and body; source lines ignored.
  friend bool operator==(const KbDocument& a, const KbDocument& b) {
    return a.kind == b.kind && a.vocab == b.vocab && a.body == b.body;
  }
};

/// Parses a KB. Throws ParseError (with line and column) on syntax errors,
/// unknown constants, non-total or duplicate world assignments and weights
/// that do not sum to 1; ResourceError when a cap is exceeded.
KbDocument parse_kb(std::string_view text, KbKind kind, const Limits& limits = {});

/// Text that parse_kb reads back to a structurally equal document. Always
/// writes an explicit vocab header.
std::string serialize_kb(const KbDocument& doc);

/// Wraps a value built in code as a document (item_lines left empty).
KbDocument make_document(DefaultTheory theory);
KbDocument make_document(AelPremises premises);
KbDocument make_document(SampleSpace space);
KbDocument make_document(PossibilisticKB kb);

}  // namespace worldseq
