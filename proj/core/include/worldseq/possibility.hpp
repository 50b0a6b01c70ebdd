#pragma once

// Crisp possibility theory: a set of statements Pi(phi) = r grouped into
// levels of equal r, its possibility partition sequence, and the Pi/N
// measures read off a sequence.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "worldseq/logic.hpp"
#include "worldseq/partition.hpp"

namespace worldseq {

/// Every formula in the level has possibility `degree`.
struct PossibilityLevel {
  std::vector<Formula> formulas;
  Rational degree;

  friend bool operator==(const PossibilityLevel&, const PossibilityLevel&) = default;
};

class PossibilisticKB {
 public:
  /// Levels must be non-empty, with degrees in [0, 1] and strictly
  /// increasing. Throws SemanticError otherwise, ResourceError when the
  /// vocabulary is above the cap.
  PossibilisticKB(Vocabulary vocab, std::vector<PossibilityLevel> levels, Limits limits = {});

  /// Groups statements by degree (merging equal degrees, dropping repeated
  /// formulas) and sorts the levels.
  static PossibilisticKB from_statements(Vocabulary vocab, const std::vector<std::pair<Rational, Formula>>& statements,
                                         Limits limits = {});

  const Vocabulary& vocab() const noexcept { return vocab_; }
  const std::vector<PossibilityLevel>& levels() const noexcept { return levels_; }
  const Limits& limits() const noexcept { return limits_; }

  friend bool operator==(const PossibilisticKB& a, const PossibilisticKB& b) {
    return a.vocab_ == b.vocab_ && a.levels_ == b.levels_;
  }

 private:
  Vocabulary vocab_;
  std::vector<PossibilityLevel> levels_;
  Limits limits_;
};

/// Why a statement set admits no possibility sequence.
struct PossibilityInconsistency {
  /// The statement whose worlds were all used up by lower levels; absent when
  /// the fault is that no world is left for the top class.
  std::optional<Formula> formula;
  Rational degree;
  std::string message;
};

using PossibilityBuild = std::variant<PartitionSequence, PossibilityInconsistency>;

/// Classes W_0..W_{n-1} are the unions of the level formulas' models among
/// the worlds not yet placed, W_n is the remainder. Each class receives total
/// weight r_{i+1} - r_i (r_0 = 0, r_{n+1} = 1) split evenly over its worlds.
PossibilityBuild build_poss_sequence(const PossibilisticKB& kb);

/// Checks the class-membership condition (1) and the class-weight condition
/// (2, within 1e-9). Any split of weight inside a class is accepted.
CheckReport check_poss_sequence(const PossibilisticKB& kb, const PartitionSequence& seq);

/// Cumulative weight up to and including the highest class holding a model
/// of phi; 0 when phi has no model in the sequence.
Rational possibility(const PartitionSequence& seq, const Formula& phi);

/// 1 - possibility(~phi).
Rational necessity(const PartitionSequence& seq, const Formula& phi);

}  // namespace worldseq
