#pragma once

// The partition-sequence type shared by every formalism, its structural
// validation, isomorphism, and the preference-chain view.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "worldseq/logic.hpp"

namespace worldseq {

enum class SequenceKind { Default, Autoepistemic, Conditional, Threshold, Possibility };

std::string_view to_string(SequenceKind kind);
/// Throws SemanticError on an unknown name.
SequenceKind sequence_kind_from_string(std::string_view name);

using WorldClass = std::vector<World>;

/// Ordered tuple <W_0, ..., W_l> of world classes, l >= 1. Classes may be
/// empty and are kept so that indices line up with provenance. provenance[i]
/// names the KB item that produced class i, or is empty when the class is
/// fixed by construction (W_0, the remainder class).
struct PartitionSequence {
  SequenceKind kind = SequenceKind::Default;
  Vocabulary vocab;
  std::vector<WorldClass> classes;
  std::vector<std::string> provenance;

  std::size_t last_index() const { return classes.size() - 1; }
  const WorldClass& last() const { return classes.back(); }

  friend bool operator==(const PartitionSequence&, const PartitionSequence&) = default;
};

/// Assembles a sequence from model sets (weights 1) over the exhaustive world
/// set of vocab.
PartitionSequence make_sequence(SequenceKind kind, const Vocabulary& vocab,
                                std::span<const ModelSet> classes,
                                std::vector<std::string> provenance = {});

/// Class-by-class model sets of a sequence over an exhaustive vocabulary.
std::vector<ModelSet> class_model_sets(const PartitionSequence& seq);

Rational total_weight(std::span<const World> worlds);

/// One failed clause of a checker. condition 0 is structural; 1..3 refer to
/// the numbered conditions of the formalism's sequence definition.
struct Violation {
  int condition = 0;
  std::optional<std::size_t> class_index;
  std::string item;  // rule id, premise or formula, when one is to blame
  std::string message;
};

class CheckReport {
 public:
  bool ok() const noexcept { return violations_.empty(); }
  explicit operator bool() const noexcept { return ok(); }

  void add(Violation v) { violations_.push_back(std::move(v)); }
  void append(const CheckReport& other);
  const std::vector<Violation>& violations() const noexcept { return violations_; }
  bool violates(int condition) const;

  std::string to_string() const;

 private:
  std::vector<Violation> violations_;
};

/// Which reading of the formalism-specific sequence conditions a checker uses.
/// Standard evaluates justification witnesses (and, for autoepistemic
/// premises, prerequisites) against the final class, as the fixed-point
/// constructions do. Strict evaluates them against the class being built, as
/// the conditions are literally written. For threshold sequences Strict
/// divides by the weight of the whole space instead of the remaining tail.
enum class CheckMode { Standard, Strict };

/// Checks l >= 1, pairwise disjointness, and that the union is exactly
/// all_worlds (compared by assignment). Every violated clause is reported.
CheckReport validate_structure(const PartitionSequence& seq, std::span<const World> all_worlds);

/// Same last class, compared as sets of assignments. Throws SemanticError when
/// the kinds or vocabularies differ.
bool isomorphic(const PartitionSequence& a, const PartitionSequence& b);

/// M_0 ⊏ ... ⊏ M_l with M_i the union of W_i..W_l; M_l is most preferred.
struct PreferenceChain {
  std::vector<WorldClass> models;
};

PreferenceChain preference_view(const PartitionSequence& seq);

/// Human-readable rendering with provenance and the preference chain.
std::string explain(const PartitionSequence& seq);

}  // namespace worldseq
