#pragma once

// Reiter default logic over a finite vocabulary: the Gamma operator,
// extension enumeration, and default partition sequences.
//
// Theories are never materialized as formula sets. An extension E is carried
// as its model set, so "phi in E" becomes "E ⊆ models(phi)" and "~beta not in
// E" becomes "E ∩ models(beta) ≠ ∅".

#include <string>
#include <vector>

#include "worldseq/logic.hpp"
#include "worldseq/partition.hpp"

namespace worldseq {

/// alpha : M beta_1, ..., M beta_n / gamma, with n >= 1.
struct DefaultRule {
  std::string id;
  Formula prerequisite;
  std::vector<Formula> justifications;
  Formula consequent;

  friend bool operator==(const DefaultRule&, const DefaultRule&) = default;
};

/// Default theory <D, F>. Validated and compiled to truth tables on
/// construction; immutable afterwards.
class DefaultTheory {
 public:
  struct CompiledRule {
    ModelSet prerequisite;
    std::vector<ModelSet> justifications;
    ModelSet consequent;
  };

  /// Throws SemanticError on an unknown constant, an empty justification list
  /// or a duplicate rule id; ResourceError when the vocabulary is above its
  /// cap. The rule cap is enforced by the searches, not here.
  DefaultTheory(Vocabulary vocab, std::vector<DefaultRule> rules, std::vector<Formula> facts,
                Limits limits = {});

  const Vocabulary& vocab() const noexcept { return vocab_; }
  const std::vector<DefaultRule>& rules() const noexcept { return rules_; }
  const std::vector<Formula>& facts() const noexcept { return facts_; }
  const Limits& limits() const noexcept { return limits_; }

  const ModelSet& fact_models() const noexcept { return fact_models_; }
  const std::vector<CompiledRule>& compiled_rules() const noexcept { return compiled_; }

  friend bool operator==(const DefaultTheory& a, const DefaultTheory& b) {
    return a.vocab_ == b.vocab_ && a.rules_ == b.rules_ && a.facts_ == b.facts_;
  }

 private:
  Vocabulary vocab_;
  std::vector<DefaultRule> rules_;
  std::vector<Formula> facts_;
  Limits limits_;
  ModelSet fact_models_;
  std::vector<CompiledRule> compiled_;
};

/// Model set of Gamma(E): the least theory containing F, deductively closed,
/// and closed under every rule whose prerequisite it proves and none of whose
/// justifications is refuted by E.
ModelSet gamma_operator(const DefaultTheory& theory, const ModelSet& e);

struct ExtensionSet {
  /// Every fixed point of Gamma, sorted by model set.
  std::vector<Kernel> kernels;
  /// The facts are unsatisfiable; kernels then holds exactly the empty model
  /// set (the inconsistent extension), which has no sequence.
  bool inconsistent = false;

  bool empty() const noexcept { return kernels.empty(); }
};

/// All extensions, found by checking Th(F ∪ {gamma of each rule in G}) for
/// every rule subset G. Throws ResourceError above the rule cap.
ExtensionSet extensions(const DefaultTheory& theory);

/// One default partition sequence per consistent extension, built by peeling
/// off the worlds that falsify each applicable rule's consequent. With
/// all_orders set, alternative rule orders are explored as well (up to
/// limits().max_orderings leaves per theory) and every distinct sequence is
/// kept; otherwise sequences are deduplicated up to isomorphism.
std::vector<PartitionSequence> build_default_sequences(const DefaultTheory& theory,
                                                       bool all_orders = false);

/// Checks the three default-sequence conditions (facts, rule-produced
/// intermediate classes, closure of the last class). The sequence must be
/// over the theory's exhaustive world set; structural faults are reported as
/// condition 0.
CheckReport check_default_sequence(const DefaultTheory& theory, const PartitionSequence& seq,
                                   CheckMode mode = CheckMode::Standard);

/// Fast yes/no form of check_default_sequence over raw class model sets, for
/// exhaustive enumeration. Assumes the classes already partition the world set.
bool is_default_sequence(const DefaultTheory& theory, std::span<const ModelSet> classes,
                         CheckMode mode = CheckMode::Standard);

}  // namespace worldseq
