#pragma once

// Autoepistemic logic on premises in normal form
//
//     L alpha & ~L beta_1 & ... & ~L beta_n -> gamma
//
// A stable theory is determined by its kernel (its non-modal part), and a
// kernel is carried as its model set: "L phi" holds exactly when the kernel's
// worlds all satisfy phi.

#include <optional>
#include <string>
#include <vector>

#include "worldseq/logic.hpp"
#include "worldseq/partition.hpp"

namespace worldseq {

/// One premise in normal form. An absent belief reads as L true; the
/// consequent is always present (a bare `L p` is `~L p -> false`).
struct ModalFormula {
  std::optional<Formula> belief;
  std::vector<Formula> disbeliefs;
  Formula consequent;

  bool is_modal() const noexcept { return belief.has_value() || !disbeliefs.empty(); }
  /// `L a & ~L b -> g`, or just `g` for a non-modal premise.
  std::string to_string() const;

  friend bool operator==(const ModalFormula&, const ModalFormula&) = default;
};

class AelPremises {
 public:
  struct CompiledPremise {
    ModelSet belief;  // all worlds when absent
    std::vector<ModelSet> disbeliefs;
    ModelSet consequent;
  };

  /// Throws SemanticError on an unknown constant, ResourceError when the
  /// vocabulary is above the cap.
  AelPremises(Vocabulary vocab, std::vector<ModalFormula> premises, Limits limits = {});

  const Vocabulary& vocab() const noexcept { return vocab_; }
  const std::vector<ModalFormula>& premises() const noexcept { return premises_; }
  const Limits& limits() const noexcept { return limits_; }
  const std::vector<CompiledPremise>& compiled() const noexcept { return compiled_; }

  friend bool operator==(const AelPremises& a, const AelPremises& b) {
    return a.vocab_ == b.vocab_ && a.premises_ == b.premises_;
  }

 private:
  Vocabulary vocab_;
  std::vector<ModalFormula> premises_;
  Limits limits_;
  std::vector<CompiledPremise> compiled_;
};

/// Whether the premise's modal antecedent holds for a believer whose kernel
/// is `kernel`: alpha is believed and no beta is.
bool premise_applies(const AelPremises::CompiledPremise& premise, const Kernel& kernel);

/// Least kernel containing gamma for every premise whose alpha is in T and
/// none of whose betas is. Throws PreconditionError when T is empty
/// (inconsistent).
Kernel omega_operator(const AelPremises& premises, const Kernel& t);

struct ExpansionSet {
  /// Consistent stable expansions, by kernel, sorted.
  std::vector<Kernel> kernels;
  /// The non-modal premises alone are unsatisfiable.
  bool premises_inconsistent = false;

  bool empty() const noexcept { return kernels.empty(); }
};

/// All consistent stable expansions: every guess of which alpha/beta formulas
/// are believed induces a kernel, kept when it confirms the guess. Throws
/// ResourceError when there are more distinct alpha/beta formulas than
/// limits().max_belief_formulas.
ExpansionSet stable_expansions(const AelPremises& premises);

/// Sequences with W_0 = ∅, intermediate classes peeled off by applicable
/// premises, and the expansion's kernel as last class. Same ordering options
/// as build_default_sequences.
std::vector<PartitionSequence> build_ael_sequences(const AelPremises& premises, bool all_orders = false);

/// Checks the three autoepistemic-sequence conditions, plus W_l ≠ ∅ (reported
/// as condition 0).
CheckReport check_ael_sequence(const AelPremises& premises, const PartitionSequence& seq,
                               CheckMode mode = CheckMode::Standard);

bool is_ael_sequence(const AelPremises& premises, std::span<const ModelSet> classes,
                     CheckMode mode = CheckMode::Standard);

}  // namespace worldseq
