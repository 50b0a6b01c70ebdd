#pragma once

// Weighted sample spaces, conditioning and thresholding as partition
// sequences, and the lottery scenario.
//
// All arithmetic is exact: weights, probabilities and epsilon are Rationals,
// so threshold boundary cases such as 1/99 against 1/100 are decided without
// rounding.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "worldseq/error.hpp"
#include "worldseq/logic.hpp"
#include "worldseq/partition.hpp"

namespace worldseq {

/// Finite sample space. Worlds are pairwise distinct and their weights sum to
/// 1 (within 1e-9). Zero-weight worlds may be omitted; every operation treats a
/// missing world as weight 0.
class SampleSpace {
 public:
  /// Throws SemanticError on a negative weight, a duplicate assignment, an
  /// assignment outside the vocabulary, or a total weight other than 1.
  SampleSpace(Vocabulary vocab, std::vector<World> worlds);

  const Vocabulary& vocab() const noexcept { return vocab_; }
  const std::vector<World>& worlds() const noexcept { return worlds_; }

  friend bool operator==(const SampleSpace&, const SampleSpace&) = default;

 private:
  Vocabulary vocab_;
  std::vector<World> worlds_;
};

/// Conditioning sequence: W_i holds the worlds that first falsify phi_{i+1}
/// (0 <= i < n) and W_n the worlds satisfying every condition. Requires n >= 1.
PartitionSequence condition(const SampleSpace& space, std::span<const Formula> conditions);

/// Splits the last class of a conditioning sequence on one more condition.
/// condition(space, [phi_1..phi_k+1]) == refine(condition(space, [phi_1..phi_k]), phi_k+1).
PartitionSequence refine(const PartitionSequence& seq, const Formula& next_condition);

/// Weighted fraction of psi-worlds in W_from ∪ ... ∪ W_n; from = l gives
/// Pr(psi | phi_1..phi_n) and smaller values recover the earlier conditionals.
/// Throws UndefinedConditionalError when that union has zero weight.
Rational cond_prob(const PartitionSequence& seq, const Formula& psi);
Rational cond_prob(const PartitionSequence& seq, const Formula& psi, std::size_t from);

/// Per-step rejection ratios weight(W_i) / weight(W_i ∪ ... ∪ W_n) for
/// 0 <= i < n (Standard), or weight(W_i) / weight(all) (Strict). A step whose
/// denominator is zero has no ratio.
std::vector<std::optional<Rational>> step_ratios(const PartitionSequence& seq,
                                                 CheckMode mode = CheckMode::Standard);

/// Thresholding failed at `step` (1-based): phi_step was not above threshold.
class ThresholdError : public SemanticError {
 public:
  ThresholdError(std::size_t step, std::string formula, std::optional<Rational> ratio);

  std::size_t step() const noexcept { return step_; }
  const std::string& formula() const noexcept { return formula_; }
  /// Absent when the remaining space had zero weight.
  const std::optional<Rational>& ratio() const noexcept { return ratio_; }

 private:
  std::size_t step_;
  std::string formula_;
  std::optional<Rational> ratio_;
};

/// The conditioning sequence, returned only if every step ratio is <= eps.
/// Throws ThresholdError at the first step that fails, PreconditionError for
/// eps < 0 or an empty condition list.
PartitionSequence threshold(const SampleSpace& space, const Rational& eps, std::span<const Formula> conditions,
                            CheckMode mode = CheckMode::Standard);

/// cond_prob(threshold(space, eps, conditions), psi).
Rational threshold_prob(const SampleSpace& space, const Rational& eps, std::span<const Formula> conditions,
                        const Formula& psi, CheckMode mode = CheckMode::Standard);

/// phi counts as false in the sequence's current space: Pr(phi) <= eps.
bool rejected(const PartitionSequence& seq, const Formula& phi, const Rational& eps);

/// Every ordering of 1..max_length distinct candidates that threshold()
/// accepts, in lexicographic order of candidate indices. Throws ResourceError
/// when there are more candidates than limits.max_threshold_candidates.
std::vector<std::vector<Formula>> enumerate_threshold_orders(const SampleSpace& space, const Rational& eps,
                                                             std::span<const Formula> candidates,
                                                             std::size_t max_length,
                                                             CheckMode mode = CheckMode::Standard,
                                                             const Limits& limits = {});

/// n tickets: constants p1..pn and one world per ticket, world i making only
/// p_i true, each of weight 1/n. Requires 1 <= n <= 1'000'000.
SampleSpace lottery_space(std::size_t n);

}  // namespace worldseq
