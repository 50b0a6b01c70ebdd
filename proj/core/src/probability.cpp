#include "worldseq/probability.hpp"

#include <set>

namespace worldseq {

SampleSpace::SampleSpace(Vocabulary vocab, std::vector<World> worlds)
    : vocab_(std::move(vocab)), worlds_(std::move(worlds)) {
  std::set<Assignment> seen;
  Rational total = 0;
  for (const auto& w : worlds_) {
    if (w.weight < 0) throw SemanticError("world " + describe(w, vocab_) + " has a negative weight");
    if (!w.assignment.true_atoms().empty() && w.assignment.true_atoms().back() >= vocab_.size()) {
      throw SemanticError("world assignment mentions a constant outside the vocabulary");
    }
    if (!seen.insert(w.assignment).second) throw SemanticError("world " + describe(w, vocab_) + " is listed twice");
    total += w.weight;
  }
  if (!approx_equal(total, Rational(1), weight_tolerance())) {
    throw SemanticError("world weights sum to " + format_rational(total) + ", not 1");
  }
}

PartitionSequence condition(const SampleSpace& space, std::span<const Formula> conditions) {
  if (conditions.empty()) throw PreconditionError("conditioning needs at least one formula");
  const std::size_t n = conditions.size();
  PartitionSequence seq;
  seq.kind = SequenceKind::Conditional;
  seq.vocab = space.vocab();
  seq.classes.resize(n + 1);
  for (const auto& w : space.worlds()) {
    std::size_t i = 0;
    while (i < n && eval(conditions[i], w, space.vocab())) ++i;
    seq.classes[i].push_back(w);
  }
  for (const auto& phi : conditions) seq.provenance.push_back(phi.to_string());
  seq.provenance.emplace_back();
  return seq;
}

PartitionSequence refine(const PartitionSequence& seq, const Formula& next_condition) {
  PartitionSequence out = seq;
  WorldClass rest = std::move(out.classes.back());
  out.classes.back().clear();
  out.classes.emplace_back();
  for (auto& w : rest) {
    auto& target = eval(next_condition, w, seq.vocab) ? out.classes.back() : out.classes[out.classes.size() - 2];
    target.push_back(std::move(w));
  }
  out.provenance.resize(seq.classes.size());
  out.provenance.back() = next_condition.to_string();
  out.provenance.emplace_back();
  return out;
}

Rational cond_prob(const PartitionSequence& seq, const Formula& psi) {
  return cond_prob(seq, psi, seq.last_index());
}

Rational cond_prob(const PartitionSequence& seq, const Formula& psi, std::size_t from) {
  Rational mass = 0;
  Rational hit = 0;
  for (std::size_t i = from; i < seq.classes.size(); ++i) {
    for (const auto& w : seq.classes[i]) {
      mass += w.weight;
      if (eval(psi, w, seq.vocab)) hit += w.weight;
    }
  }
  if (mass == 0) throw UndefinedConditionalError("conditioning event has zero probability");
  return hit / mass;
}

std::vector<std::optional<Rational>> step_ratios(const PartitionSequence& seq, CheckMode mode) {
  const std::size_t n = seq.last_index();
  std::vector<Rational> weights;
  weights.reserve(seq.classes.size());
  for (const auto& c : seq.classes) weights.push_back(total_weight(c));

  // tails[i] = weight(W_i ∪ ... ∪ W_n)
  std::vector<Rational> tails(seq.classes.size() + 1, Rational(0));
  for (std::size_t i = seq.classes.size(); i-- > 0;) tails[i] = tails[i + 1] + weights[i];

  std::vector<std::optional<Rational>> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& denominator = mode == CheckMode::Standard ? tails[i] : tails[0];
    if (denominator == 0) {
      out.emplace_back();
    } else {
      out.emplace_back(weights[i] / denominator);
    }
  }
  return out;
}

namespace {

std::string ratio_text(const std::optional<Rational>& ratio) {
  return ratio ? format_rational(*ratio) : std::string("undefined (zero remaining weight)");
}

}  // namespace

ThresholdError::ThresholdError(std::size_t step, std::string formula, std::optional<Rational> ratio)
    : SemanticError("step " + std::to_string(step) + " (" + formula + ") is below threshold: ratio " +
                    ratio_text(ratio)),
      step_(step),
      formula_(std::move(formula)),
      ratio_(std::move(ratio)) {}

PartitionSequence threshold(const SampleSpace& space, const Rational& eps, std::span<const Formula> conditions,
                            CheckMode mode) {
  if (eps < 0) throw PreconditionError("epsilon must be non-negative");
  PartitionSequence seq = condition(space, conditions);
  const auto ratios = step_ratios(seq, mode);
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (!ratios[i] || *ratios[i] > eps) throw ThresholdError(i + 1, conditions[i].to_string(), ratios[i]);
  }
  seq.kind = SequenceKind::Threshold;
  return seq;
}

Rational threshold_prob(const SampleSpace& space, const Rational& eps, std::span<const Formula> conditions,
                        const Formula& psi, CheckMode mode) {
  return cond_prob(threshold(space, eps, conditions, mode), psi);
}

bool rejected(const PartitionSequence& seq, const Formula& phi, const Rational& eps) {
  return cond_prob(seq, phi) <= eps;
}

namespace {

struct OrderSearch {
  const SampleSpace& space;
  const Rational& eps;
  std::span<const Formula> candidates;
  std::size_t max_length;
  CheckMode mode;
  std::vector<std::vector<Formula>>& out;

  std::vector<Formula> prefix;
  std::vector<bool> used;

  void explore() {
    if (prefix.size() == max_length) return;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (used[k]) continue;
      prefix.push_back(candidates[k]);
      // Ratios of a prefix do not change when it is extended, so a rejected
      // prefix prunes the whole subtree.
      bool accepted = true;
      try {
        threshold(space, eps, prefix, mode);
      } catch (const ThresholdError&) {
        accepted = false;
      }
      if (accepted) {
        out.push_back(prefix);
        used[k] = true;
        explore();
        used[k] = false;
      }
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<Formula>> enumerate_threshold_orders(const SampleSpace& space, const Rational& eps,
                                                             std::span<const Formula> candidates,
                                                             std::size_t max_length, CheckMode mode,
                                                             const Limits& limits) {
  if (candidates.size() > limits.max_threshold_candidates) {
    throw ResourceError(std::to_string(candidates.size()) + " threshold candidates, above the cap of " +
                        std::to_string(limits.max_threshold_candidates));
  }
  if (eps < 0) throw PreconditionError("epsilon must be non-negative");
  std::vector<std::vector<Formula>> out;
  OrderSearch search{space, eps, candidates, max_length, mode, out, {}, std::vector<bool>(candidates.size(), false)};
  search.explore();
  return out;
}

SampleSpace lottery_space(std::size_t n) {
  if (n < 1 || n > 1'000'000) throw PreconditionError("lottery size must be between 1 and 1000000");
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<World> worlds;
  worlds.reserve(n);
  const Rational share(1, static_cast<long long>(n));
  for (std::size_t i = 0; i < n; ++i) worlds.push_back(World{Assignment({static_cast<std::uint32_t>(i)}), share});
  return SampleSpace(Vocabulary(std::move(names)), std::move(worlds));
}

}  // namespace worldseq
