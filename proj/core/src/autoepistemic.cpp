#include "worldseq/autoepistemic.hpp"

#include <algorithm>
#include <set>

#include "worldseq/error.hpp"

namespace worldseq {
namespace {

bool unary_level(const Formula& f) {
  switch (f.connective()) {
    case Connective::Atom:
    case Connective::True:
    case Connective::False:
      return true;
    case Connective::Not:
      return unary_level(f.left());
    default:
      return false;
  }
}

std::string operand(const Formula& f) {
  return unary_level(f) ? f.to_string() : "(" + f.to_string() + ")";
}

}  // namespace

std::string ModalFormula::to_string() const {
  if (!is_modal()) return consequent.to_string();
  std::string out;
  if (belief) out = "L " + operand(*belief);
  for (const auto& b : disbeliefs) {
    if (!out.empty()) out += " & ";
    out += "~L " + operand(b);
  }
  return out + " -> " + consequent.to_string();
}

AelPremises::AelPremises(Vocabulary vocab, std::vector<ModalFormula> premises, Limits limits)
    : vocab_(std::move(vocab)), premises_(std::move(premises)), limits_(limits) {
  require_within_cap(vocab_, limits_);
  compiled_.reserve(premises_.size());
  for (const auto& p : premises_) {
    CompiledPremise c{p.belief ? truth_table(*p.belief, vocab_) : ModelSet::all(vocab_.size()), {},
                      truth_table(p.consequent, vocab_)};
    for (const auto& b : p.disbeliefs) c.disbeliefs.push_back(truth_table(b, vocab_));
    compiled_.push_back(std::move(c));
  }
}

bool premise_applies(const AelPremises::CompiledPremise& premise, const Kernel& kernel) {
  if (!kernel.is_subset_of(premise.belief)) return false;
  return std::none_of(premise.disbeliefs.begin(), premise.disbeliefs.end(),
                      [&](const ModelSet& b) { return kernel.is_subset_of(b); });
}

Kernel omega_operator(const AelPremises& premises, const Kernel& t) {
  if (t.empty()) throw PreconditionError("the Omega operator is defined for consistent theories only");
  // Applicability depends on T alone, so one pass reaches the fixed point.
  Kernel out = ModelSet::all(premises.vocab().size());
  for (const auto& p : premises.compiled()) {
    if (premise_applies(p, t)) out &= p.consequent;
  }
  return out;
}

ExpansionSet stable_expansions(const AelPremises& premises) {
  const std::size_t n = premises.vocab().size();
  ExpansionSet out;

  ModelSet objective = ModelSet::all(n);
  for (std::size_t i = 0; i < premises.premises().size(); ++i) {
    if (!premises.premises()[i].is_modal()) objective &= premises.compiled()[i].consequent;
  }
  out.premises_inconsistent = objective.empty();

  // Distinct (by truth table) formulas under L.
  std::vector<ModelSet> guessed;
  auto intern = [&](const ModelSet& m) {
    auto it = std::find(guessed.begin(), guessed.end(), m);
    if (it != guessed.end()) return static_cast<std::size_t>(it - guessed.begin());
    guessed.push_back(m);
    return guessed.size() - 1;
  };
  struct Premise {
    std::optional<std::size_t> belief;
    std::vector<std::size_t> disbeliefs;
    const ModelSet* consequent;
  };
  std::vector<Premise> indexed;
  for (std::size_t i = 0; i < premises.premises().size(); ++i) {
    const auto& source = premises.premises()[i];
    const auto& c = premises.compiled()[i];
    Premise p{std::nullopt, {}, &c.consequent};
    if (source.belief) p.belief = intern(c.belief);
    for (const auto& b : c.disbeliefs) p.disbeliefs.push_back(intern(b));
    indexed.push_back(std::move(p));
  }
  if (guessed.size() > premises.limits().max_belief_formulas) {
    throw ResourceError("premises mention " + std::to_string(guessed.size()) +
                        " distinct formulas under L, above the cap of " +
                        std::to_string(premises.limits().max_belief_formulas));
  }

  std::set<Kernel> found;
  const std::uint64_t guesses = std::uint64_t{1} << guessed.size();
  for (std::uint64_t believed = 0; believed < guesses; ++believed) {
    auto is_believed = [&](std::size_t k) { return ((believed >> k) & 1U) != 0; };
    Kernel kernel = ModelSet::all(n);
    for (const auto& p : indexed) {
      if (p.belief && !is_believed(*p.belief)) continue;
      if (std::any_of(p.disbeliefs.begin(), p.disbeliefs.end(), is_believed)) continue;
      kernel &= *p.consequent;
    }
    if (kernel.empty()) continue;
    bool confirmed = true;
    for (std::size_t k = 0; k < guessed.size() && confirmed; ++k) {
      confirmed = is_believed(k) == kernel.is_subset_of(guessed[k]);
    }
    if (confirmed) found.insert(kernel);
  }
  out.kernels.assign(found.begin(), found.end());
  return out;
}

namespace {

struct PeelSearch {
  const AelPremises& premises;
  const Kernel& kernel;
  bool all_orders;
  std::size_t& budget;
  std::vector<PartitionSequence>& out;

  std::vector<ModelSet> classes;
  std::vector<std::string> provenance;

  bool explore(const ModelSet& remaining) {
    const auto& compiled = premises.compiled();
    bool any = false;
    for (std::size_t i = 0; i < compiled.size(); ++i) {
      if (!premise_applies(compiled[i], kernel)) continue;
      ModelSet peeled = remaining - compiled[i].consequent;
      if (peeled.empty()) continue;
      any = true;
      classes.push_back(std::move(peeled));
      provenance.push_back(premises.premises()[i].to_string());
      const bool keep_going = explore(remaining & compiled[i].consequent);
      classes.pop_back();
      provenance.pop_back();
      if (!keep_going || !all_orders || budget == 0) return false;
    }
    if (!any) {
      classes.push_back(remaining);
      provenance.push_back("");
      PartitionSequence seq = make_sequence(SequenceKind::Autoepistemic, premises.vocab(), classes, provenance);
      if (std::find(out.begin(), out.end(), seq) == out.end()) out.push_back(std::move(seq));
      classes.pop_back();
      provenance.pop_back();
      if (budget > 0) --budget;
    }
    return true;
  }
};

template <typename Sink>
void check_classes(const AelPremises& premises, std::span<const ModelSet> classes, CheckMode mode, Sink&& sink) {
  const auto& compiled = premises.compiled();
  const std::size_t l = classes.size() - 1;
  const ModelSet& last = classes[l];

  if (last.empty() && !sink(Violation{0, l, "", "the last class must be non-empty"})) return;
  if (!classes[0].empty() && !sink(Violation{1, 0, "", "W_0 must be empty"})) return;

  std::vector<ModelSet> tails(classes.size(), ModelSet::none(premises.vocab().size()));
  tails[l] = last;
  for (std::size_t i = l; i-- > 0;) tails[i] = tails[i + 1] | classes[i];

  for (std::size_t i = 1; i < l; ++i) {
    const ModelSet& scope = mode == CheckMode::Standard ? last : classes[i];
    bool produced = false;
    for (const auto& p : compiled) {
      if (premise_applies(p, scope) && classes[i] == tails[i] - p.consequent) {
        produced = true;
        break;
      }
    }
    if (!produced && !sink(Violation{2, i, "", "no applicable premise produces this class"})) return;
  }

  for (std::size_t k = 0; k < compiled.size(); ++k) {
    if (premise_applies(compiled[k], last) && !last.is_subset_of(compiled[k].consequent)) {
      if (!sink(Violation{3, l, premises.premises()[k].to_string(),
                          "premise applies to the last class but its consequent is not true throughout it"})) {
        return;
      }
    }
  }
}

}  // namespace

std::vector<PartitionSequence> build_ael_sequences(const AelPremises& premises, bool all_orders) {
  const ExpansionSet expansions = stable_expansions(premises);
  std::vector<PartitionSequence> out;
  std::size_t budget = premises.limits().max_orderings;
  const std::size_t n = premises.vocab().size();
  for (const auto& kernel : expansions.kernels) {
    PeelSearch search{premises, kernel, all_orders, budget, out, {}, {}};
    search.classes.push_back(ModelSet::none(n));
    search.provenance.push_back("");
    search.explore(ModelSet::all(n));
  }
  return out;
}

CheckReport check_ael_sequence(const AelPremises& premises, const PartitionSequence& seq, CheckMode mode) {
  CheckReport report;
  if (!(seq.vocab == premises.vocab())) {
    report.add({0, std::nullopt, "", "sequence vocabulary differs from the premises'"});
    return report;
  }
  report.append(validate_structure(seq, enumerate_worlds(premises.vocab(), premises.limits())));
  if (!report.ok()) return report;

  const auto classes = class_model_sets(seq);
  check_classes(premises, classes, mode, [&](Violation v) {
    report.add(std::move(v));
    return true;
  });
  return report;
}

bool is_ael_sequence(const AelPremises& premises, std::span<const ModelSet> classes, CheckMode mode) {
  if (classes.size() < 2) return false;
  bool ok = true;
  check_classes(premises, classes, mode, [&](const Violation&) {
    ok = false;
    return false;
  });
  return ok;
}

}  // namespace worldseq
