#include "worldseq/default_logic.hpp"

#include <algorithm>
#include <set>

#include "worldseq/error.hpp"

namespace worldseq {

DefaultTheory::DefaultTheory(Vocabulary vocab, std::vector<DefaultRule> rules, std::vector<Formula> facts,
                             Limits limits)
    : vocab_(std::move(vocab)), rules_(std::move(rules)), facts_(std::move(facts)), limits_(limits) {
  require_within_cap(vocab_, limits_);
  std::set<std::string> ids;
  fact_models_ = ModelSet::all(vocab_.size());
  for (const auto& f : facts_) fact_models_ &= truth_table(f, vocab_);
  compiled_.reserve(rules_.size());
  for (const auto& rule : rules_) {
    if (rule.justifications.empty()) {
      throw SemanticError("default rule '" + rule.id + "' needs at least one justification");
    }
    if (!ids.insert(rule.id).second) throw SemanticError("duplicate rule id '" + rule.id + "'");
    CompiledRule c{truth_table(rule.prerequisite, vocab_), {}, truth_table(rule.consequent, vocab_)};
    for (const auto& j : rule.justifications) c.justifications.push_back(truth_table(j, vocab_));
    compiled_.push_back(std::move(c));
  }
}

namespace {

using CompiledRule = DefaultTheory::CompiledRule;

// Each justification is satisfiable somewhere in `witnesses`.
bool justified(const CompiledRule& rule, const ModelSet& witnesses) {
  return std::all_of(rule.justifications.begin(), rule.justifications.end(),
                     [&](const ModelSet& j) { return j.intersects(witnesses); });
}

void require_rule_cap(const DefaultTheory& theory) {
  if (theory.rules().size() > theory.limits().max_default_rules) {
    throw ResourceError("default theory has " + std::to_string(theory.rules().size()) +
                        " rules, above the cap of " + std::to_string(theory.limits().max_default_rules));
  }
}

}  // namespace

ModelSet gamma_operator(const DefaultTheory& theory, const ModelSet& e) {
  const auto& rules = theory.compiled_rules();
  std::vector<bool> applied(rules.size(), false);
  ModelSet current = theory.fact_models();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (applied[r] || !justified(rules[r], e) || !current.is_subset_of(rules[r].prerequisite)) continue;
      applied[r] = true;
      changed = true;
      current &= rules[r].consequent;
    }
  }
  return current;
}

ExtensionSet extensions(const DefaultTheory& theory) {
  require_rule_cap(theory);
  const auto& rules = theory.compiled_rules();
  ExtensionSet out;
  out.inconsistent = theory.fact_models().empty();

  std::set<Kernel> found;
  const std::uint64_t subsets = std::uint64_t{1} << rules.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    ModelSet candidate = theory.fact_models();
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if ((mask >> r) & 1U) candidate &= rules[r].consequent;
    }
    if (found.contains(candidate)) continue;
    if (gamma_operator(theory, candidate) == candidate) found.insert(candidate);
  }
  out.kernels.assign(found.begin(), found.end());
  return out;
}

namespace {

struct SequenceSearch {
  const DefaultTheory& theory;
  const ModelSet& extension;
  bool all_orders;
  std::size_t& budget;
  std::vector<PartitionSequence>& out;

  std::vector<ModelSet> classes;
  std::vector<std::string> provenance;

  // Returns false once the search should stop.
  bool explore(const ModelSet& remaining) {
    const auto& rules = theory.compiled_rules();
    bool any = false;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const auto& rule = rules[r];
      if (!remaining.is_subset_of(rule.prerequisite) || !justified(rule, extension)) continue;
      ModelSet peeled = remaining - rule.consequent;
      if (peeled.empty()) continue;
      any = true;
      classes.push_back(std::move(peeled));
      provenance.push_back(theory.rules()[r].id);
      const bool keep_going = explore(remaining & rule.consequent);
      classes.pop_back();
      provenance.pop_back();
      if (!keep_going || !all_orders || budget == 0) return false;
    }
    if (!any) {
      // The peeling is a Gamma(E) derivation, so it stops at E itself.
      classes.push_back(remaining);
      provenance.push_back("");
      PartitionSequence seq = make_sequence(SequenceKind::Default, theory.vocab(), classes, provenance);
      if (std::find(out.begin(), out.end(), seq) == out.end()) out.push_back(std::move(seq));
      classes.pop_back();
      provenance.pop_back();
      if (budget > 0) --budget;
    }
    return true;
  }
};

}  // namespace

std::vector<PartitionSequence> build_default_sequences(const DefaultTheory& theory, bool all_orders) {
  const ExtensionSet exts = extensions(theory);
  std::vector<PartitionSequence> out;
  if (exts.inconsistent) return out;

  std::size_t budget = theory.limits().max_orderings;
  const ModelSet all = ModelSet::all(theory.vocab().size());
  for (const auto& e : exts.kernels) {
    SequenceSearch search{theory, e, all_orders, budget, out, {}, {}};
    search.classes.push_back(all - theory.fact_models());
    search.provenance.push_back("");
    search.explore(theory.fact_models());
  }
  return out;
}

namespace {

// Shared by the reporting checker and the fast predicate. `sink` receives each
// violation and returns false to stop early.
template <typename Sink>
void check_classes(const DefaultTheory& theory, std::span<const ModelSet> classes, CheckMode mode, Sink&& sink) {
  const auto& rules = theory.compiled_rules();
  const std::size_t l = classes.size() - 1;
  const ModelSet all = ModelSet::all(theory.vocab().size());

  if (!(classes[0] == all - theory.fact_models())) {
    if (!sink(Violation{1, 0, "", "W_0 must be exactly the worlds falsifying the facts"})) return;
  }

  // tail = W_i ∪ ... ∪ W_l, i.e. the worlds not in W_0 .. W_{i-1}.
  std::vector<ModelSet> tails(classes.size(), ModelSet::none(theory.vocab().size()));
  tails[l] = classes[l];
  for (std::size_t i = l; i-- > 0;) tails[i] = tails[i + 1] | classes[i];

  const ModelSet& last = classes[l];
  for (std::size_t i = 1; i < l; ++i) {
    const ModelSet& witnesses = mode == CheckMode::Standard ? last : classes[i];
    bool produced = false;
    for (const auto& rule : rules) {
      if (tails[i].is_subset_of(rule.prerequisite) && justified(rule, witnesses) &&
          classes[i] == tails[i] - rule.consequent) {
        produced = true;
        break;
      }
    }
    if (!produced && !sink(Violation{2, i, "", "no applicable rule produces this class"})) return;
  }

  for (std::size_t r = 0; r < rules.size(); ++r) {
    const auto& rule = rules[r];
    if (last.is_subset_of(rule.prerequisite) && justified(rule, last) && !last.is_subset_of(rule.consequent)) {
      if (!sink(Violation{3, l, theory.rules()[r].id,
                          "rule applies to the last class but its consequent is not true throughout it"})) {
        return;
      }
    }
  }
}

}  // namespace

CheckReport check_default_sequence(const DefaultTheory& theory, const PartitionSequence& seq, CheckMode mode) {
  CheckReport report;
  if (!(seq.vocab == theory.vocab())) {
    report.add({0, std::nullopt, "", "sequence vocabulary differs from the theory's"});
    return report;
  }
  report.append(validate_structure(seq, enumerate_worlds(theory.vocab(), theory.limits())));
  if (!report.ok()) return report;

  const auto classes = class_model_sets(seq);
  check_classes(theory, classes, mode, [&](Violation v) {
    report.add(std::move(v));
    return true;
  });
  return report;
}

bool is_default_sequence(const DefaultTheory& theory, std::span<const ModelSet> classes, CheckMode mode) {
  if (classes.size() < 2) return false;
  bool ok = true;
  check_classes(theory, classes, mode, [&](const Violation&) {
    ok = false;
    return false;
  });
  return ok;
}

}  // namespace worldseq
