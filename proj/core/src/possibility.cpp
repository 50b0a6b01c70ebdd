#include "worldseq/possibility.hpp"

#include <algorithm>
#include <map>

#include "worldseq/error.hpp"

namespace worldseq {

PossibilisticKB::PossibilisticKB(Vocabulary vocab, std::vector<PossibilityLevel> levels, Limits limits)
    : vocab_(std::move(vocab)), levels_(std::move(levels)), limits_(limits) {
  require_within_cap(vocab_, limits_);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& level = levels_[i];
    if (level.formulas.empty()) throw SemanticError("possibility level " + format_rational(level.degree) + " is empty");
    if (level.degree < 0 || level.degree > 1) {
      throw SemanticError("possibility degree " + format_rational(level.degree) + " is outside [0, 1]");
    }
    if (i > 0 && !(levels_[i - 1].degree < level.degree)) {
      throw SemanticError("possibility levels must have strictly increasing degrees");
    }
    for (const auto& f : level.formulas) {
      for (const auto& name : f.atoms()) vocab_.index_of(name);
    }
  }
}

PossibilisticKB PossibilisticKB::from_statements(Vocabulary vocab,
                                                 const std::vector<std::pair<Rational, Formula>>& statements,
                                                 Limits limits) {
  std::map<Rational, std::vector<Formula>> grouped;
  for (const auto& [degree, formula] : statements) {
    auto& level = grouped[degree];
    if (std::find(level.begin(), level.end(), formula) == level.end()) level.push_back(formula);
  }
  std::vector<PossibilityLevel> levels;
  for (auto& [degree, formulas] : grouped) levels.push_back(PossibilityLevel{std::move(formulas), degree});
  return PossibilisticKB(std::move(vocab), std::move(levels), limits);
}

namespace {

void spread(WorldClass& worlds, const Rational& total) {
  if (worlds.empty()) return;
  const Rational share = total / static_cast<long long>(worlds.size());
  for (auto& w : worlds) w.weight = share;
}

}  // namespace

PossibilityBuild build_poss_sequence(const PossibilisticKB& kb) {
  const std::size_t n_vars = kb.vocab().size();
  const auto& levels = kb.levels();
  ModelSet remaining = ModelSet::all(n_vars);
  std::vector<ModelSet> classes;
  std::vector<std::string> provenance;

  for (const auto& level : levels) {
    ModelSet cls = ModelSet::none(n_vars);
    for (const auto& phi : level.formulas) {
      const ModelSet u = remaining & truth_table(phi, kb.vocab());
      if (u.empty() && level.degree > 0) {
        return PossibilityInconsistency{
            phi, level.degree,
            "no world left for " + phi.to_string() + " at possibility " + format_rational(level.degree) +
                ": its models all lie in lower levels"};
      }
      cls |= u;
    }
    remaining -= cls;
    classes.push_back(std::move(cls));
    provenance.push_back("poss " + format_rational(level.degree));
  }

  const Rational top = levels.empty() ? Rational(0) : levels.back().degree;
  if (remaining.empty() && top < 1) {
    return PossibilityInconsistency{std::nullopt, top,
                                    "no world is left for the remaining possibility " + format_rational(1 - top)};
  }
  classes.push_back(remaining);
  provenance.emplace_back();

  // A KB without levels still yields l >= 1.
  if (classes.size() < 2) {
    classes.insert(classes.begin(), ModelSet::none(n_vars));
    provenance.insert(provenance.begin(), "");
  }

  PartitionSequence seq = make_sequence(SequenceKind::Possibility, kb.vocab(), classes, std::move(provenance));
  Rational previous = 0;
  const std::size_t offset = seq.classes.size() - levels.size() - 1;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    spread(seq.classes[offset + i], levels[i].degree - previous);
    previous = levels[i].degree;
  }
  spread(seq.classes.back(), 1 - previous);
  return seq;
}

CheckReport check_poss_sequence(const PossibilisticKB& kb, const PartitionSequence& seq) {
  CheckReport report;
  if (!(seq.vocab == kb.vocab())) {
    report.add({0, std::nullopt, "", "sequence vocabulary differs from the statements'"});
    return report;
  }
  report.append(validate_structure(seq, enumerate_worlds(kb.vocab(), kb.limits())));
  if (!report.ok()) return report;

  const auto& levels = kb.levels();
  const std::size_t n = levels.size();
  if (seq.classes.size() != std::max<std::size_t>(n + 1, 2)) {
    report.add({1, std::nullopt, "",
                "expected " + std::to_string(n + 1) + " classes, one per level plus the remainder"});
    return report;
  }
  const std::size_t offset = seq.classes.size() - n - 1;
  const auto classes = class_model_sets(seq);
  const std::size_t n_vars = kb.vocab().size();

  ModelSet remaining = ModelSet::all(n_vars);
  for (std::size_t i = 0; i < offset; ++i) remaining -= classes[i];
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t index = offset + i;
    ModelSet expected = ModelSet::none(n_vars);
    for (const auto& phi : levels[i].formulas) {
      const ModelSet u = remaining & truth_table(phi, kb.vocab());
      if (u.empty() && levels[i].degree > 0) {
        report.add({1, index, phi.to_string(), "U_phi is empty but the stated possibility is positive"});
      }
      expected |= u;
    }
    if (!(classes[index] == expected)) {
      report.add({1, index, "poss " + format_rational(levels[i].degree),
                  "class is not the union of the level's U_phi sets"});
    }
    remaining -= classes[index];
  }

  Rational previous = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational next = i < n ? levels[i].degree : Rational(1);
    const std::size_t index = offset + i;
    const Rational weight = total_weight(seq.classes[index]);
    if (!approx_equal(weight, next - previous, weight_tolerance())) {
      report.add({2, index, "",
                  "class weight " + format_rational(weight) + " should be " + format_rational(next - previous)});
    }
    previous = next;
  }
  for (std::size_t i = 0; i < offset; ++i) {
    if (total_weight(seq.classes[i]) != 0) report.add({2, i, "", "padding class must carry no weight"});
  }
  return report;
}

Rational possibility(const PartitionSequence& seq, const Formula& phi) {
  std::optional<std::size_t> top;
  for (std::size_t i = seq.classes.size(); i-- > 0 && !top;) {
    for (const auto& w : seq.classes[i]) {
      if (eval(phi, w, seq.vocab)) {
        top = i;
        break;
      }
    }
  }
  if (!top) return 0;
  Rational sum = 0;
  for (std::size_t i = 0; i <= *top; ++i) sum += total_weight(seq.classes[i]);
  return sum;
}

Rational necessity(const PartitionSequence& seq, const Formula& phi) { return 1 - possibility(seq, ~phi); }

}  // namespace worldseq
