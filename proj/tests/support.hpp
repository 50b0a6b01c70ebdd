#pragma once

// Seeded generators and brute-force oracles shared by the unit and
// acceptance tests.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "worldseq/autoepistemic.hpp"
#include "worldseq/default_logic.hpp"
#include "worldseq/possibility.hpp"
#include "worldseq/probability.hpp"

namespace worldseq::testing {

inline Vocabulary vocab_of(std::size_t n) {
  static const char* names[] = {"p", "q", "r", "s", "t", "u"};
  return Vocabulary(std::vector<std::string>(names, names + n));
}

class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  Formula formula(const Vocabulary& vocab, std::size_t max_depth) {
    if (max_depth == 0 || uniform(0, 3) == 0) {
      const std::size_t pick = uniform(0, vocab.size() + 1);
      if (pick == vocab.size()) return Formula::top();
      if (pick == vocab.size() + 1) return Formula::bottom();
      return Formula::atom(vocab.name(pick));
    }
    switch (uniform(0, 4)) {
      case 0: return ~formula(vocab, max_depth - 1);
      case 1: return formula(vocab, max_depth - 1) & formula(vocab, max_depth - 1);
      case 2: return formula(vocab, max_depth - 1) | formula(vocab, max_depth - 1);
      case 3: return implies(formula(vocab, max_depth - 1), formula(vocab, max_depth - 1));
      default: return iff(formula(vocab, max_depth - 1), formula(vocab, max_depth - 1));
    }
  }

  DefaultTheory default_theory(std::size_t max_vars, std::size_t max_rules, std::size_t depth) {
    const Vocabulary vocab = vocab_of(uniform(1, max_vars));
    std::vector<DefaultRule> rules;
    const std::size_t n_rules = uniform(0, max_rules);
    for (std::size_t i = 0; i < n_rules; ++i) {
      DefaultRule rule;
      rule.id = "d" + std::to_string(i + 1);
      rule.prerequisite = coin() ? Formula::top() : formula(vocab, depth);
      const std::size_t n_just = uniform(1, 2);
      for (std::size_t j = 0; j < n_just; ++j) rule.justifications.push_back(formula(vocab, depth));
      rule.consequent = formula(vocab, depth);
      rules.push_back(std::move(rule));
    }
    std::vector<Formula> facts;
    const std::size_t n_facts = uniform(0, 2);
    for (std::size_t i = 0; i < n_facts; ++i) facts.push_back(formula(vocab, depth));
    return DefaultTheory(vocab, std::move(rules), std::move(facts));
  }

  AelPremises ael_premises(std::size_t max_vars, std::size_t max_premises, std::size_t depth) {
    const Vocabulary vocab = vocab_of(uniform(1, max_vars));
    std::vector<ModalFormula> premises;
    const std::size_t n = uniform(1, max_premises);
    for (std::size_t i = 0; i < n; ++i) {
      ModalFormula m{std::nullopt, {}, formula(vocab, depth)};
      if (coin()) m.belief = formula(vocab, depth);
      const std::size_t n_dis = uniform(0, 2);
      for (std::size_t j = 0; j < n_dis; ++j) m.disbeliefs.push_back(formula(vocab, depth));
      premises.push_back(std::move(m));
    }
    return AelPremises(vocab, std::move(premises));
  }

  /// Random weights as exact fractions k_i / sum(k); some worlds may be
  /// omitted (weight 0) or given weight 0 explicitly.
  SampleSpace sample_space(std::size_t max_vars) {
    const Vocabulary vocab = vocab_of(uniform(1, max_vars));
    const std::size_t n_worlds = std::size_t{1} << vocab.size();
    std::vector<std::uint64_t> raw(n_worlds);
    std::uint64_t sum = 0;
    for (auto& k : raw) {
      k = uniform(0, 3) == 0 ? 0 : uniform(1, 20);
      sum += k;
    }
    if (sum == 0) {
      raw[0] = 1;
      sum = 1;
    }
    std::vector<World> worlds;
    for (std::size_t i = 0; i < n_worlds; ++i) {
      if (raw[i] == 0 && coin()) continue;
      worlds.push_back(World{Assignment::from_index(i, vocab.size()),
                             Rational(static_cast<long long>(raw[i])) / static_cast<long long>(sum)});
    }
    return SampleSpace(vocab, std::move(worlds));
  }

  PossibilisticKB possibilistic_kb(std::size_t max_vars, std::size_t max_levels, std::size_t depth) {
    const Vocabulary vocab = vocab_of(uniform(1, max_vars));
    std::vector<std::pair<Rational, Formula>> statements;
    const std::size_t n = uniform(1, max_levels);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational degree = Rational(static_cast<long long>(uniform(0, 10))) / 10;
      const std::size_t per_level = uniform(1, 2);
      for (std::size_t j = 0; j < per_level; ++j) statements.emplace_back(degree, formula(vocab, depth));
    }
    return PossibilisticKB::from_statements(vocab, statements);
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// Every model set over num_vars constants (num_vars <= 4).
inline std::vector<ModelSet> all_model_sets(std::size_t num_vars) {
  const std::uint64_t worlds = std::uint64_t{1} << num_vars;
  std::vector<ModelSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << worlds); ++mask) {
    ModelSet s = ModelSet::none(num_vars);
    for (std::uint64_t w = 0; w < worlds; ++w) {
      if (mask >> w & 1) s.insert(w);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Calls visit(classes) for every sequence <fixed_first, C_1, ..., C_m, last>
/// where C_1..C_m are non-empty, m <= max_middle, and the classes partition
/// the worlds outside fixed_first (last may be empty).
inline void for_each_sequence(const ModelSet& fixed_first, std::size_t max_middle,
                              const std::function<void(const std::vector<ModelSet>&)>& visit) {
  const std::size_t num_vars = fixed_first.num_vars();
  std::vector<std::uint64_t> free;
  for (std::uint64_t w = 0; w < fixed_first.universe_size(); ++w) {
    if (!fixed_first.contains(w)) free.push_back(w);
  }
  for (std::size_t middle = 0; middle <= max_middle; ++middle) {
    const std::size_t groups = middle + 1;  // middle classes plus the last
    std::vector<std::size_t> label(free.size(), 0);
    while (true) {
      std::vector<ModelSet> classes(groups + 1, ModelSet::none(num_vars));
      classes[0] = fixed_first;
      for (std::size_t i = 0; i < free.size(); ++i) classes[1 + label[i]].insert(free[i]);
      bool middles_nonempty = true;
      for (std::size_t c = 1; c <= middle; ++c) middles_nonempty = middles_nonempty && !classes[c].empty();
      if (middles_nonempty) visit(classes);
      std::size_t i = 0;
      while (i < label.size() && ++label[i] == groups) label[i++] = 0;
      if (i == label.size()) break;
    }
    if (free.empty() && middle > 0) break;
  }
}

inline Rational mass(const SampleSpace& space, const Formula& phi) {
  Rational sum = 0;
  for (const auto& w : space.worlds()) {
    if (eval(phi, w, space.vocab())) sum += w.weight;
  }
  return sum;
}

}  // namespace worldseq::testing
