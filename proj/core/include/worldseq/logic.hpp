#pragma once

// Finite propositional language: vocabularies, formulas, worlds, and
// entailment by exhaustive model checking.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "worldseq/rational.hpp"

namespace worldseq {

/// Size caps for the exhaustive searches. Every cap is configurable; the
/// defaults keep each search within desk-machine scale.
struct Limits {
  std::size_t max_vocabulary = 20;        // 2^20 worlds
  std::size_t max_default_rules = 16;     // extension search is over rule subsets
  std::size_t max_belief_formulas = 16;   // expansion search is over belief guesses
  std::size_t max_orderings = 1000;       // alternative rule orders per theory
  std::size_t max_threshold_candidates = 10;
};

/// Ordered set of distinct propositional constants. The order fixes the world
/// encoding, so two vocabularies are equal only if they list the same names in
/// the same order. Copies share storage.
class Vocabulary {
 public:
  Vocabulary();
  explicit Vocabulary(std::vector<std::string> names);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  const std::vector<std::string>& names() const noexcept;
  const std::string& name(std::size_t index) const { return names().at(index); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws SemanticError naming the constant when it is not in the vocabulary.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

bool is_identifier(std::string_view text);

enum class Connective : std::uint8_t { Atom, True, False, Not, And, Or, Implies, Iff };

/// Immutable propositional formula. Subtrees are shared, so copies are cheap
/// and a Formula may be read from any number of threads.
class Formula {
 public:
  /// The tautology.
  Formula();

  static Formula atom(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula operand);
  static Formula binary(Connective op, Formula left, Formula right);

  Connective connective() const noexcept;
  /// Constant name; only meaningful for atoms.
  const std::string& name() const noexcept;
  /// Operand of a negation, left operand of a binary connective.
  const Formula& left() const noexcept;
  const Formula& right() const noexcept;

  /// Constants in order of first occurrence.
  std::vector<std::string> atoms() const;
  std::size_t depth() const;

  /// Concrete syntax that parses back to a structurally equal formula.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

Formula operator~(const Formula& f);
Formula operator&(const Formula& a, const Formula& b);
Formula operator|(const Formula& a, const Formula& b);
Formula implies(const Formula& a, const Formula& b);
Formula iff(const Formula& a, const Formula& b);
/// Conjunction of all members; the tautology for an empty list.
Formula conjoin(std::span<const Formula> formulas);

/// Truth assignment held as the sorted indices of the constants that are true.
/// Sparse, so it scales to large vocabularies where only few constants hold
/// (lottery spaces). Ordered by binary counting over the vocabulary order with
/// the first constant most significant.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<std::uint32_t> true_atoms);

  static Assignment from_index(std::uint64_t index, std::size_t num_vars);
  /// Position of this assignment in enumerate_worlds order.
  std::uint64_t to_index(std::size_t num_vars) const;

  bool holds(std::size_t atom) const;
  const std::vector<std::uint32_t>& true_atoms() const noexcept { return true_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend std::strong_ordering operator<=>(const Assignment& a, const Assignment& b);

 private:
  std::vector<std::uint32_t> true_;
};

/// One interpretation of the vocabulary plus a non-negative weight.
struct World {
  Assignment assignment;
  Rational weight{1};

  friend bool operator==(const World&, const World&) = default;
};

/// `{p,~q}`, or `<{p,~q}, 0.3>` when with_weight is set.
std::string describe(const World& world, const Vocabulary& vocab, bool with_weight = false);

/// Set of worlds over an exhaustive vocabulary of at most 63 constants, one bit
/// per world in enumerate_worlds order.
class ModelSet {
 public:
  ModelSet() : ModelSet(0) {}

  static ModelSet none(std::size_t num_vars) { return ModelSet(num_vars); }
  static ModelSet all(std::size_t num_vars);
  static ModelSet of_atom(std::size_t num_vars, std::size_t atom);
  static ModelSet of_worlds(std::span<const World> worlds, std::size_t num_vars);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::uint64_t universe_size() const noexcept { return std::uint64_t{1} << num_vars_; }

  bool contains(std::uint64_t index) const;
  void insert(std::uint64_t index);
  void erase(std::uint64_t index);

  bool empty() const noexcept;
  std::uint64_t count() const noexcept;
  bool is_subset_of(const ModelSet& other) const noexcept;
  bool intersects(const ModelSet& other) const noexcept;

  ModelSet complement() const;
  ModelSet& operator&=(const ModelSet& other);
  ModelSet& operator|=(const ModelSet& other);
  ModelSet& operator-=(const ModelSet& other);
  friend ModelSet operator&(ModelSet a, const ModelSet& b) { return a &= b; }
  friend ModelSet operator|(ModelSet a, const ModelSet& b) { return a |= b; }
  friend ModelSet operator-(ModelSet a, const ModelSet& b) { return a -= b; }

  std::vector<std::uint64_t> indices() const;
  /// Member worlds in enumerate_worlds order, each of weight 1.
  std::vector<World> worlds() const;

  friend bool operator==(const ModelSet& a, const ModelSet& b) noexcept;
  /// Lexicographic over the ascending member indices.
  friend std::strong_ordering operator<=>(const ModelSet& a, const ModelSet& b);

 private:
  explicit ModelSet(std::size_t num_vars);
  void trim() noexcept;

  std::size_t num_vars_;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

/// A deductively closed non-modal theory, held as the set of worlds that
/// satisfy it. The empty set is the inconsistent theory.
using Kernel = ModelSet;

/// Throws ResourceError when the vocabulary is above the cap.
void require_within_cap(const Vocabulary& vocab, const Limits& limits);

/// All 2^|vocab| worlds in binary-counting order, each of weight 1.
std::vector<World> enumerate_worlds(const Vocabulary& vocab, const Limits& limits = {});

/// Truth of phi at the world. Throws SemanticError on an unknown constant.
bool eval(const Formula& phi, const World& world, const Vocabulary& vocab);

/// The worlds of ws that satisfy phi, in their original order.
std::vector<World> models(const Formula& phi, std::span<const World> ws, const Vocabulary& vocab);

/// Model set of phi over the exhaustive world set of vocab.
ModelSet truth_table(const Formula& phi, const Vocabulary& vocab);

/// S entails phi: every world satisfying all of S satisfies phi.
bool entails(std::span<const Formula> premises, const Formula& phi, const Vocabulary& vocab,
             const Limits& limits = {});

}  // namespace worldseq
