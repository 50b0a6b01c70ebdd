#include "worldseq/logic.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <unordered_map>

#include "worldseq/error.hpp"

namespace worldseq {

// ---------------------------------------------------------------------------
// Vocabulary

struct Vocabulary::Impl {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
};

Vocabulary::Vocabulary() : impl_(std::make_shared<const Impl>()) {}

Vocabulary::Vocabulary(std::vector<std::string> names) {
  auto impl = std::make_shared<Impl>();
  impl->index.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_identifier(names[i])) {
      throw SemanticError("'" + names[i] + "' is not a valid constant name");
    }
    if (!impl->index.emplace(names[i], i).second) {
      throw SemanticError("duplicate constant '" + names[i] + "' in vocabulary");
    }
  }
  impl->names = std::move(names);
  impl_ = std::move(impl);
}

std::size_t Vocabulary::size() const noexcept { return impl_->names.size(); }

const std::vector<std::string>& Vocabulary::names() const noexcept { return impl_->names; }

std::optional<std::size_t> Vocabulary::find(std::string_view name) const {
  auto it = impl_->index.find(std::string(name));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Vocabulary::index_of(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw SemanticError("unknown constant '" + std::string(name) + "'");
}

bool operator==(const Vocabulary& a, const Vocabulary& b) {
  return a.impl_ == b.impl_ || a.names() == b.names();
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(), [&](char c) { return alpha(c) || digit(c); });
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Connective op;
  std::string name;
  Formula left;
  Formula right;
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula::Formula() : Formula(top()) {}

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Connective::Atom, std::move(name), {}, {}}));
}

Formula Formula::top() {
  static const auto node = std::shared_ptr<const Node>(new Node{Connective::True, {}, Formula(nullptr), Formula(nullptr)});
  return Formula(node);
}

Formula Formula::bottom() {
  static const auto node = std::shared_ptr<const Node>(new Node{Connective::False, {}, Formula(nullptr), Formula(nullptr)});
  return Formula(node);
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Connective::Not, {}, std::move(operand), {}}));
}

Formula Formula::binary(Connective op, Formula left, Formula right) {
  assert(op == Connective::And || op == Connective::Or || op == Connective::Implies ||
         op == Connective::Iff);
  return Formula(std::make_shared<const Node>(Node{op, {}, std::move(left), std::move(right)}));
}

Connective Formula::connective() const noexcept { return node_->op; }
const std::string& Formula::name() const noexcept { return node_->name; }
const Formula& Formula::left() const noexcept { return node_->left; }
const Formula& Formula::right() const noexcept { return node_->right; }

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  std::vector<const Formula*> stack{this};
  // Pre-order, left to right, to keep first-occurrence order.
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    switch (f->connective()) {
      case Connective::Atom:
        if (std::find(out.begin(), out.end(), f->name()) == out.end()) out.push_back(f->name());
        break;
      case Connective::True:
      case Connective::False:
        break;
      case Connective::Not:
        stack.push_back(&f->left());
        break;
      default:
        stack.push_back(&f->right());
        stack.push_back(&f->left());
        break;
    }
  }
  return out;
}

std::size_t Formula::depth() const {
  switch (connective()) {
    case Connective::Atom:
    case Connective::True:
    case Connective::False:
      return 0;
    case Connective::Not:
      return 1 + left().depth();
    default:
      return 1 + std::max(left().depth(), right().depth());
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.connective() != b.connective()) return false;
  switch (a.connective()) {
    case Connective::Atom:
      return a.name() == b.name();
    case Connective::True:
    case Connective::False:
      return true;
    case Connective::Not:
      return a.left() == b.left();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

Formula operator~(const Formula& f) { return Formula::negation(f); }
Formula operator&(const Formula& a, const Formula& b) { return Formula::binary(Connective::And, a, b); }
Formula operator|(const Formula& a, const Formula& b) { return Formula::binary(Connective::Or, a, b); }
Formula implies(const Formula& a, const Formula& b) { return Formula::binary(Connective::Implies, a, b); }
Formula iff(const Formula& a, const Formula& b) { return Formula::binary(Connective::Iff, a, b); }

Formula conjoin(std::span<const Formula> formulas) {
  if (formulas.empty()) return Formula::top();
  Formula out = formulas.front();
  for (const auto& f : formulas.subspan(1)) out = out & f;
  return out;
}

// ---------------------------------------------------------------------------
// Assignment and World

Assignment::Assignment(std::vector<std::uint32_t> true_atoms) : true_(std::move(true_atoms)) {
  std::sort(true_.begin(), true_.end());
  true_.erase(std::unique(true_.begin(), true_.end()), true_.end());
}

Assignment Assignment::from_index(std::uint64_t index, std::size_t num_vars) {
  Assignment out;
  for (std::size_t atom = 0; atom < num_vars; ++atom) {
    if ((index >> (num_vars - 1 - atom)) & 1U) out.true_.push_back(static_cast<std::uint32_t>(atom));
  }
  return out;
}

std::uint64_t Assignment::to_index(std::size_t num_vars) const {
  std::uint64_t index = 0;
  for (auto atom : true_) {
    if (atom >= num_vars) throw SemanticError("assignment mentions a constant outside the vocabulary");
    index |= std::uint64_t{1} << (num_vars - 1 - atom);
  }
  return index;
}

bool Assignment::holds(std::size_t atom) const {
  return std::binary_search(true_.begin(), true_.end(), static_cast<std::uint32_t>(atom));
}

std::strong_ordering operator<=>(const Assignment& a, const Assignment& b) {
  // The first constant on which the assignments differ decides: false < true.
  const std::size_t n = std::min(a.true_.size(), b.true_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a.true_[k] != b.true_[k]) {
      return a.true_[k] < b.true_[k] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return a.true_.size() <=> b.true_.size();
}

std::string describe(const World& world, const Vocabulary& vocab, bool with_weight) {
  std::string out = "{";
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    if (i > 0) out += ',';
    if (!world.assignment.holds(i)) out += '~';
    out += vocab.name(i);
  }
  out += '}';
  if (with_weight) out = "<" + out + ", " + format_rational(world.weight) + ">";
  return out;
}

// ---------------------------------------------------------------------------
// ModelSet

namespace {

constexpr std::uint64_t kAtomPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::size_t word_count(std::size_t num_vars) {
  return num_vars <= 6 ? 1 : (std::size_t{1} << (num_vars - 6));
}

std::uint64_t last_word_mask(std::size_t num_vars) {
  if (num_vars >= 6) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (std::uint64_t{1} << num_vars)) - 1;
}

}  // namespace

ModelSet::ModelSet(std::size_t num_vars) : num_vars_(num_vars), words_(word_count(num_vars), 0) {
  assert(num_vars < 40);
}

ModelSet ModelSet::all(std::size_t num_vars) {
  ModelSet out(num_vars);
  std::fill(out.words_.begin(), out.words_.end(), ~std::uint64_t{0});
  out.trim();
  return out;
}

ModelSet ModelSet::of_atom(std::size_t num_vars, std::size_t atom) {
  assert(atom < num_vars);
  ModelSet out(num_vars);
  const std::size_t bit = num_vars - 1 - atom;
  if (bit < 6) {
    std::fill(out.words_.begin(), out.words_.end(), kAtomPattern[bit]);
  } else {
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
      out.words_[w] = ((w >> (bit - 6)) & 1U) ? ~std::uint64_t{0} : 0;
    }
  }
  out.trim();
  return out;
}

ModelSet ModelSet::of_worlds(std::span<const World> worlds, std::size_t num_vars) {
  ModelSet out(num_vars);
  for (const auto& w : worlds) out.insert(w.assignment.to_index(num_vars));
  return out;
}

void ModelSet::trim() noexcept { words_.back() &= last_word_mask(num_vars_); }

bool ModelSet::contains(std::uint64_t index) const {
  assert(index < universe_size());
  return (words_[index >> 6] >> (index & 63)) & 1U;
}

void ModelSet::insert(std::uint64_t index) {
  assert(index < universe_size());
  words_[index >> 6] |= std::uint64_t{1} << (index & 63);
}

void ModelSet::erase(std::uint64_t index) {
  assert(index < universe_size());
  words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
}

bool ModelSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t ModelSet::count() const noexcept {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

bool ModelSet::is_subset_of(const ModelSet& other) const noexcept {
  assert(num_vars_ == other.num_vars_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool ModelSet::intersects(const ModelSet& other) const noexcept {
  assert(num_vars_ == other.num_vars_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

ModelSet ModelSet::complement() const {
  ModelSet out(*this);
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

ModelSet& ModelSet::operator&=(const ModelSet& other) {
  assert(num_vars_ == other.num_vars_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ModelSet& ModelSet::operator|=(const ModelSet& other) {
  assert(num_vars_ == other.num_vars_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ModelSet& ModelSet::operator-=(const ModelSet& other) {
  assert(num_vars_ == other.num_vars_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::uint64_t> ModelSet::indices() const {
  std::vector<std::uint64_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back((static_cast<std::uint64_t>(w) << 6) | static_cast<std::uint64_t>(b));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<World> ModelSet::worlds() const {
  std::vector<World> out;
  for (auto index : indices()) out.push_back(World{Assignment::from_index(index, num_vars_), Rational(1)});
  return out;
}

bool operator==(const ModelSet& a, const ModelSet& b) noexcept {
  return a.num_vars_ == b.num_vars_ && std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
}

std::strong_ordering operator<=>(const ModelSet& a, const ModelSet& b) {
  if (a.num_vars_ != b.num_vars_) return a.num_vars_ <=> b.num_vars_;
  const auto x = a.indices();
  const auto y = b.indices();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

// ---------------------------------------------------------------------------
// Semantics

void require_within_cap(const Vocabulary& vocab, const Limits& limits) {
  if (vocab.size() > limits.max_vocabulary) {
    throw ResourceError("vocabulary has " + std::to_string(vocab.size()) +
                        " constants, above the cap of " + std::to_string(limits.max_vocabulary));
  }
}

std::vector<World> enumerate_worlds(const Vocabulary& vocab, const Limits& limits) {
  require_within_cap(vocab, limits);
  const std::uint64_t count = std::uint64_t{1} << vocab.size();
  std::vector<World> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(World{Assignment::from_index(i, vocab.size()), Rational(1)});
  return out;
}

bool eval(const Formula& phi, const World& world, const Vocabulary& vocab) {
  switch (phi.connective()) {
    case Connective::Atom:
      return world.assignment.holds(vocab.index_of(phi.name()));
    case Connective::True:
      return true;
    case Connective::False:
      return false;
    case Connective::Not:
      return !eval(phi.left(), world, vocab);
    case Connective::And:
      return eval(phi.left(), world, vocab) && eval(phi.right(), world, vocab);
    case Connective::Or:
      return eval(phi.left(), world, vocab) || eval(phi.right(), world, vocab);
    case Connective::Implies:
      return !eval(phi.left(), world, vocab) || eval(phi.right(), world, vocab);
    case Connective::Iff:
      return eval(phi.left(), world, vocab) == eval(phi.right(), world, vocab);
  }
  return false;
}

std::vector<World> models(const Formula& phi, std::span<const World> ws, const Vocabulary& vocab) {
  std::vector<World> out;
  for (const auto& w : ws) {
    if (eval(phi, w, vocab)) out.push_back(w);
  }
  return out;
}

ModelSet truth_table(const Formula& phi, const Vocabulary& vocab) {
  const std::size_t n = vocab.size();
  switch (phi.connective()) {
    case Connective::Atom:
      return ModelSet::of_atom(n, vocab.index_of(phi.name()));
    case Connective::True:
      return ModelSet::all(n);
    case Connective::False:
      return ModelSet::none(n);
    case Connective::Not:
      return truth_table(phi.left(), vocab).complement();
    case Connective::And:
      return truth_table(phi.left(), vocab) & truth_table(phi.right(), vocab);
    case Connective::Or:
      return truth_table(phi.left(), vocab) | truth_table(phi.right(), vocab);
    case Connective::Implies:
      return truth_table(phi.left(), vocab).complement() | truth_table(phi.right(), vocab);
    case Connective::Iff: {
      const ModelSet a = truth_table(phi.left(), vocab);
      const ModelSet b = truth_table(phi.right(), vocab);
      return (a & b) | (a.complement() & b.complement());
    }
  }
  return ModelSet::none(n);
}

bool entails(std::span<const Formula> premises, const Formula& phi, const Vocabulary& vocab,
             const Limits& limits) {
  require_within_cap(vocab, limits);
  ModelSet premise_models = ModelSet::all(vocab.size());
  for (const auto& f : premises) premise_models &= truth_table(f, vocab);
  return premise_models.is_subset_of(truth_table(phi, vocab));
}

}  // namespace worldseq
