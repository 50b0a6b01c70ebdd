#include "worldseq/partition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "worldseq/error.hpp"

namespace worldseq {

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Default: return "default";
    case SequenceKind::Autoepistemic: return "autoepistemic";
    case SequenceKind::Conditional: return "conditional";
    case SequenceKind::Threshold: return "threshold";
    case SequenceKind::Possibility: return "possibility";
  }
  return "default";
}

SequenceKind sequence_kind_from_string(std::string_view name) {
  for (auto kind : {SequenceKind::Default, SequenceKind::Autoepistemic, SequenceKind::Conditional,
                    SequenceKind::Threshold, SequenceKind::Possibility}) {
    if (to_string(kind) == name) return kind;
  }
  throw SemanticError("unknown sequence kind '" + std::string(name) + "'");
}

PartitionSequence make_sequence(SequenceKind kind, const Vocabulary& vocab,
                                std::span<const ModelSet> classes,
                                std::vector<std::string> provenance) {
  PartitionSequence seq;
  seq.kind = kind;
  seq.vocab = vocab;
  seq.classes.reserve(classes.size());
  for (const auto& c : classes) seq.classes.push_back(c.worlds());
  provenance.resize(classes.size());
  seq.provenance = std::move(provenance);
  return seq;
}

std::vector<ModelSet> class_model_sets(const PartitionSequence& seq) {
  std::vector<ModelSet> out;
  out.reserve(seq.classes.size());
  for (const auto& c : seq.classes) out.push_back(ModelSet::of_worlds(c, seq.vocab.size()));
  return out;
}

Rational total_weight(std::span<const World> worlds) {
  Rational sum = 0;
  for (const auto& w : worlds) sum += w.weight;
  return sum;
}

void CheckReport::append(const CheckReport& other) {
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

bool CheckReport::violates(int condition) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.condition == condition; });
}

std::string CheckReport::to_string() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations_) {
    if (!out.empty()) out += '\n';
    out += v.condition == 0 ? std::string("structure") : "condition " + std::to_string(v.condition);
    if (v.class_index) out += ", class " + std::to_string(*v.class_index);
    if (!v.item.empty()) out += ", " + v.item;
    out += ": " + v.message;
  }
  return out;
}

CheckReport validate_structure(const PartitionSequence& seq, std::span<const World> all_worlds) {
  CheckReport report;
  if (seq.classes.size() < 2) {
    report.add({0, std::nullopt, "", "a partition sequence needs at least two classes (l >= 1)"});
  }

  std::map<Assignment, std::size_t> owner;
  for (std::size_t i = 0; i < seq.classes.size(); ++i) {
    for (const auto& w : seq.classes[i]) {
      auto [it, fresh] = owner.emplace(w.assignment, i);
      if (!fresh) {
        report.add({0, i, "",
                    "world " + describe(w, seq.vocab) + " also occurs in class " + std::to_string(it->second)});
      }
    }
  }

  std::set<Assignment> expected;
  for (const auto& w : all_worlds) expected.insert(w.assignment);
  for (const auto& w : all_worlds) {
    if (!owner.contains(w.assignment)) {
      report.add({0, std::nullopt, "", "world " + describe(w, seq.vocab) + " is in no class"});
    }
  }
  for (const auto& [assignment, index] : owner) {
    if (!expected.contains(assignment)) {
      report.add({0, index, "", "world " + describe(World{assignment, 1}, seq.vocab) + " is not in the world set"});
    }
  }
  return report;
}

bool isomorphic(const PartitionSequence& a, const PartitionSequence& b) {
  if (a.kind != b.kind) throw SemanticError("cannot compare sequences of different kinds");
  if (!(a.vocab == b.vocab)) throw SemanticError("cannot compare sequences over different vocabularies");
  if (a.classes.empty() || b.classes.empty()) return a.classes.empty() && b.classes.empty();

  auto assignments = [](const WorldClass& c) {
    std::vector<Assignment> out;
    out.reserve(c.size());
    for (const auto& w : c) out.push_back(w.assignment);
    std::sort(out.begin(), out.end());
    return out;
  };
  return assignments(a.last()) == assignments(b.last());
}

PreferenceChain preference_view(const PartitionSequence& seq) {
  PreferenceChain chain;
  chain.models.resize(seq.classes.size());
  WorldClass tail;
  for (std::size_t i = seq.classes.size(); i-- > 0;) {
    tail.insert(tail.begin(), seq.classes[i].begin(), seq.classes[i].end());
    chain.models[i] = tail;
  }
  return chain;
}

namespace {

bool unit_weights(const PartitionSequence& seq) {
  for (const auto& c : seq.classes) {
    for (const auto& w : c) {
      if (w.weight != 1) return false;
    }
  }
  return true;
}

std::string render_class(const WorldClass& c, const Vocabulary& vocab, bool weights) {
  if (c.empty()) return "{}";
  std::string out;
  for (const auto& w : c) {
    if (!out.empty()) out += ' ';
    out += describe(w, vocab, weights);
  }
  return out;
}

}  // namespace

std::string explain(const PartitionSequence& seq) {
  const bool weights = !unit_weights(seq);
  std::string out = std::string(to_string(seq.kind)) + " sequence over {";
  for (std::size_t i = 0; i < seq.vocab.size(); ++i) out += (i ? ", " : "") + seq.vocab.name(i);
  out += "}, " + std::to_string(seq.classes.size()) + " classes\n";

  for (std::size_t i = 0; i < seq.classes.size(); ++i) {
    out += "  W" + std::to_string(i);
    if (i < seq.provenance.size() && !seq.provenance[i].empty()) out += " [" + seq.provenance[i] + "]";
    if (weights) out += " (weight " + format_rational(total_weight(seq.classes[i])) + ")";
    out += ": " + render_class(seq.classes[i], seq.vocab, weights) + "\n";
  }

  const auto chain = preference_view(seq);
  out += "preference chain (most preferred last):\n";
  for (std::size_t i = 0; i < chain.models.size(); ++i) {
    out += "  M" + std::to_string(i) + ": " + render_class(chain.models[i], seq.vocab, false) + "\n";
  }
  return out;
}

}  // namespace worldseq
