#include "worldseq/sequence_json.hpp"

#include "worldseq/error.hpp"

namespace worldseq {

using nlohmann::json;

json world_to_json(const World& world, const Vocabulary& vocab) {
  json assign = json::object();
  for (std::size_t i = 0; i < vocab.size(); ++i) assign[vocab.name(i)] = world.assignment.holds(i) ? 1 : 0;
  return json{{"assign", std::move(assign)}, {"weight", format_rational(world.weight)}};
}

json sequence_to_json(const PartitionSequence& seq) {
  json classes = json::array();
  for (const auto& c : seq.classes) {
    json worlds = json::array();
    for (const auto& w : c) worlds.push_back(world_to_json(w, seq.vocab));
    classes.push_back(std::move(worlds));
  }
  return json{{"kind", to_string(seq.kind)},
              {"vocab", seq.vocab.names()},
              {"classes", std::move(classes)},
              {"provenance", seq.provenance}};
}

namespace {

World world_from_json(const json& doc, const Vocabulary& vocab) {
  if (!doc.is_object() || !doc.contains("assign") || !doc["assign"].is_object()) {
    throw SemanticError("world must be an object with an \"assign\" map");
  }
  const json& assign = doc["assign"];
  std::vector<std::uint32_t> true_atoms;
  for (const auto& [name, value] : assign.items()) {
    const auto index = vocab.find(name);
    if (!index) throw SemanticError("world assigns unknown constant '" + name + "'");
    if (!value.is_number_integer() || (value.get<int>() != 0 && value.get<int>() != 1)) {
      throw SemanticError("assignment of '" + name + "' must be 0 or 1");
    }
    if (value.get<int>() == 1) true_atoms.push_back(static_cast<std::uint32_t>(*index));
  }
  if (assign.size() != vocab.size()) throw SemanticError("world assignment is not total over the vocabulary");

  World world{Assignment(std::move(true_atoms)), Rational(1)};
  if (doc.contains("weight")) {
    const json& weight = doc["weight"];
    if (weight.is_string()) {
      world.weight = parse_rational(weight.get<std::string>());
    } else if (weight.is_number_integer()) {
      world.weight = Rational(weight.get<long long>());
    } else if (weight.is_number()) {
      // Numbers go through their shortest decimal rendering.
      world.weight = parse_rational(weight.dump());
    } else {
      throw SemanticError("world weight must be a number or a rational string");
    }
  }
  if (world.weight < 0) throw SemanticError("world weight must be non-negative");
  return world;
}

}  // namespace

namespace {

PartitionSequence read_sequence(const json& doc) {
  if (!doc.is_object()) throw SemanticError("sequence document must be a JSON object");
  for (const char* key : {"kind", "vocab", "classes"}) {
    if (!doc.contains(key)) throw SemanticError(std::string("sequence document lacks \"") + key + "\"");
  }
  PartitionSequence seq;
  seq.kind = sequence_kind_from_string(doc["kind"].get<std::string>());
  seq.vocab = Vocabulary(doc["vocab"].get<std::vector<std::string>>());
  if (!doc["classes"].is_array()) throw SemanticError("\"classes\" must be an array");
  for (const auto& c : doc["classes"]) {
    if (!c.is_array()) throw SemanticError("each class must be an array of worlds");
    WorldClass worlds;
    for (const auto& w : c) worlds.push_back(world_from_json(w, seq.vocab));
    seq.classes.push_back(std::move(worlds));
  }
  if (doc.contains("provenance")) seq.provenance = doc["provenance"].get<std::vector<std::string>>();
  seq.provenance.resize(seq.classes.size());
  return seq;
}

}  // namespace

PartitionSequence sequence_from_json(const json& doc) {
  try {
    return read_sequence(doc);
  } catch (const json::exception& e) {
    throw SemanticError(std::string("malformed sequence document: ") + e.what());
  }
}

PartitionSequence sequence_from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
  return sequence_from_json(doc);
}

}  // namespace worldseq
