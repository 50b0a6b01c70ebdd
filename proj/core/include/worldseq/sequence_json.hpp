#pragma once

// JSON form of a partition sequence:
//
//   {"kind": "default", "vocab": ["p", "q"],
//    "classes": [[{"assign": {"p": 0, "q": 1}, "weight": "1"}, ...], ...],
//    "provenance": ["", "r1", ""]}
//
// Weights are written as exact rational strings ("0.15", "1/3") so that a
// sequence survives a round trip bit for bit; numeric weights are accepted on
// input.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "worldseq/partition.hpp"

namespace worldseq {

nlohmann::json world_to_json(const World& world, const Vocabulary& vocab);
nlohmann::json sequence_to_json(const PartitionSequence& seq);

/// Throws SemanticError on a document that does not describe a sequence.
PartitionSequence sequence_from_json(const nlohmann::json& doc);
/// Throws ParseError on malformed JSON text.
PartitionSequence sequence_from_json_text(std::string_view text);

}  // namespace worldseq
