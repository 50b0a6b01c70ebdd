#include <doctest.h>

#include "support.hpp"
#include "worldseq/error.hpp"
#include "worldseq/sequence_json.hpp"
#include "worldseq/syntax.hpp"

using namespace worldseq;

namespace {

ModelSet set_of(std::size_t n, std::initializer_list<std::uint64_t> indices) {
  auto s = ModelSet::none(n);
  for (auto i : indices) s.insert(i);
  return s;
}

PartitionSequence seq_of(std::size_t n, std::vector<ModelSet> classes,
                         SequenceKind kind = SequenceKind::Default) {
  return make_sequence(kind, testing::vocab_of(n), classes);
}

}  // namespace

TEST_CASE("structural validation") {
  const auto all = enumerate_worlds(testing::vocab_of(2));
  CHECK(validate_structure(seq_of(2, {ModelSet::none(2), ModelSet::all(2)}), all).ok());

  const auto overlap = validate_structure(seq_of(1, {set_of(1, {0}), set_of(1, {0, 1})}),
                                          enumerate_worlds(testing::vocab_of(1)));
  CHECK_FALSE(overlap.ok());
  CHECK(overlap.to_string().find("also occurs in class 0") != std::string::npos);

  const auto missing = validate_structure(seq_of(2, {set_of(2, {0}), set_of(2, {1})}), all);
  CHECK_FALSE(missing.ok());

  const auto single = validate_structure(seq_of(2, {ModelSet::all(2)}), all);
  CHECK_FALSE(single.ok());

  // The classes of the first two-extension default sequence.
  CHECK(validate_structure(seq_of(2, {ModelSet::none(2), set_of(2, {2, 3}), set_of(2, {0, 1})}), all).ok());
}

TEST_CASE("isomorphism is last-class identity") {
  const auto a = seq_of(2, {ModelSet::none(2), set_of(2, {0, 1}), set_of(2, {2}), set_of(2, {3})});
  const auto b = seq_of(2, {ModelSet::none(2), set_of(2, {0, 1, 2}), set_of(2, {3})});
  const auto c = seq_of(2, {ModelSet::none(2), set_of(2, {2, 3}), set_of(2, {0, 1})});
  CHECK(isomorphic(a, b));
  CHECK(isomorphic(b, a));
  CHECK(isomorphic(a, a));
  CHECK_FALSE(isomorphic(a, c));
  CHECK_THROWS_AS(isomorphic(a, seq_of(2, {ModelSet::none(2), ModelSet::all(2)}, SequenceKind::Possibility)),
                  SemanticError);
  CHECK_THROWS_AS(isomorphic(a, seq_of(3, {ModelSet::none(3), ModelSet::all(3)})), SemanticError);
}

TEST_CASE("isomorphism is an equivalence relation on generated sequences") {
  testing::Generator gen(31);
  std::vector<PartitionSequence> seqs;
  for (int i = 0; i < 40; ++i) {
    std::vector<ModelSet> classes(gen.uniform(2, 4), ModelSet::none(2));
    for (std::uint64_t w = 0; w < 4; ++w) classes[gen.uniform(0, classes.size() - 1)].insert(w);
    seqs.push_back(seq_of(2, classes));
  }
  for (const auto& a : seqs) {
    CHECK(isomorphic(a, a));
    for (const auto& b : seqs) {
      CHECK(isomorphic(a, b) == isomorphic(b, a));
      for (const auto& c : seqs) {
        if (isomorphic(a, b) && isomorphic(b, c)) CHECK(isomorphic(a, c));
      }
    }
  }
}

TEST_CASE("preference view") {
  const auto two = seq_of(1, {set_of(1, {0}), set_of(1, {1})});
  const auto chain = preference_view(two);
  REQUIRE(chain.models.size() == 2);
  CHECK(ModelSet::of_worlds(chain.models[0], 1) == ModelSet::all(1));
  CHECK(ModelSet::of_worlds(chain.models[1], 1) == set_of(1, {1}));

  const auto ext = seq_of(2, {ModelSet::none(2), set_of(2, {2, 3}), set_of(2, {0, 1})});
  const auto m = preference_view(ext).models;
  CHECK(ModelSet::of_worlds(m[0], 2) == ModelSet::all(2));
  CHECK(ModelSet::of_worlds(m[1], 2) == ModelSet::all(2));
  CHECK(ModelSet::of_worlds(m[2], 2) == set_of(2, {0, 1}));

  const auto flat = preference_view(seq_of(2, {ModelSet::none(2), ModelSet::all(2)})).models;
  CHECK(ModelSet::of_worlds(flat[0], 2) == ModelSet::of_worlds(flat[1], 2));
}

TEST_CASE("preference chain ends are the union and the last class") {
  testing::Generator gen(32);
  for (int i = 0; i < 50; ++i) {
    std::vector<ModelSet> classes(gen.uniform(2, 5), ModelSet::none(3));
    for (std::uint64_t w = 0; w < 8; ++w) classes[gen.uniform(0, classes.size() - 1)].insert(w);
    const auto chain = preference_view(seq_of(3, classes)).models;
    CHECK(ModelSet::of_worlds(chain.front(), 3) == ModelSet::all(3));
    CHECK(ModelSet::of_worlds(chain.back(), 3) == classes.back());
  }
}

TEST_CASE("sequence JSON round trip") {
  auto seq = seq_of(2, {ModelSet::none(2), set_of(2, {1, 3}), set_of(2, {0, 2})}, SequenceKind::Possibility);
  seq.provenance = {"", "poss 0.3", ""};
  seq.classes[1][0].weight = Rational(1, 3);
  seq.classes[1][1].weight = parse_rational("0.15");
  const auto text = sequence_to_json(seq).dump();
  CHECK(sequence_from_json_text(text) == seq);
  CHECK(text.find("\"1/3\"") != std::string::npos);
  CHECK(text.find("\"0.15\"") != std::string::npos);
}

TEST_CASE("sequence JSON errors") {
  CHECK_THROWS_AS(sequence_from_json_text("{"), ParseError);
  CHECK_THROWS_AS(sequence_from_json_text("[]"), SemanticError);
  CHECK_THROWS_AS(sequence_from_json_text(R"({"kind":"default","vocab":["p"],"classes":[[{"assign":{}}]]})"),
                  SemanticError);
  CHECK_THROWS_AS(sequence_from_json_text(R"({"kind":"bogus","vocab":["p"],"classes":[]})"), SemanticError);
  CHECK_THROWS_AS(sequence_from_json_text(R"({"kind":"default","vocab":"p","classes":[]})"), SemanticError);
  const auto numeric = sequence_from_json_text(
      R"({"kind":"conditional","vocab":["p"],"classes":[[{"assign":{"p":0},"weight":0.25}],[{"assign":{"p":1},"weight":"3/4"}]]})");
  CHECK(numeric.classes[0][0].weight == Rational(1, 4));
  CHECK(numeric.classes[1][0].weight == Rational(3, 4));
}

TEST_CASE("explain shows provenance and the chain") {
  auto seq = seq_of(1, {set_of(1, {0}), set_of(1, {1})});
  seq.provenance = {"", ""};
  seq.provenance[0] = "r1";
  const auto text = explain(seq);
  CHECK(text.find("[r1]") != std::string::npos);
  CHECK(text.find("M1") != std::string::npos);
}
