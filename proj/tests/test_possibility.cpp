#include <doctest.h>

#include "support.hpp"
#include "worldseq/error.hpp"
#include "worldseq/syntax.hpp"

using namespace worldseq;

namespace {

Formula f(const char* text) { return parse_formula(text); }

PossibilisticKB kb(std::vector<std::pair<const char*, const char*>> statements, std::size_t n = 2) {
  std::vector<std::pair<Rational, Formula>> out;
  for (auto [degree, formula] : statements) out.emplace_back(parse_rational(degree), f(formula));
  return PossibilisticKB::from_statements(testing::vocab_of(n), out);
}

PartitionSequence built(const PossibilisticKB& k) {
  auto b = build_poss_sequence(k);
  REQUIRE(std::holds_alternative<PartitionSequence>(b));
  return std::get<PartitionSequence>(b);
}

World w(std::initializer_list<std::uint32_t> atoms, const char* weight) {
  return World{Assignment(atoms), parse_rational(weight)};
}

}  // namespace

TEST_CASE("two-level statements") {
  const auto k = kb({{"0.7", "p"}, {"0.3", "p & q"}});
  REQUIRE(k.levels().size() == 2);
  CHECK(k.levels()[0].degree == parse_rational("0.3"));
  const auto seq = built(k);
  const std::vector<WorldClass> expected{{w({0, 1}, "0.3")}, {w({0}, "0.4")}, {w({}, "0.15"), w({1}, "0.15")}};
  CHECK(seq.classes == expected);
  CHECK(possibility(seq, f("p")) == parse_rational("0.7"));
  CHECK(possibility(seq, f("q")) == 1);
  CHECK(possibility(seq, f("~q")) == 1);
  CHECK(possibility(seq, Formula::bottom()) == 0);
  CHECK(necessity(seq, f("p")) == 0);
  CHECK(necessity(seq, Formula::top()) == 1);
  CHECK(necessity(seq, f("~(p & q)")) == parse_rational("0.7"));
}

TEST_CASE("inconsistent statements name the empty U_phi") {
  const auto b = build_poss_sequence(kb({{"0.3", "p"}, {"0.5", "p & q"}}));
  const auto* bad = std::get_if<PossibilityInconsistency>(&b);
  REQUIRE(bad);
  REQUIRE(bad->formula);
  CHECK(*bad->formula == f("p & q"));
  CHECK(bad->degree == parse_rational("0.5"));

  const auto exhausted = build_poss_sequence(kb({{"0.5", "p | ~p"}}, 1));
  const auto* none_left = std::get_if<PossibilityInconsistency>(&exhausted);
  REQUIRE(none_left);
  CHECK_FALSE(none_left->formula);
}

TEST_CASE("zero-degree levels and full top levels") {
  const auto falsum = built(kb({{"0", "false"}}, 1));
  REQUIRE(falsum.classes.size() == 2);
  CHECK(falsum.classes[0].empty());
  CHECK(total_weight(falsum.classes[1]) == 1);

  const auto everything = built(kb({{"1", "p | ~p"}}, 1));
  CHECK(everything.classes.back().empty());
  CHECK(possibility(everything, f("p")) == 1);
}

TEST_CASE("checker") {
  const auto k = kb({{"0.3", "p & q"}, {"0.7", "p"}});
  auto family = built(k);
  family.classes[2][0].weight = parse_rational("0.2");
  family.classes[2][1].weight = parse_rational("0.1");
  CHECK(check_poss_sequence(k, family).ok());

  auto light = built(k);
  light.classes[2][0].weight = parse_rational("0.1");
  light.classes[2][1].weight = parse_rational("0.1");
  CHECK(check_poss_sequence(k, light).violates(2));

  const auto bad = kb({{"0.3", "p"}, {"0.5", "p & q"}});
  const auto v = bad.vocab();
  auto candidate = make_sequence(SequenceKind::Possibility, v,
                                 std::vector<ModelSet>{truth_table(f("p"), v), ModelSet::none(2),
                                                       truth_table(f("~p"), v)});
  CHECK(check_poss_sequence(bad, candidate).violates(1));
}

TEST_CASE("validation of levels") {
  const auto v = testing::vocab_of(1);
  CHECK_THROWS_AS(PossibilisticKB(v, {PossibilityLevel{{}, Rational(1, 2)}}), SemanticError);
  CHECK_THROWS_AS(PossibilisticKB(v, {PossibilityLevel{{f("p")}, Rational(3, 2)}}), SemanticError);
  CHECK_THROWS_AS(PossibilisticKB(v, {PossibilityLevel{{f("p")}, Rational(1, 2)}, PossibilityLevel{{f("~p")}, Rational(1, 4)}}),
                  SemanticError);
  const auto merged = kb({{"0.5", "p"}, {"0.5", "q"}, {"0.5", "p"}});
  REQUIRE(merged.levels().size() == 1);
  CHECK(merged.levels()[0].formulas.size() == 2);
}

TEST_CASE("overlapping U_phi within a level are united") {
  const auto seq = built(kb({{"0.4", "p"}, {"0.4", "q"}}));
  CHECK(seq.classes[0].size() == 3);
  CHECK(total_weight(seq.classes[0]) == parse_rational("0.4"));
}
