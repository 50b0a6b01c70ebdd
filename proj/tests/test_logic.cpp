#include <doctest.h>

#include <set>

#include "support.hpp"
#include "worldseq/error.hpp"
#include "worldseq/syntax.hpp"

using namespace worldseq;

namespace {

std::vector<std::string> described(const std::vector<World>& worlds, const Vocabulary& v) {
  std::vector<std::string> out;
  for (const auto& w : worlds) out.push_back(describe(w, v));
  return out;
}

World world(const Vocabulary& v, std::initializer_list<const char*> true_names) {
  std::vector<std::uint32_t> atoms;
  for (const char* n : true_names) atoms.push_back(static_cast<std::uint32_t>(v.index_of(n)));
  std::sort(atoms.begin(), atoms.end());
  return World{Assignment(atoms), 1};
}

}  // namespace

TEST_CASE("worlds are enumerated in binary counting order") {
  CHECK(described(enumerate_worlds(testing::vocab_of(1)), testing::vocab_of(1)) ==
        std::vector<std::string>{"{~p}", "{p}"});
  const auto v = testing::vocab_of(2);
  CHECK(described(enumerate_worlds(v), v) == std::vector<std::string>{"{~p,~q}", "{~p,q}", "{p,~q}", "{p,q}"});
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto ws = enumerate_worlds(testing::vocab_of(n));
    CHECK(ws.size() == (std::size_t{1} << n));
    std::set<std::uint64_t> indices;
    for (const auto& w : ws) indices.insert(w.assignment.to_index(n));
    CHECK(indices.size() == ws.size());
  }
}

TEST_CASE("vocabulary cap") {
  std::vector<std::string> names;
  for (int i = 0; i < 21; ++i) names.push_back("a" + std::to_string(i));
  CHECK_THROWS_AS(enumerate_worlds(Vocabulary(names)), ResourceError);
  names.pop_back();
  Limits small;
  small.max_vocabulary = 3;
  CHECK_THROWS_AS(enumerate_worlds(testing::vocab_of(4), small), ResourceError);
  CHECK(enumerate_worlds(Vocabulary(names)).size() == (std::size_t{1} << 20));
}

TEST_CASE("vocabulary validation") {
  CHECK_THROWS_AS(Vocabulary({"p", "p"}), SemanticError);
  CHECK_THROWS_AS(Vocabulary({"1p"}), SemanticError);
  const Vocabulary v({"x", "y"});
  CHECK(v.index_of("y") == 1);
  CHECK_THROWS_AS(v.index_of("z"), SemanticError);
  CHECK(Vocabulary({"x", "y"}) == v);
  CHECK_FALSE(Vocabulary({"y", "x"}) == v);
}

TEST_CASE("evaluation") {
  const auto v = testing::vocab_of(2);
  const World pq = world(v, {"p"});
  CHECK(eval(parse_formula("p & ~q"), pq, v));
  CHECK_FALSE(eval(parse_formula("p -> q"), pq, v));
  CHECK(eval(parse_formula("p <-> ~q"), pq, v));
  for (const auto& w : enumerate_worlds(v)) {
    CHECK(eval(Formula::top(), w, v));
    CHECK_FALSE(eval(Formula::bottom(), w, v));
  }
  CHECK_THROWS_AS(eval(parse_formula("r"), pq, v), SemanticError);
}

TEST_CASE("models") {
  const auto v = testing::vocab_of(2);
  const auto all = enumerate_worlds(v);
  CHECK(described(models(parse_formula("p"), all, v), v) == std::vector<std::string>{"{p,~q}", "{p,q}"});
  CHECK(models(Formula::bottom(), all, v).empty());
  CHECK(models(parse_formula("p | q"), all, v).size() == 3);
  CHECK(truth_table(parse_formula("p | q"), v).count() == 3);
}

TEST_CASE("entailment") {
  const auto v = testing::vocab_of(2);
  const std::vector<Formula> mp{parse_formula("p"), parse_formula("p -> q")};
  CHECK(entails(mp, parse_formula("q"), v));
  const std::vector<Formula> just_p{parse_formula("p")};
  CHECK_FALSE(entails(just_p, parse_formula("q"), v));
  CHECK(entails({}, parse_formula("p | ~p"), v));
  const std::vector<Formula> contradiction{parse_formula("p & ~p")};
  CHECK(entails(contradiction, parse_formula("q"), v));
}

TEST_CASE("De Morgan and double negation on random formulas") {
  testing::Generator gen(11);
  const auto v = testing::vocab_of(4);
  for (int i = 0; i < 300; ++i) {
    const Formula a = gen.formula(v, 6);
    const Formula b = gen.formula(v, 6);
    for (const auto& w : enumerate_worlds(v)) {
      CHECK(eval(~(a & b), w, v) == eval(~a | ~b, w, v));
      CHECK(eval(~(a | b), w, v) == eval(~a & ~b, w, v));
      CHECK(eval(~~a, w, v) == eval(a, w, v));
    }
  }
}

TEST_CASE("entailment agrees with a truth-table brute force") {
  testing::Generator gen(12);
  for (int i = 0; i < 300; ++i) {
    const auto v = testing::vocab_of(gen.uniform(1, 3));
    std::vector<Formula> premises;
    for (std::size_t k = gen.uniform(0, 3); k > 0; --k) premises.push_back(gen.formula(v, 3));
    const Formula phi = gen.formula(v, 3);
    bool brute = true;
    for (const auto& w : enumerate_worlds(v)) {
      bool all = true;
      for (const auto& s : premises) all = all && eval(s, w, v);
      if (all && !eval(phi, w, v)) brute = false;
    }
    CHECK(entails(premises, phi, v) == brute);
  }
}

TEST_CASE("model sets") {
  auto a = ModelSet::none(3);
  a.insert(1);
  a.insert(6);
  CHECK(a.count() == 2);
  CHECK(a.contains(6));
  CHECK(a.complement().count() == 6);
  CHECK((a | a.complement()) == ModelSet::all(3));
  CHECK((a & a.complement()).empty());
  CHECK(a.is_subset_of(ModelSet::all(3)));
  CHECK(ModelSet::of_atom(2, 0) == truth_table(parse_formula("p"), testing::vocab_of(2)));
  CHECK(ModelSet::all(7).count() == 128);
  auto big = ModelSet::all(7);
  big.erase(100);
  CHECK(big.count() == 127);
  CHECK_FALSE(big.contains(100));
}

TEST_CASE("assignments order by binary counting") {
  const auto a = Assignment::from_index(5, 3);  // 101: p and r true
  CHECK(a.holds(0));
  CHECK_FALSE(a.holds(1));
  CHECK(a.holds(2));
  CHECK(a.to_index(3) == 5);
  CHECK(Assignment::from_index(3, 3) < Assignment::from_index(4, 3));
}

TEST_CASE("rationals") {
  CHECK(parse_rational("0.15") == Rational(3, 20));
  CHECK(parse_rational("1/99") == Rational(1, 99));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("3") == 3);
  CHECK_THROWS_AS(parse_rational("1/0"), SemanticError);
  CHECK_THROWS_AS(parse_rational("x"), SemanticError);
  CHECK(format_rational(Rational(3, 20)) == "0.15");
  CHECK(format_rational(Rational(1, 98)) == "1/98");
  CHECK(format_rational(Rational(2)) == "2");
  CHECK(approx_equal(Rational(1, 3), Rational(333333333, 1000000000), weight_tolerance()));
}
