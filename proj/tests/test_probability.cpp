#include <doctest.h>

#include "support.hpp"
#include "worldseq/error.hpp"
#include "worldseq/syntax.hpp"

using namespace worldseq;

namespace {

Formula f(const char* text) { return parse_formula(text); }

// w1 = {p,q} 0.2, w2 = {p,~q} 0.3, w3 = {~p,q} 0.1, w4 = {~p,~q} 0.4
SampleSpace four_worlds() {
  const auto v = testing::vocab_of(2);
  return SampleSpace(v, {World{Assignment({0, 1}), parse_rational("0.2")}, World{Assignment({0}), parse_rational("0.3")},
                         World{Assignment({1}), parse_rational("0.1")}, World{Assignment(), parse_rational("0.4")}});
}

std::vector<std::vector<std::string>> classes_of(const PartitionSequence& s) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : s.classes) {
    std::vector<std::string> names;
    for (const auto& w : c) names.push_back(describe(w, s.vocab));
    std::sort(names.begin(), names.end());
    out.push_back(names);
  }
  return out;
}

std::vector<Formula> losing(std::initializer_list<int> tickets) {
  std::vector<Formula> out;
  for (int t : tickets) out.push_back(~Formula::atom("p" + std::to_string(t)));
  return out;
}

}  // namespace

TEST_CASE("sample space validation") {
  const auto v = testing::vocab_of(1);
  CHECK_THROWS_AS(SampleSpace(v, {World{Assignment(), Rational(1, 2)}}), SemanticError);
  CHECK_THROWS_AS(SampleSpace(v, {World{Assignment(), Rational(-1)}, World{Assignment({0}), Rational(2)}}),
                  SemanticError);
  CHECK_THROWS_AS(SampleSpace(v, {World{Assignment(), Rational(1, 2)}, World{Assignment(), Rational(1, 2)}}),
                  SemanticError);
  CHECK_NOTHROW(SampleSpace(v, {World{Assignment({0}), Rational(1)}}));
}

TEST_CASE("conditioning") {
  const auto space = four_worlds();
  const std::vector<Formula> both{f("p -> q"), f("p | q")};
  const auto seq = condition(space, both);
  CHECK(seq.kind == SequenceKind::Conditional);
  CHECK(classes_of(seq) == std::vector<std::vector<std::string>>{{"{p,~q}"}, {"{~p,~q}"}, {"{p,q}", "{~p,q}"}});
  CHECK(cond_prob(seq, f("p")) == Rational(2, 3));
  CHECK(cond_prob(seq, f("q")) == 1);
  CHECK(cond_prob(seq, Formula::top()) == 1);

  const std::vector<Formula> one{f("p -> q")};
  CHECK(classes_of(condition(space, one)) ==
        std::vector<std::vector<std::string>>{{"{p,~q}"}, {"{p,q}", "{~p,q}", "{~p,~q}"}});
  const std::vector<Formula> top{Formula::top()};
  const auto trivial = condition(space, top);
  CHECK(trivial.classes[0].empty());
  CHECK(trivial.classes[1].size() == 4);
  CHECK_THROWS_AS(condition(space, std::vector<Formula>{}), PreconditionError);
}

TEST_CASE("zero-mass conditional is undefined") {
  const auto space = four_worlds();
  const std::vector<Formula> never{f("p & ~p")};
  CHECK_THROWS_AS(cond_prob(condition(space, never), f("p")), UndefinedConditionalError);
}

TEST_CASE("incremental and persistent") {
  testing::Generator gen(61);
  for (int i = 0; i < 200; ++i) {
    const auto space = gen.sample_space(3);
    const auto& v = space.vocab();
    std::vector<Formula> conds;
    for (std::size_t k = gen.uniform(2, 4); k > 0; --k) conds.push_back(gen.formula(v, 3));
    const std::span<const Formula> all(conds);
    const auto full = condition(space, all);
    CHECK(refine(condition(space, all.first(conds.size() - 1)), conds.back()) == full);
    const Formula psi = gen.formula(v, 3);
    for (std::size_t k = 1; k <= conds.size(); ++k) {
      const Rational denom = testing::mass(space, conjoin(all.first(k)));
      if (denom == 0) continue;
      CHECK(cond_prob(full, psi, k) == testing::mass(space, psi & conjoin(all.first(k))) / denom);
    }
  }
}

TEST_CASE("lottery thresholding") {
  const auto space = lottery_space(100);
  const auto seq = threshold(space, Rational(1, 99), losing({1, 2}));
  CHECK(seq.kind == SequenceKind::Threshold);
  const auto ratios = step_ratios(seq);
  CHECK(ratios == std::vector<std::optional<Rational>>{Rational(1, 100), Rational(1, 99)});
  CHECK(threshold_prob(space, Rational(1, 99), losing({1, 2}), f("p1")) == 0);
  CHECK(threshold_prob(space, Rational(1, 99), losing({1, 2}), f("p2")) == 0);
  CHECK(threshold_prob(space, Rational(1, 99), losing({1, 2}), f("p57")) == Rational(1, 98));
  CHECK(threshold_prob(space, Rational(1, 99), losing({7}), f("~p7")) == 1);

  try {
    threshold(space, Rational(1, 100), losing({1, 2}));
    FAIL("expected a threshold failure");
  } catch (const ThresholdError& e) {
    CHECK(e.step() == 2);
    CHECK(e.formula() == "~p2");
    CHECK(e.ratio() == Rational(1, 99));
  }
  CHECK_NOTHROW(threshold(space, 0, std::vector<Formula>{Formula::top()}));
  CHECK_THROWS_AS(threshold(space, -1, losing({1})), PreconditionError);
}

TEST_CASE("strict threshold divides by the whole space") {
  const auto space = lottery_space(100);
  const auto seq = condition(space, losing({1, 2}));
  CHECK(step_ratios(seq, CheckMode::Strict) == std::vector<std::optional<Rational>>{Rational(1, 100), Rational(1, 100)});
  CHECK_NOTHROW(threshold(space, Rational(1, 100), losing({1, 2}), CheckMode::Strict));
}

TEST_CASE("threshold orders") {
  const auto space = lottery_space(100);
  const auto two = losing({1, 2});
  CHECK(enumerate_threshold_orders(space, Rational(1, 99), two, 2).size() == 4);  // two singles, both pairs
  const auto three = losing({1, 2, 3});
  for (const auto& order : enumerate_threshold_orders(space, Rational(1, 99), three, 3)) CHECK(order.size() <= 2);
  const std::vector<Formula> bottom{Formula::bottom()};
  CHECK(enumerate_threshold_orders(space, Rational(1, 2), bottom, 1).empty());
  const auto eleven = losing({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  CHECK_THROWS_AS(enumerate_threshold_orders(space, Rational(1, 2), eleven, 1), ResourceError);
}

TEST_CASE("lottery spaces") {
  const auto one = lottery_space(1);
  REQUIRE(one.worlds().size() == 1);
  CHECK(one.worlds()[0].weight == 1);
  const auto three = lottery_space(3);
  CHECK(three.worlds().size() == 3);
  CHECK(testing::mass(three, f("p1")) == Rational(1, 3));
  CHECK_THROWS_AS(lottery_space(0), PreconditionError);
  CHECK(lottery_space(1000000).worlds().size() == 1000000);
}

TEST_CASE("no ordering of every ticket is accepted below 1") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto space = lottery_space(n);
    std::vector<Formula> all;
    for (std::size_t i = 1; i <= n; ++i) all.push_back(~Formula::atom("p" + std::to_string(i)));
    for (const Rational& eps : {Rational(0), Rational(1, 2), Rational(99, 100)}) {
      for (const auto& order : enumerate_threshold_orders(space, eps, all, n)) CHECK(order.size() < n);
    }
  }
}

TEST_CASE("rejection") {
  const auto space = lottery_space(100);
  const auto seq = threshold(space, Rational(1, 99), losing({1}));
  CHECK(rejected(seq, f("p2"), Rational(1, 99)));
  CHECK_FALSE(rejected(seq, f("~p2"), Rational(1, 99)));
}
