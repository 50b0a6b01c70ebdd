#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "worldseq/default_logic.hpp"
#include "worldseq/possibility.hpp"
#include "worldseq/probability.hpp"

using namespace worldseq;

namespace {

std::vector<std::string> names(std::size_t n, const std::string& prefix = "a") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Pairs of conflicting defaults true : M a_i / a_i and true : M ~a_i / ~a_i,
// giving 2^(n/2) extensions.
DefaultTheory conflicting_pairs(std::size_t n) {
  Vocabulary vocab(names(n));
  std::vector<DefaultRule> rules;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const auto a = Formula::atom(vocab.name(i));
    rules.push_back({"pos" + std::to_string(i), Formula::top(), {a}, a});
    rules.push_back({"neg" + std::to_string(i), Formula::top(), {~a}, ~a});
  }
  return DefaultTheory(vocab, std::move(rules), {});
}

}  // namespace

static void BM_TruthTable(benchmark::State& state) {
  const Vocabulary vocab(names(static_cast<std::size_t>(state.range(0))));
  Formula phi = Formula::bottom();
  for (std::size_t i = 0; i + 1 < vocab.size(); ++i)
    phi = phi | (Formula::atom(vocab.name(i)) & ~Formula::atom(vocab.name(i + 1)));
  for (auto _ : state) benchmark::DoNotOptimize(truth_table(phi, vocab));
}
BENCHMARK(BM_TruthTable)->Arg(8)->Arg(12)->Arg(16);

static void BM_Extensions(benchmark::State& state) {
  const auto theory = conflicting_pairs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extensions(theory));
}
BENCHMARK(BM_Extensions)->Arg(4)->Arg(8)->Arg(12);

static void BM_LotteryThreshold(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto space = lottery_space(n);
  const std::vector<Formula> conditions{~Formula::atom("p1"), ~Formula::atom("p2")};
  const Rational eps(1, static_cast<long long>(n - 1));
  for (auto _ : state) benchmark::DoNotOptimize(threshold(space, eps, conditions));
}
BENCHMARK(BM_LotteryThreshold)->Arg(100)->Arg(10000);

static void BM_BuildPoss(benchmark::State& state) {
  const Vocabulary vocab(names(static_cast<std::size_t>(state.range(0))));
  std::vector<std::pair<Rational, Formula>> statements;
  for (std::size_t i = 0; i < vocab.size(); ++i)
    statements.emplace_back(Rational(static_cast<long long>(i), static_cast<long long>(vocab.size())),
                            Formula::atom(vocab.name(i)));
  const auto kb = PossibilisticKB::from_statements(vocab, statements);
  for (auto _ : state) benchmark::DoNotOptimize(build_poss_sequence(kb));
}
BENCHMARK(BM_BuildPoss)->Arg(8)->Arg(14);
BENCHMARK_MAIN();
