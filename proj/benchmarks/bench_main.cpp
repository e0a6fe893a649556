#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "matlog/clone.hpp"
#include "matlog/registry.hpp"
#include "matlog/semantics.hpp"
#include "matlog/survey.hpp"

using namespace matlog;

namespace {

// p1, ..., pn |- p1 & ... & pn: valid, so every valuation is visited.
void BM_EntailsConjunction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto threads = static_cast<std::size_t>(state.range(1));
  const auto lp = resolve_logic("LP");
  std::vector<Formula> premises;
  Formula conclusion = var("p1");
  for (std::size_t i = 1; i <= n; ++i) {
    premises.push_back(var("p" + std::to_string(i)));
    if (i > 1) conclusion = conj(conclusion, premises.back());
  }
  EvalOptions o;
  o.threads = threads;
  for (auto _ : state) {
    auto v = entails(lp, premises, conclusion, o);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_EntailsConjunction)
    ->Args({8, 1})
    ->Args({12, 1})
    ->Args({12, 4})
    ->Unit(benchmark::kMillisecond);

void BM_Survey(benchmark::State& state) {
  const auto algebra = state.range(0) == 0 ? builtin::sk() : builtin::wk();
  const auto exponent = static_cast<std::size_t>(state.range(1));
  SurveyOptions o;
  if (exponent > 2) o.mode = SubuniverseMode::generated;
  for (auto _ : state) {
    auto r = survey(algebra, exponent, o);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Survey)
    ->Args({0, 2})
    ->Args({0, 3})
    ->Args({1, 3})
    ->Unit(benchmark::kMillisecond);

void BM_BinaryClone(benchmark::State& state) {
  const auto algebra = state.range(0) == 0 ? builtin::sk() : builtin::l3();
  for (auto _ : state) {
    auto c = generate_clone(algebra, 2);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_BinaryClone)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
