#include <benchmark/benchmark.h>

#include "turan/conjectures.hpp"
#include "turan/constructions.hpp"
#include "turan/extremal.hpp"
#include "turan/hypergraph.hpp"
#include "turan/lagrangian.hpp"

#include <random>

using namespace turan;

namespace {

void BM_EvaluateP(benchmark::State& state) {
  RMultigraph g = hajek_hypergraph(3, static_cast<int>(state.range(0)));
  std::vector<double> x(g.n(), 1.0 / g.n());
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_p(g, x));
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_EvaluateP)->Arg(2)->Arg(3)->Arg(4);

void BM_GradientP(benchmark::State& state) {
  RMultigraph g = hajek_hypergraph(3, static_cast<int>(state.range(0)));
  std::vector<double> x(g.n(), 1.0 / g.n());
  for (auto _ : state) benchmark::DoNotOptimize(gradient_p(g, x));
}
BENCHMARK(BM_GradientP)->Arg(2)->Arg(3);

void BM_LambdaEstimateK7(benchmark::State& state) {
  RMultigraph g = RMultigraph::complete(2, 7);
  LambdaConfig config;
  config.restarts = 8;
  for (auto _ : state) benchmark::DoNotOptimize(lambda_estimate(g, config).estimate);
}
BENCHMARK(BM_LambdaEstimateK7);

void BM_PermanentRyser(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  NonnegMatrix a{n, {}};
  a.entries.resize(static_cast<std::size_t>(n) * n);
  for (auto& v : a.entries) v = uniform(rng);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(a));
}
BENCHMARK(BM_PermanentRyser)->Arg(8)->Arg(10)->Arg(12);

void BM_StrongPower(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(strong_power(3, static_cast<int>(state.range(0))).edge_count());
}
BENCHMARK(BM_StrongPower)->Arg(2)->Arg(3)->Arg(4);

void BM_ExBruteMantel(benchmark::State& state) {
  ForbiddenFamily triangle = ForbiddenFamily::make({RMultigraph::complete(2, 3)});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ex_brute(n, triangle).max_edges);
}
BENCHMARK(BM_ExBruteMantel)->Arg(5)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
