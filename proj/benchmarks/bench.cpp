#include <benchmark/benchmark.h>

#include "dbruhat/io.hpp"

using namespace dbruhat;

namespace {

void BM_EnumerateOrders(benchmark::State& state) {
  const RootSystem R = RootSystem::build("A3");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orders(R));
}
BENCHMARK(BM_EnumerateOrders);

void BM_WeylGroup(benchmark::State& state) {
  const RootSystem R = RootSystem::build(state.range(0) == 0 ? "B3" : "F4");
  for (auto _ : state) benchmark::DoNotOptimize(WeylGroup(R).order());
}
BENCHMARK(BM_WeylGroup)->Arg(0)->Arg(1);

void BM_Census(benchmark::State& state) {
  const RootSystem R = RootSystem::build(state.range(0) == 0 ? "A2" : "A3");
  const WeylGroup W(R);
  const auto order = canonical_order(R);
  const auto window = WeightWindow::box(R.two_rho_check());
  for (auto _ : state)
    benchmark::DoNotOptimize(wts_census(W, order, R.num_positive(), WeylElement::identity(R), window));
}
BENCHMARK(BM_Census)->Arg(0)->Arg(1);

void BM_QuantumBruhat(benchmark::State& state) {
  const WeylGroup W(RootSystem::build("B3"));
  for (auto _ : state) {
    const auto Q = build_qbg(W);
    benchmark::DoNotOptimize(Q.from(W.longest()));
  }
}
BENCHMARK(BM_QuantumBruhat);

void BM_AdlvAnalyze(benchmark::State& state) {
  const RootSystem R = RootSystem::build("A2");
  const WeylGroup W(R);
  const auto x = parse_affine(R, "s1 s2 s1;10,10");
  const auto b = make_sigma_class(R, parse_coweight(R, "9,9"));
  for (auto _ : state) benchmark::DoNotOptimize(adlv_analyze(W, x, b));
}
BENCHMARK(BM_AdlvAnalyze);

void BM_Kostant(benchmark::State& state) {
  const RootSystem R = RootSystem::build("A3");
  const Coweight lambda{6, 8, 6};
  for (auto _ : state) benchmark::DoNotOptimize(kostant_partition(R, lambda));
}
BENCHMARK(BM_Kostant);

}  // namespace
BENCHMARK_MAIN();
