#include <benchmark/benchmark.h>

#include "bcjq/banded.hpp"
#include "bcjq/identities.hpp"
#include "bcjq/sequences.hpp"
#include "cli/strategies.hpp"

namespace {

using bcjq::cli::Strategy;

void BM_J3Recurrence(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bcjq::j3(n));
}
BENCHMARK(BM_J3Recurrence)->RangeMultiplier(10)->Range(10, 10000);

void BM_J3Matpow(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bcjq::j3_matpow(n));
}
BENCHMARK(BM_J3Matpow)->RangeMultiplier(10)->Range(10, 10000);

void BM_J3Binet(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bcjq::j3_binet(n));
}
BENCHMARK(BM_J3Binet)->RangeMultiplier(10)->Range(10, 10000);

void BM_BcjViaDet(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bcjq::bcj_via_det(n));
}
BENCHMARK(BM_BcjViaDet)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMillisecond);

// Whole tables BC(0..n) per strategy, as the CLI bench times them. Values are
// checked against the definitional table once, before timing.
void BM_StrategyTable(benchmark::State& state) {
  const auto strategy = static_cast<Strategy>(state.range(0));
  const auto n = static_cast<std::uint64_t>(state.range(1));
  const auto reference = bcjq::cli::reference_terms(n);
  const auto values = bcjq::cli::evaluate(strategy, n);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] != reference[k]) {
      state.SkipWithError("strategy disagrees with the definitional table");
      return;
    }
  }
  state.SetLabel(std::string(bcjq::cli::to_string(strategy)));
  for (auto _ : state) benchmark::DoNotOptimize(bcjq::cli::evaluate(strategy, n));
}
BENCHMARK(BM_StrategyTable)
    ->ArgsProduct({{static_cast<long>(Strategy::Recurrence), static_cast<long>(Strategy::Matpow),
                    static_cast<long>(Strategy::Binet)},
                   {100, 1000}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrategyTable)->Args({static_cast<long>(Strategy::Det), 32})->Unit(benchmark::kMillisecond);

void BM_VerifyCatalog(benchmark::State& state) {
  std::vector<const bcjq::IdentityEntry*> all;
  for (const auto& e : bcjq::identity_catalog()) all.push_back(&e);
  for (auto _ : state) benchmark::DoNotOptimize(bcjq::run_identities(all, bcjq::VerifyOptions{}));
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
