#include <benchmark/benchmark.h>

#include "bca/contact.hpp"
#include "bca/modal.hpp"
#include "bca/resolution.hpp"
#include "bca/search.hpp"

namespace {

bca::ContactRelation chain_contact(std::size_t n) {
  bca::Frame frame = [&] {
    bca::Algebra alg = bca::letter_algebra(n);
    bca::Frame f(alg.atom_names());
    for (std::size_t i = 0; i < n; ++i) {
      f.set(i, i);
      if (i + 1 < n) {
        f.set(i, i + 1);
        f.set(i + 1, i);
      }
    }
    return f;
  }();
  return bca::contact_from_frame(frame);
}

void BM_CheckAxioms(benchmark::State& state) {
  const auto c = chain_contact(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bca::check_axioms(c));
}
BENCHMARK(BM_CheckAxioms)->DenseRange(2, 5);

void BM_DeriveM(benchmark::State& state) {
  const auto c = chain_contact(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bca::derive_m(c));
}
BENCHMARK(BM_DeriveM)->DenseRange(2, 6);

void BM_ContactFromDiamond(benchmark::State& state) {
  const auto m = bca::derive_m(chain_contact(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bca::contact_from_diamond(m));
}
BENCHMARK(BM_ContactFromDiamond)->DenseRange(2, 5);

void BM_AllPartitions(benchmark::State& state) {
  const auto alg = bca::letter_algebra(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bca::all_partitions(alg));
}
BENCHMARK(BM_AllPartitions)->DenseRange(2, 5);

void BM_SearchCollapse(benchmark::State& state) {
  const auto goal = bca::parse_goal("C4c & E_down & !C=O");
  for (auto _ : state) {
    benchmark::DoNotOptimize(bca::search(static_cast<std::size_t>(state.range(0)), goal));
  }
}
BENCHMARK(BM_SearchCollapse)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
