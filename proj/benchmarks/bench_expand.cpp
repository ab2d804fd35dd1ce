#include <random>

#include <benchmark/benchmark.h>

#include "vkarrow/gauss_code.hpp"
#include "vkarrow/state_sum.hpp"

namespace {

// Random signed Gauss code on n crossings; fixed seed so runs compare.
vkarrow::GaussCode random_code(unsigned n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<unsigned> slots;
  for (unsigned c = 1; c <= n; ++c) {
    slots.push_back(c);
    slots.push_back(c);
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<int> sign(n + 1);
  std::vector<int> seen(n + 1, 0);
  std::vector<bool> over_first(n + 1);
  for (unsigned c = 1; c <= n; ++c) {
    sign[c] = rng() % 2 ? 1 : -1;
    over_first[c] = rng() % 2;
  }
  std::string text;
  for (unsigned c : slots) {
    const bool over = (seen[c]++ == 0) == over_first[c];
    text += over ? 'O' : 'U';
    text += std::to_string(c);
    text += sign[c] > 0 ? '+' : '-';
  }
  return vkarrow::parse_gauss(text);
}

void BM_Expand(benchmark::State& state) {
  const auto code = random_code(static_cast<unsigned>(state.range(0)), 7);
  vkarrow::ExpandOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(vkarrow::expand(code, opts));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

BENCHMARK(BM_Expand)
    ->ArgsProduct({{4, 8, 12}, {1}})
    ->ArgsProduct({{16, 18}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond);

void BM_BracketOracle(benchmark::State& state) {
  const auto code = random_code(static_cast<unsigned>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(vkarrow::bracket_oracle(code));
}

BENCHMARK(BM_BracketOracle)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
