#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ciskit/bit_matrix.hpp"
#include "ciskit/constructions.hpp"
#include "ciskit/equivalence.hpp"
#include "ciskit/linear_code.hpp"
#include "ciskit/permutation.hpp"

namespace {

using namespace ciskit;

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.set(i, j, rng() & 1u);
    }
  }
  return m;
}

LinearCode random_systematic(std::size_t n, std::uint64_t seed) {
  return LinearCode::systematic(random_matrix(n, n, seed));
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BitMatrix m = random_matrix(n, n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(BM_Rank)->Arg(64)->Arg(256)->Arg(1024);

void BM_MinDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LinearCode code = random_systematic(n, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_distance(code));
  }
}
BENCHMARK(BM_MinDistance)->Arg(12)->Arg(17)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_DoubleCirculant30(benchmark::State& state) {
  const LinearCode code = double_circulant(Gf2Poly::from_string("110101011010000"), 15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_distance(code));
  }
}
BENCHMARK(BM_DoubleCirculant30)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LinearCode code = random_systematic(n, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(code).key);
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void BM_CanonicalFormHamming(benchmark::State& state) {
  const LinearCode code(BitMatrix::from_strings({"10001110", "01001011", "00101101", "00010111"}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(code).key);
  }
}
BENCHMARK(BM_CanonicalFormHamming);

void BM_WalshGci(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::vector<std::uint32_t> table(std::size_t{1} << n);
  std::iota(table.begin(), table.end(), 0u);
  std::shuffle(table.begin(), table.end(), std::mt19937_64(17));
  const PermutationTable f(n, table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gci_order_walsh(f).order);
  }
}
BENCHMARK(BM_WalshGci)->Arg(4)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
