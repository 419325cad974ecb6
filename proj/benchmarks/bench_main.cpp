#include <benchmark/benchmark.h>

#include "mhs/domination.hpp"
#include "mhs/mhs_sums.hpp"
#include "mhs/primes.hpp"
#include "mhs/s1_bounds.hpp"
#include "mhs/tables.hpp"

#include <cstdint>
#include <vector>

namespace {

mhs::Composition ones(std::uint32_t r) {
  return mhs::Composition(std::vector<std::uint32_t>(r, 1));
}

void BM_ExactEval(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto s = ones(static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhs::mhs_eval(n, s));
  }
}
BENCHMARK(BM_ExactEval)->Args({30, 3})->Args({60, 4})->Args({116, 4});

void BM_StarExactEval(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto s = ones(static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhs::mhs_star_eval(n, s));
  }
}
BENCHMARK(BM_StarExactEval)->Args({30, 3})->Args({50, 3});

void BM_UpperEval(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto s = ones(static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhs::mhs_upper_eval(n, s));
  }
}
BENCHMARK(BM_UpperEval)->Args({145, 5})->Args({1361 * 18, 18})->Args({7944, 24});

void BM_SieveBuild(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    mhs::PrimeSieve sieve(limit);
    benchmark::DoNotOptimize(sieve.primes().size());
  }
}
BENCHMARK(BM_SieveBuild)->Arg(100000)->Arg(1000000);

void BM_ComputeMr(benchmark::State& state) {
  const mhs::PrimeSieve sieve;
  const auto r = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhs::compute_m_r(r, sieve));
  }
}
BENCHMARK(BM_ComputeMr)->Arg(8)->Arg(29)->Arg(69);

void BM_SuffixCoefficients(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const mhs::Composition s({1, 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhs::suffix_coefficients(n, s));
  }
}
BENCHMARK(BM_SuffixCoefficients)->Arg(30)->Arg(60);

void BM_S1Bound(benchmark::State& state) {
  const mhs::PrimeSieve sieve;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const mhs::Composition tail({1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhs::s1_bound(n, tail, sieve));
  }
}
BENCHMARK(BM_S1Bound)->Arg(21)->Arg(60);

void BM_CoverCheck(benchmark::State& state) {
  const auto tables = mhs::load_tables();
  const auto r = static_cast<std::uint32_t>(state.range(0));
  const auto optimal = tables.optimal_compositions(r);
  const auto exclusion = tables.exclusion_tails(r);
  const auto cap = tables.cover_cap(r);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhs::exclusion_cover_report(r, optimal, exclusion, cap).ok);
  }
}
BENCHMARK(BM_CoverCheck)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
