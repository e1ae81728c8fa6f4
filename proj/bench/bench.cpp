// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "qcyc/criteria.hpp"
#include "qcyc/desk.hpp"
#include "qcyc/linalg/elim.hpp"
#include "qcyc/sl2/engine.hpp"

using namespace qcyc;

namespace {

Matrix<QFunc> random_qmatrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3), e(-4, 4);
  Matrix<QFunc> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % 4 == 0) m(i, j) = QFunc(d(rng)) * QFunc::q_power(e(rng)) + QFunc(d(rng));
  return m;
}

void BM_rref(benchmark::State& st, Backend b) {
  const auto m = random_qmatrix(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m, b).rank());
}

void BM_rref_serial(benchmark::State& st) { BM_rref(st, Backend::Serial); }
void BM_rref_omp(benchmark::State& st) { BM_rref(st, Backend::OpenMP); }

void BM_pair_oracle(benchmark::State& st, Backend b) {
  const std::vector<Monomial> ms = {Monomial::sl2(4), Monomial::sl2(2) * Monomial::sl2(4), Monomial::sl2(2),
                                    Monomial::sl2(0) * Monomial::sl2(2), Monomial::sl2(0)};
  auto oracle = [&ms](std::size_t i, std::size_t j) { return is_cyclic_tensor({ms[i], ms[j]}); };
  for (auto _ : st) benchmark::DoNotOptimize(maincyc_conclude(ms, oracle, "oracle", b).status);
}

void BM_pair_oracle_serial(benchmark::State& st) { BM_pair_oracle(st, Backend::Serial); }
void BM_pair_oracle_omp(benchmark::State& st) { BM_pair_oracle(st, Backend::OpenMP); }

void BM_random_lists(benchmark::State& st, Backend b) {
  for (auto _ : st) benchmark::DoNotOptimize(random_list_soundness(16, 5, b).failures);
}

void BM_random_lists_serial(benchmark::State& st) { BM_random_lists(st, Backend::Serial); }
void BM_random_lists_omp(benchmark::State& st) { BM_random_lists(st, Backend::OpenMP); }

void BM_desk(benchmark::State& st, Backend b) {
  for (auto _ : st) benchmark::DoNotOptimize(run_desk(b, st.range(0)).triples);
}

void BM_desk_serial(benchmark::State& st) { BM_desk(st, Backend::Serial); }
void BM_desk_omp(benchmark::State& st) { BM_desk(st, Backend::OpenMP); }

}  // namespace

BENCHMARK(BM_rref_serial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_omp)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pair_oracle_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pair_oracle_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_random_lists_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_random_lists_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_desk_serial)->Arg(16)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_desk_omp)->Arg(16)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
