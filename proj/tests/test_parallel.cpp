#include <catch_amalgamated.hpp>

#include <random>

#include "qcyc/desk.hpp"
#include "qcyc/linalg/elim.hpp"
#include "qcyc/parallel.hpp"

using namespace qcyc;

TEST_CASE("map_indices keeps index order and rethrows") {
  for (Backend b : {Backend::Serial, Backend::OpenMP}) {
    const auto v = map_indices<std::size_t>(b, 100, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == i * i);
    CHECK_THROWS_AS(for_each_index(b, 10, [](std::size_t i) {
                      if (i == 7) throw std::out_of_range("seven");
                    }),
                    std::out_of_range);
  }
}

TEST_CASE("serial and OpenMP rref over Q(q)") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> d(-2, 2), e(-3, 3);
  for (int t = 0; t < 5; ++t) {
    Matrix<QFunc> m(10, 12);
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = 0; j < 12; ++j)
        if (rng() % 3 == 0) m(i, j) = QFunc(d(rng)) * QFunc::q_power(e(rng)) + QFunc(d(rng));
    const auto s = rref_serial(m), p = rref_omp(m);
    CHECK(s.pivots == p.pivots);
    CHECK(s.rows == p.rows);
  }
}

TEST_CASE("random list soundness check is backend independent") {
  const CycReport s = random_list_soundness(12, 99, Backend::Serial);
  const CycReport p = random_list_soundness(12, 99, Backend::OpenMP);
  CHECK(s == p);
  CHECK(s.lists == 12);
  CHECK(s.failures == 0);
}

TEST_CASE("desk enumeration is backend independent") {
  const DeskReport s = run_desk(Backend::Serial, 16);
  const DeskReport p = run_desk(Backend::OpenMP, 16);
  CHECK(s == p);
  CHECK(s.simples == 26);
  CHECK(s.triples > 0);
  CHECK(s.maincyc_failures == 0);
  CHECK(s.criterion_failures == 0);
}
