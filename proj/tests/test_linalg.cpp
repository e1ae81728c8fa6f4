#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "qcyc/arith/frac.hpp"
#include "qcyc/linalg/elim.hpp"
#include "qcyc/linalg/matrix.hpp"

using namespace qcyc;

namespace {

// L * U with unit blocks, rows and columns shuffled: rank exactly k.
Matrix<mpq_class> known_rank(std::size_t n, std::size_t m, std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix<mpq_class> L(n, k), U(k, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) L(i, j) = i == j ? 1 : (i < k ? 0 : d(rng));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) U(i, j) = i == j ? 1 : (j < k ? 0 : d(rng));
  Matrix<mpq_class> A = L * U, B(n, m);
  std::vector<std::size_t> pr(n), pc(m);
  for (std::size_t i = 0; i < n; ++i) pr[i] = i;
  for (std::size_t j = 0; j < m; ++j) pc[j] = j;
  std::shuffle(pr.begin(), pr.end(), rng);
  std::shuffle(pc.begin(), pc.end(), rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) B(pr[i], pc[j]) = A(i, j);
  return B;
}

}  // namespace

TEST_CASE("rank of matrices with planted rank") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 7, m = 1 + rng() % 7, k = rng() % (std::min(n, m) + 1);
    const auto A = known_rank(n, m, k, rng);
    CHECK(rank(A, Backend::Serial) == k);
    CHECK(rank(A, Backend::OpenMP) == k);
    const auto ker = kernel(A, Backend::Serial);
    CHECK(ker.size() == m - k);
    for (const auto& v : ker) {
      const auto Av = A.apply(v);
      CHECK(std::all_of(Av.begin(), Av.end(), [](const mpq_class& x) { return sgn(x) == 0; }));
    }
  }
}

TEST_CASE("inverse of an invertible matrix and of a singular one") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const auto A = known_rank(n, n, n, rng);
    const auto inv = inverse(A);
    REQUIRE(inv.has_value());
    CHECK(A * *inv == Matrix<mpq_class>::identity(n));
    CHECK(*inv * A == Matrix<mpq_class>::identity(n));
  }
  CHECK_FALSE(inverse(known_rank(4, 4, 3, rng)).has_value());
}

TEST_CASE("serial and OpenMP elimination give identical echelon forms") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto A = known_rank(12, 15, 1 + rng() % 11, rng);
    const auto s = rref_serial(A), p = rref_omp(A);
    CHECK(s.pivots == p.pivots);
    CHECK(s.rows == p.rows);
  }
}

TEST_CASE("q-Vandermonde matrix over Q(q) is invertible") {
  const std::size_t n = 4;
  Matrix<QFunc> V(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) V(i, j) = QFunc::q_power(static_cast<int>(i * j));
  CHECK(rank(V, Backend::Serial) == n);
  const auto inv = inverse(V, Backend::Serial);
  REQUIRE(inv.has_value());
  CHECK(V * *inv == Matrix<QFunc>::identity(n));
  // Rows i and i' collide at q = 1: the specialization drops rank to 1.
  CHECK(rank(V.map([](const QFunc& x) { return x.eval(mpq_class(1)); })) == 1);
}

TEST_CASE("rank over Q(q)(z) drops exactly at the special value") {
  // [[1, z], [z, 1]] has determinant 1 - z^2.
  Matrix<ZFunc> M(2, 2);
  M(0, 0) = M(1, 1) = ZFunc(1);
  M(0, 1) = M(1, 0) = ZFunc::x();
  CHECK(rank(M) == 2);
  CHECK(rank(M.map([](const ZFunc& f) { return f.eval(QFunc(1)); })) == 1);
  CHECK(rank(M.map([](const ZFunc& f) { return f.eval(QFunc(2)); })) == 2);
}

TEST_CASE("echelon basis insertion and reduction") {
  EchelonBasis<mpq_class> B(3);
  CHECK(B.insert({1, 2, 3}).has_value());
  CHECK(B.insert({2, 4, 6}) == std::nullopt);
  CHECK(B.insert({0, 1, 1}).has_value());
  CHECK(B.size() == 2);
  const auto r = B.reduce({1, 3, 4});
  CHECK(std::all_of(r.begin(), r.end(), [](const mpq_class& x) { return sgn(x) == 0; }));
}

TEST_CASE("sparse and dense products agree") {
  std::mt19937_64 rng(13);
  const auto A = known_rank(5, 5, 4, rng), B = known_rank(5, 5, 3, rng);
  const auto sa = SparseMat<mpq_class>::from_dense(A), sb = SparseMat<mpq_class>::from_dense(B);
  CHECK((sa * sb).dense() == A * B);
  CHECK((sa + sb).dense() == A + B);
}
