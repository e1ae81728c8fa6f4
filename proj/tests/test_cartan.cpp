#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "qcyc/cartan.hpp"
#include "qcyc/linalg/elim.hpp"
#include "qcyc/monomial.hpp"

using namespace qcyc;

namespace {

const std::vector<std::string> kTypes = {
    "A1~1", "A2~1", "A3~1", "A5~1", "B3~1", "B4~1", "C2~1", "C3~1", "D4~1", "D5~1", "E6~1", "E7~1", "E8~1", "F4~1", "G2~1",
    "A2~2", "A4~2", "A6~2", "A5~2", "A7~2", "D3~2", "D4~2", "D5~2", "E6~2", "D4~3"};

Matrix<mpq_class> as_matrix(const std::vector<std::vector<int>>& C) {
  Matrix<mpq_class> m(C.size(), C.size());
  for (std::size_t i = 0; i < C.size(); ++i)
    for (std::size_t j = 0; j < C.size(); ++j) m(i, j) = C[i][j];
  return m;
}

}  // namespace

TEST_CASE("affine Cartan matrices are generalized Cartan matrices of corank one") {
  for (const auto& name : kTypes) {
    CAPTURE(name);
    const CartanData cd = build_cartan(name);
    const std::size_t N = cd.C.size();
    REQUIRE(N == static_cast<std::size_t>(cd.n) + 1);
    for (std::size_t i = 0; i < N; ++i) {
      CHECK(cd.C[i][i] == 2);
      for (std::size_t j = 0; j < N; ++j)
        if (i != j) {
          CHECK(cd.C[i][j] <= 0);
          CHECK((cd.C[i][j] == 0) == (cd.C[j][i] == 0));
        }
    }
    // Corank one with a strictly positive null vector (the affine criterion).
    const auto ker = kernel(as_matrix(cd.C), Backend::Serial);
    REQUIRE(ker.size() == 1);
    const auto& v = ker[0];
    const int s = sgn(v[0]);
    CHECK(s != 0);
    for (const auto& x : v) CHECK(sgn(x) == s);
    CHECK(det(cd.C) == 0);
    CHECK(det(cd.finite_C) > 0);
    CHECK(is_affine_cartan(cd.C));
  }
}

TEST_CASE("symmetrizers, mu and d") {
  for (const auto& name : kTypes) {
    CAPTURE(name);
    const CartanData cd = build_cartan(name);
    const std::size_t N = cd.C.size();
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) CHECK(cd.r[i] * cd.C[i][j] == cd.r[j] * cd.C[j][i]);
    mpz_class g = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const mpq_class mr = cd.r[i] * cd.mu[i];
      REQUIRE(mr.get_den() == 1);
      CHECK(mr > 0);
      g = gcd(g, mr.get_num());
    }
    CHECK(g == 1);
    for (int i = 1; i <= cd.n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      CHECK(cd.mu[ui] == (cd.special_node(i) ? 2 : 1));
      if (cd.type.untwisted())
        CHECK(cd.d[ui] == 1);
      else
        CHECK(mpq_class(cd.d[ui]) == cd.r[ui] * cd.mu[ui]);
    }
  }
}

TEST_CASE("twist orders and named small cases") {
  const CartanData a1 = build_cartan("A1~1");
  CHECK(a1.C == std::vector<std::vector<int>>{{2, -2}, {-2, 2}});
  CHECK(a1.r == std::vector<mpq_class>{1, 1});
  CHECK(a1.d[1] == 1);
  CHECK(a1.twist_order == 1);
  const CartanData a22 = build_cartan("A2~2");
  CHECK(a22.mu[1] == 2);
  CHECK(a22.twist_order == 2);
  CHECK(build_cartan("D4~3").twist_order == 3);
  CHECK(build_cartan("E6~2").twist_order == 2);
  CHECK_THROWS(build_cartan("B2~1"));
  CHECK_THROWS(build_cartan("E9~1"));
  CHECK_THROWS(build_cartan("D4~4"));
}

TEST_CASE("finite Cartan determinants match the finite types") {
  CHECK(det(build_cartan("A3~1").finite_C) == 4);
  CHECK(det(build_cartan("A5~1").finite_C) == 6);
  CHECK(det(build_cartan("B4~1").finite_C) == 2);
  CHECK(det(build_cartan("C3~1").finite_C) == 2);
  CHECK(det(build_cartan("D5~1").finite_C) == 4);
  CHECK(det(build_cartan("E6~1").finite_C) == 3);
  CHECK(det(build_cartan("E7~1").finite_C) == 2);
  CHECK(det(build_cartan("E8~1").finite_C) == 1);
  CHECK(det(build_cartan("F4~1").finite_C) == 1);
  CHECK(det(build_cartan("G2~1").finite_C) == 1);
}

TEST_CASE("the weight of A_{i,a} is the simple root alpha_i") {
  for (const auto& name : kTypes) {
    CAPTURE(name);
    const CartanData cd = build_cartan(name);
    for (int i = 1; i <= cd.n; ++i)
      for (long l : {0L, 2L, 6L}) {
        CAPTURE(i, l);
        CHECK(weight_of(a_monomial(cd, i, SpectralParam(l)), cd) == cd.alpha(i));
      }
  }
}

TEST_CASE("weight_leq is a partial order") {
  const CartanData cd = build_cartan("A2~1");
  CHECK(weight_leq({1, 0}, {1, 0}, cd));
  const Weight l = {1, 1};
  Weight lm = l;
  for (std::size_t j = 0; j < 2; ++j) lm[j] -= cd.alpha(1)[j];
  CHECK(weight_leq(lm, l, cd));
  CHECK_FALSE(weight_leq(l, lm, cd));
  const CartanData s = build_cartan("A1~1");
  CHECK_FALSE(weight_leq({1}, {-1}, s));
  CHECK(weight_leq({-1}, {1}, s));
  CHECK_FALSE(weight_leq({0}, {1}, s));

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<Weight> ws;
  for (int t = 0; t < 40; ++t) ws.push_back({d(rng), d(rng)});
  for (const auto& a : ws)
    for (const auto& b : ws) {
      if (weight_leq(a, b, cd) && weight_leq(b, a, cd)) CHECK(a == b);
      for (const auto& c : ws)
        if (weight_leq(a, b, cd) && weight_leq(b, c, cd)) CHECK(weight_leq(a, c, cd));
    }
}
