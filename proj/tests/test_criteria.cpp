#include <catch_amalgamated.hpp>

#include <atomic>

#include "qcyc/cartan.hpp"
#include "qcyc/criteria.hpp"
#include "qcyc/desk.hpp"
#include "qcyc/sl2/engine.hpp"

using namespace qcyc;

namespace {

Monomial Y(long l, int e = 1) { return Monomial::sl2(l, e); }
Fundamental F(long l, const std::string& orbit = "c") { return Fundamental{1, SpectralParam(l, 0, orbit)}; }
const CartanData& sl2() {
  static const CartanData cd = build_cartan("A1~1");
  return cd;
}

}  // namespace

TEST_CASE("ordering condition on fundamental lists") {
  CHECK(fundamental_order_ok({F(0), F(2)}, sl2()));
  CHECK_FALSE(fundamental_order_ok({F(2), F(0)}, sl2()));
  CHECK(fundamental_order_ok({F(2, "b"), F(0)}, sl2()));
  CHECK(fundamental_order_ok({F(0), F(0)}, sl2()));
  CHECK(fundamental_order_ok({}, sl2()));
}

TEST_CASE("ordering condition implies cyclicity on short sl2 lists") {
  const std::vector<long> ls = {0, 1, 2, 4};
  std::size_t passing = 0;
  for (long a : ls)
    for (long b : ls) {
      const FundamentalList two = {F(a), F(b)};
      if (fundamental_order_ok(two, sl2())) {
        ++passing;
        CHECK(oracle_cyclic(two));
      }
      for (long c : ls) {
        const FundamentalList three = {F(a), F(b), F(c)};
        if (fundamental_order_ok(three, sl2())) {
          ++passing;
          CHECK(oracle_cyclic(three));
        }
      }
    }
  CHECK(passing > 20);
  // The reversed ratio q^{-2} is the obstruction.
  CHECK_FALSE(oracle_cyclic({F(2), F(0)}));
}

TEST_CASE("admissible factorizations") {
  CHECK(admissible_factorization(Y(0) * Y(2), sl2()) == FundamentalList{F(0), F(2)});
  CHECK(admissible_factorization(Y(0, 2), sl2()) == FundamentalList{F(0), F(0)});
  CHECK(admissible_factorization(Y(2) * Y(4, 2), sl2()) == FundamentalList{F(2), F(4), F(4)});
  CHECK(admissible_factorization(Monomial(), sl2()).empty());
  for (const Monomial& M : desk_monomials()) {
    const FundamentalList fl = admissible_factorization(M, sl2());
    CHECK(product(fl) == M);
    CHECK(fundamental_order_ok(fl, sl2()));
    if (fl.size() <= 4) CHECK(oracle_cyclic(fl));
  }
  const CartanData b3 = build_cartan("B3~1");
  const Monomial M = Monomial::Y(1, 4) * Monomial::Y(2, 0) * Monomial::Y(3, SpectralParam(1, 0, "b"));
  const FundamentalList fl = admissible_factorization(M, b3);
  CHECK(product(fl) == M);
  CHECK(fundamental_order_ok(fl, b3));
}

TEST_CASE("pairwise sufficient condition") {
  CHECK(pairwise_cyclic_sufficient(Y(2), Y(0), sl2()));
  CHECK_FALSE(pairwise_cyclic_sufficient(Y(0), Y(2), sl2()));
  CHECK_FALSE(pairwise_cyclic_sufficient(Y(0) * Y(2), Y(2), sl2()));
  CHECK(pairwise_cyclic_sufficient(Y(0), Monomial::Y(1, SpectralParam(4, 0, "b")), sl2()));
  const std::vector<Monomial> ms = {Y(0), Y(2), Y(4), Y(0) * Y(2), Y(2) * Y(4), Y(0) * Y(4), Y(2, 2)};
  for (const auto& a : ms)
    for (const auto& b : ms)
      if (pairwise_cyclic_sufficient(a, b, sl2())) {
        CAPTURE(a.str(), b.str());
        CHECK(is_cyclic_tensor({a, b}));
      }
}

TEST_CASE("pairwise to global inference") {
  auto yes = [](std::size_t, std::size_t) { return true; };
  const std::vector<Monomial> three = {Y(4), Y(2), Y(0)};
  const CyclicVerdict v = maincyc_conclude(three, yes, "test");
  CHECK(v.status == Verdict::Cyclic);
  CHECK(v.pairs.size() == 3);
  CHECK(v.failing().empty());
  CHECK(maincyc_conclude({Y(0)}, yes, "test").status == Verdict::Cyclic);
  auto no12 = [](std::size_t i, std::size_t j) { return !(i == 1 && j == 2); };
  const CyclicVerdict w = maincyc_conclude(three, no12, "test");
  CHECK(w.status == Verdict::Inconclusive);
  REQUIRE(w.failing().size() == 1);
  CHECK(w.failing()[0].i == 1);
  CHECK(w.failing()[0].j == 2);
  CHECK(std::string(to_string(Verdict::Inconclusive)) == "Inconclusive");
}

TEST_CASE("pairwise inference is backend independent") {
  const std::vector<Monomial> ms = {Y(4), Y(2) * Y(4), Y(2), Y(0), Y(0) * Y(2)};
  auto oracle = [&ms](std::size_t i, std::size_t j) { return is_cyclic_tensor({ms[i], ms[j]}); };
  const CyclicVerdict s = maincyc_conclude(ms, oracle, "oracle", Backend::Serial);
  const CyclicVerdict p = maincyc_conclude(ms, oracle, "oracle", Backend::OpenMP);
  CHECK(s.status == p.status);
  REQUIRE(s.pairs.size() == p.pairs.size());
  for (std::size_t k = 0; k < s.pairs.size(); ++k) {
    CHECK(s.pairs[k].i == p.pairs[k].i);
    CHECK(s.pairs[k].j == p.pairs[k].j);
    CHECK(s.pairs[k].result == p.pairs[k].result);
  }
  if (s.status == Verdict::Cyclic) CHECK(is_cyclic_tensor(ms));
}

TEST_CASE("oracle exceptions propagate out of parallel regions") {
  auto boom = [](std::size_t i, std::size_t) -> bool {
    if (i == 1) throw std::runtime_error("boom");
    return true;
  };
  CHECK_THROWS_AS(maincyc_conclude({Y(0), Y(2), Y(4)}, boom, "x", Backend::OpenMP), std::runtime_error);
}
