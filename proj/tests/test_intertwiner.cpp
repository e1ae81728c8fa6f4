#include <catch_amalgamated.hpp>

#include "qcyc/intertwiner.hpp"
#include "qcyc/sl2/engine.hpp"

using namespace qcyc;

namespace {

Monomial Y(long l, int e = 1) { return Monomial::sl2(l, e); }

Rep<ZFunc> lift(const Rep<QFunc>& r) {
  return lift_rep<ZFunc>(r, [](const QFunc& x) { return ZFunc(x); });
}

ZFunc poly_z(std::initializer_list<int> c) {
  ZFunc f, p(1);
  for (int x : c) {
    f += p * ZFunc(x);
    p *= ZFunc::x();
  }
  return f;
}

}  // namespace

TEST_CASE("twisting by z and specializing back at z = 1") {
  const Rep<QFunc> r = simple_module(Y(0) * Y(2));
  const Rep<ZFunc> t = twist_rep(r);
  CHECK(verify_relations(t).ok);
  for (Gen g : kGens)
    CHECK(t.gen(g).map([](const ZFunc& f) { return f.eval(QFunc(1)); }).dense() == r.gen(g).dense());
  const Rep<ZFunc> back = twisted(t, ZFunc::x().inverse());
  for (Gen g : kGens) CHECK(back.gen(g).dense() == lift(r).gen(g).dense());
}

TEST_CASE("solve_T agrees with the brute-force nullspace") {
  const std::vector<std::pair<Rep<QFunc>, Rep<QFunc>>> cases = {
      {eval_module(2), eval_module(0)},
      {eval_module(0), eval_module(2)},
      {eval_module(0), eval_module(4)},
      {eval_module(0), eval_module(0)},
      {simple_module(Y(0) * Y(2)), eval_module(4)},
      {eval_module(6), simple_module(Y(2) * Y(4))},
  };
  for (std::size_t k = 0; k < cases.size(); ++k) {
    CAPTURE(k);
    const auto& [w, w2] = cases[k];
    const TMatrix t = solve_T(w, w2);
    const BruteForceT b = solve_T_bruteforce(w, w2);
    CHECK(b.solution_dim == 1);
    CHECK(t.T == b.T);
    CHECK(intertwines(t.T, tensor(lift(w), twist_rep(w2)), tensor(twist_rep(w2), lift(w))));
    // Normalized on the tensor product of highest weight vectors.
    CHECK(t.T(static_cast<std::size_t>(w2.hw * w.dim + w.hw), static_cast<std::size_t>(w.hw * w2.dim + w2.hw)) == ZFunc(1));
  }
}

TEST_CASE("a wrong matrix does not intertwine") {
  const Rep<QFunc> w = eval_module(2), w2 = eval_module(0);
  Matrix<ZFunc> T = solve_T(w, w2).T;
  T(1, 2) += ZFunc(1);
  CHECK_FALSE(intertwines(T, tensor(lift(w), twist_rep(w2)), tensor(twist_rep(w2), lift(w))));
}

TEST_CASE("intertwiner with the trivial module is the identity") {
  const Rep<QFunc> triv = trivial_rep<QFunc>();
  for (const Rep<QFunc>& w : {eval_module(0), simple_module(Y(0) * Y(2))}) {
    const std::size_t n = static_cast<std::size_t>(w.dim);
    CHECK(solve_T(triv, w).T == Matrix<ZFunc>::identity(n));
    CHECK(solve_T(w, triv).T == Matrix<ZFunc>::identity(n));
  }
}

TEST_CASE("inverse relation and hexagon on evaluation modules") {
  CHECK(check_inverse_relation(eval_module(2), eval_module(0)));
  CHECK(check_inverse_relation(eval_module(0), eval_module(4)));
  CHECK(check_inverse_relation(simple_module(Y(0) * Y(2)), eval_module(2)));
  CHECK(check_hexagon(eval_module(0), eval_module(2), eval_module(4)));
  CHECK(check_hexagon(eval_module(4), eval_module(0), eval_module(0)));
}

TEST_CASE("Laurent expansion at z = 1") {
  const ZFunc zm1 = poly_z({-1, 1});
  CHECK(valuation_at_1(zm1) == 1);
  CHECK(valuation_at_1(zm1.inverse()) == -1);
  CHECK(valuation_at_1(poly_z({3})) == 0);
  // (z - 1)^2 (z + 1) = 2 (z-1)^2 + (z-1)^3
  const ZFunc f = zm1 * zm1 * poly_z({1, 1});
  CHECK(valuation_at_1(f) == 2);
  CHECK(laurent_coefficient_at_1(f, 2) == QFunc(2));
  CHECK_THROWS_AS(laurent_coefficient_at_1(f, 3), std::domain_error);
  // z / (z - 1) = (z-1)^{-1} + 1
  const ZFunc g = ZFunc::x() / zm1;
  CHECK(laurent_coefficient_at_1(g, -1) == QFunc(1));
  CHECK_THROWS_AS(laurent_coefficient_at_1(g, 0), std::domain_error);
  // q-dependent coefficients: (q z - 1) / (z - 1) has residue q - 1.
  const ZFunc h = (ZFunc(QFunc::q()) * ZFunc::x() - ZFunc(1)) / zm1;
  CHECK(laurent_coefficient_at_1(h, -1) == QFunc::q() - QFunc(1));
  CHECK(substitute_inverse(substitute_inverse(h)) == h);
  CHECK(substitute_inverse(ZFunc::x()) == ZFunc::x().inverse());
  Matrix<ZFunc> m(1, 2);
  m(0, 0) = f;
  m(0, 1) = zm1 * zm1;
  CHECK(laurent_at_1(m, 2)(0, 1) == QFunc(1));
}

TEST_CASE("specialized intertwiners") {
  // V(q^2) (x) V(1) -> V(1) (x) V(q^2): rank 3, kernel the trivial module.
  const Matrix<QFunc> I = intertwiner_I(eval_module(2), eval_module(0));
  CHECK(rank(I, Backend::Serial) == 3);
  CHECK(kernel(I, Backend::Serial).size() == 1);
  // Simple tensor products give invertible intertwiners.
  CHECK(rank(intertwiner_I(eval_module(1), eval_module(0)), Backend::Serial) == 4);
  CHECK(rank(intertwiner_I(eval_module(0), eval_module(4)), Backend::Serial) == 4);
  // At the reducible point in the other order T has a pole at z = 1.
  CHECK_THROWS_AS(intertwiner_I(eval_module(0), eval_module(2)), std::domain_error);
}

TEST_CASE("first worked example") {
  const ExampleReport r = example_suite(1, Backend::Serial);
  for (const auto& c : r.checks) {
    CAPTURE(c.name, c.expected, c.got);
    CHECK(c.pass);
  }
  CHECK(r.pass());
}
