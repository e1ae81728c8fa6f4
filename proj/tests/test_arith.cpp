#include <catch_amalgamated.hpp>

#include <random>

#include "qcyc/arith/frac.hpp"
#include "qcyc/arith/modp.hpp"
#include "qcyc/arith/qfunc.hpp"

using namespace qcyc;

namespace {

ZPoly zp(std::initializer_list<int> c) {
  std::vector<mpz_class> v;
  for (int x : c) v.emplace_back(x);
  return ZPoly(v);
}

QFunc random_qfunc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3);
  auto poly = [&] {
    std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return ZPoly(c);
  };
  ZPoly den = poly();
  while (den.is_zero()) den = poly();
  return QFunc(poly(), den);
}

// Points where no random denominator above can vanish is not guaranteed;
// callers skip points that are poles.
const std::vector<mpq_class> kPoints = {mpq_class(7, 3), mpq_class(-11, 5), mpq_class(13), mpq_class(2, 17)};

bool has_pole(const QFunc& f, const mpq_class& x) { return sgn(f.den().eval_in(x, [](const mpz_class& c) { return mpq_class(c); })) == 0; }

}  // namespace

TEST_CASE("QFunc representation is canonical") {
  // (2 + 2q) / (4q^2 - 4) = 1 / (2q - 2)
  const QFunc f(zp({2, 2}), zp({-4, 0, 4}));
  const QFunc g(zp({1}), zp({-2, 2}));
  CHECK(f == g);
  CHECK(f.num().degree() == 0);
  CHECK(QFunc(zp({-3}), zp({6})) == QFunc(mpq_class(-1, 2)));
  CHECK(QFunc(zp({}), zp({5})).is_zero());
}

TEST_CASE("QFunc field axioms agree with evaluation at rational points") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const QFunc a = random_qfunc(rng), b = random_qfunc(rng), c = random_qfunc(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QFunc(0));
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    for (const auto& x : kPoints) {
      if (has_pole(a, x) || has_pole(b, x)) continue;
      const mpq_class ax = a.eval(x), bx = b.eval(x);
      CHECK((a + b).eval(x) == ax + bx);
      CHECK((a * b).eval(x) == ax * bx);
      if (!b.is_zero() && sgn(bx) != 0) CHECK((a / b).eval(x) == ax / bx);
    }
  }
}

TEST_CASE("q-integers, factorials and binomials") {
  const mpq_class x(3);
  for (int n = -5; n <= 6; ++n) {
    mpq_class pn = 1, mn = 1;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) pn *= x, mn /= x;
    if (n < 0) std::swap(pn, mn);
    CHECK(QFunc::q_integer(n).eval(x) == (pn - mn) / (x - 1 / x));
  }
  CHECK(QFunc::q_integer(0).is_zero());
  CHECK(QFunc::q_integer(1).is_one());
  CHECK(QFunc::q_factorial(0).is_one());
  // q-Pascal: [n k] = q^{-k}[n-1 k] + q^{n-k}[n-1 k-1]
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(QFunc::q_binomial(n, k) ==
            QFunc::q_power(-k) * QFunc::q_binomial(n - 1, k) + QFunc::q_power(n - k) * QFunc::q_binomial(n - 1, k - 1));
  CHECK(QFunc::q_binomial(4, 2).eval(mpq_class(1)) == 6);
}

TEST_CASE("q-integers specialize to ordinary integers at q = 1") {
  for (int n = 1; n <= 8; ++n) CHECK(QFunc::q_integer(n).eval(mpq_class(1)) == n);
}

TEST_CASE("Q(q)(z) arithmetic commutes with evaluation at z") {
  std::mt19937_64 rng(11);
  const ZFunc z = ZFunc::x();
  for (int t = 0; t < 60; ++t) {
    const ZFunc a = ZFunc(random_qfunc(rng)) * z + ZFunc(random_qfunc(rng));
    ZFunc b = ZFunc(random_qfunc(rng)) * z * z + ZFunc(1);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    const QFunc c = QFunc::q_power(2) + QFunc(3);
    CHECK((a * b).eval(c) == a.eval(c) * b.eval(c));
    CHECK((a + b).eval(c) == a.eval(c) + b.eval(c));
  }
  CHECK((z * z.inverse()) == ZFunc(1));
  CHECK(ZFunc::x_power(-2) * ZFunc::x_power(2) == ZFunc(1));
}

TEST_CASE("Q(q)(z)(w) basic identities") {
  const ZWFunc w = ZWFunc::x();
  const ZWFunc z(ZFunc::x());
  CHECK((z * w) / w == z);
  CHECK((z + w) * (z - w) == z * z - w * w);
}

TEST_CASE("F_p arithmetic and specialization") {
  const Fp a = Fp::raw(123456789012345ULL), b = Fp::raw(987654321098ULL);
  CHECK(a * a.inverse() == Fp(1));
  CHECK((a + b) - b == a);
  CHECK(Fp(-1) + Fp(1) == Fp(0));
  CHECK(Fp::from_mpz(mpz_class(-3)) == Fp(-3));
  const Fp q0 = Fp(5);
  const QFunc f = QFunc::q_integer(3);  // q^2 + 1 + q^-2
  CHECK(*specialize(f, q0) == Fp(25) + Fp(1) + Fp(25).inverse());
  const QFunc g = QFunc(1) / (QFunc::q() - QFunc(5));
  CHECK_FALSE(specialize(g, q0).has_value());
}
