#include <catch_amalgamated.hpp>

#include "qcyc/cartan.hpp"
#include "qcyc/qchar.hpp"

using namespace qcyc;

namespace {

Monomial Y(long l, int e = 1) { return Monomial::sl2(l, e); }

QCharacter chi(std::initializer_list<Monomial> ms) {
  QCharacter c;
  for (const auto& m : ms) c.add(m, 1);
  return c;
}

}  // namespace

TEST_CASE("ring operations on q-characters") {
  const QCharacter v = chi({Y(0), Y(2, -1)});
  CHECK(v * QCharacter(Monomial()) == v);
  CHECK((v * v).dimension() == 4);
  CHECK((v * v).multiplicity(Monomial()) == 0);
  CHECK((v * v).multiplicity(Y(0) * Y(2, -1)) == 2);
  const QCharacter w = chi({Y(4), Y(6, -1)});
  CHECK((v * w).dimension() == v.dimension() * w.dimension());
  CHECK(v + v == v.scaled(2));
  CHECK((v + v.scaled(-1)).is_zero());
}

TEST_CASE("highest monomial") {
  const CartanData cd = build_cartan("A1~1");
  CHECK(highest_monomial(chi({Y(0), Y(2, -1)}), cd) == Y(0));
  CHECK(highest_monomial(QCharacter(Y(3) * Y(5)), cd) == Y(3) * Y(5));
  CHECK_THROWS(highest_monomial(chi({Y(0), Y(2)}), cd));
}

TEST_CASE("sl2 fundamental q-character") {
  const CartanData cd = build_cartan("A1~1");
  const QCharacter f = fm_fundamental(cd, 1, SpectralParam(0));
  CHECK(f == chi({Y(0), Y(2, -1)}));
  CHECK(f.str() == "Y[1;0] + Y[1;2]^-1");
  CHECK(fm_fundamental(cd, 1, SpectralParam(6)) == chi({Y(6), Y(8, -1)}));
}

TEST_CASE("A2 fundamental q-character") {
  const CartanData cd = build_cartan("A2~1");
  const QCharacter f = fm_fundamental(cd, 1, SpectralParam(0));
  const QCharacter expect = chi({Monomial::Y(1, 0), Monomial::Y(1, 2, -1) * Monomial::Y(2, 1), Monomial::Y(2, 3, -1)});
  CHECK(f == expect);
  // Successive quotients are single A^{-1} factors.
  CHECK(Monomial::Y(1, 2, -1) * Monomial::Y(2, 1) == Monomial::Y(1, 0) * a_monomial(cd, 1, SpectralParam(1)).inv());
  CHECK(Monomial::Y(2, 3, -1) ==
        Monomial::Y(1, 2, -1) * Monomial::Y(2, 1) * a_monomial(cd, 2, SpectralParam(2)).inv());
}

TEST_CASE("fundamental q-characters have the dimensions of the fundamental modules") {
  struct Case {
    std::string type;
    int i;
    long long dim;
  };
  // Kirillov-Reshetikhin modules W^{(i)}_1 restricted to the finite algebra.
  const std::vector<Case> cases = {
      {"A1~1", 1, 2}, {"A2~1", 1, 3}, {"A2~1", 2, 3}, {"A3~1", 1, 4}, {"A3~1", 2, 6}, {"A3~1", 3, 4},
      {"A4~1", 2, 10}, {"B3~1", 1, 7}, {"B3~1", 2, 22}, {"B3~1", 3, 8}, {"C2~1", 1, 4}, {"C2~1", 2, 5},
      {"C3~1", 1, 6}, {"D4~1", 1, 8}, {"D4~1", 2, 29}, {"D4~1", 3, 8}, {"D4~1", 4, 8}, {"G2~1", 1, 15},
      {"G2~1", 2, 7}};
  for (const auto& c : cases) {
    CAPTURE(c.type, c.i);
    const CartanData cd = build_cartan(c.type);
    const SpectralParam a(0);
    const QCharacter f = fm_fundamental(cd, c.i, a);
    CHECK(f.dimension() == c.dim);
    const Monomial top = Monomial::Y(c.i, a);
    CHECK(f.multiplicity(top) == 1);
    CHECK(highest_monomial(f, cd) == top);
    for (const auto& [m, mult] : f.terms()) {
      CHECK(mult > 0);
      CHECK(in_A_inverse_cone(m, top, cd));
      if (!(m == top) && c.type[0] == 'A') CHECK_FALSE(m.dominant());
    }
    // The second term is top * A^{-1}_{i, a q^{r_i}}.
    const long ri = cd.r[static_cast<std::size_t>(c.i)].get_num().get_si();
    CHECK(f.multiplicity(top * a_monomial(cd, c.i, SpectralParam(ri)).inv()) == 1);
  }
}

TEST_CASE("fundamental q-characters shift with the spectral parameter") {
  const CartanData cd = build_cartan("B3~1");
  const QCharacter f0 = fm_fundamental(cd, 1, SpectralParam(0)), f4 = fm_fundamental(cd, 1, SpectralParam(4));
  QCharacter shifted;
  for (const auto& [m, c] : f0.terms()) shifted.add(m.shifted(4), c);
  CHECK(shifted == f4);
  CHECK_THROWS(fm_fundamental(build_cartan("A2~2"), 1, SpectralParam(0)));
}

TEST_CASE("A-inverse cone membership") {
  const CartanData cd = build_cartan("A1~1");
  std::map<std::pair<int, SpectralParam>, int> e;
  CHECK(in_A_inverse_cone(Y(2, -1), Y(0), cd, &e));
  CHECK(e == std::map<std::pair<int, SpectralParam>, int>{{{1, SpectralParam(1)}, 1}});
  CHECK_FALSE(in_A_inverse_cone(Y(0) * Y(2), Y(0), cd));
  CHECK_FALSE(in_A_inverse_cone(Y(2), Y(0), cd));
  CHECK(in_A_inverse_cone(Y(0), Y(0), cd));
}

TEST_CASE("sl2 string decomposition") {
  CHECK(string_decompose(Y(0) * Y(2)) == std::vector<QString>{{SpectralParam(0), 2}});
  CHECK(string_decompose(Y(0) * Y(4)) == std::vector<QString>{{SpectralParam(0), 1}, {SpectralParam(4), 1}});
  CHECK(string_decompose(Y(0) * Y(2) * Y(4, 2)) == std::vector<QString>{{SpectralParam(0), 3}, {SpectralParam(4), 1}});
  CHECK(string_decompose(Monomial()).empty());
  CHECK_THROWS(string_decompose(Y(0, -1)));
  // No two strings of a decomposition are in special position.
  for (const Monomial& M : {Y(0) * Y(2) * Y(4, 2), Y(0, 2) * Y(2), Y(0) * Y(4) * Y(8, 2) * Y(6)}) {
    const auto s = string_decompose(M);
    Monomial prod;
    for (const auto& x : s) {
      for (int k = 0; k < x.length; ++k) prod *= Monomial::Y(1, x.start.shifted(2L * k));
      for (const auto& y : s) CHECK_FALSE(special_position(x, y));
    }
    CHECK(prod == M);
  }
  CHECK(special_position({SpectralParam(0), 1}, {SpectralParam(2), 1}));
  CHECK(special_position({SpectralParam(0), 2}, {SpectralParam(2), 2}));
  CHECK_FALSE(special_position({SpectralParam(0), 3}, {SpectralParam(2), 1}));
  CHECK_FALSE(special_position({SpectralParam(0), 1}, {SpectralParam(4), 1}));
  CHECK_FALSE(special_position({SpectralParam(0), 1}, {SpectralParam(1), 1}));
}

TEST_CASE("sl2 simple q-characters") {
  CHECK(sl2_simple_qchar(Y(0)) == chi({Y(0), Y(2, -1)}));
  CHECK(sl2_simple_qchar(Y(0) * Y(2)) == chi({Y(0) * Y(2), Y(0) * Y(4, -1), Y(2, -1) * Y(4, -1)}));
  CHECK(sl2_simple_qchar(Monomial()) == QCharacter(Monomial()));
  const CartanData cd = build_cartan("A1~1");
  for (const Monomial& M : {Y(0) * Y(2) * Y(4, 2), Y(0, 2) * Y(4), Y(0) * Y(2) * Y(4)}) {
    const QCharacter c = sl2_simple_qchar(M);
    long long d = 1;
    for (const auto& s : string_decompose(M)) d *= s.length + 1;
    CHECK(c.dimension() == d);
    CHECK(highest_monomial(c, cd) == M);
    for (const auto& [m, mult] : c.terms()) CHECK(in_A_inverse_cone(m, M, cd));
  }
}

TEST_CASE("upper truncation and the truncation identity") {
  const Monomial M = Y(0) * Y(2);
  CHECK(truncate_upper(sl2_simple_qchar(M), M, 1) == chi({Y(0) * Y(2), Y(0) * Y(4, -1)}));
  CHECK(truncate_upper(QCharacter(M), M, 5) == QCharacter(M));
  CHECK(truncate_upper(sl2_simple_qchar(M), M, 0) == sl2_simple_qchar(M));
  CHECK(verify_useqt(M, 1));
  CHECK(verify_useqt(M, 0));
  CHECK(verify_useqt(Y(0) * Y(2) * Y(4, 2), 1));
  CHECK(verify_useqt(Y(0) * Y(2) * Y(4, 2), 3));
  CHECK_THROWS(truncate_upper(chi({Y(0), Monomial::Y(1, SpectralParam(0, 0, "b"))}), Y(0), 1));
}
