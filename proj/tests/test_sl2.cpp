#include <catch_amalgamated.hpp>

#include <algorithm>

#include "qcyc/cartan.hpp"
#include "qcyc/desk.hpp"
#include "qcyc/qchar.hpp"
#include "qcyc/sl2/engine.hpp"

using namespace qcyc;

namespace {

Monomial Y(long l, int e = 1) { return Monomial::sl2(l, e); }

std::vector<int> sorted_weights(const Rep<QFunc>& r) {
  std::vector<int> w = r.wt;
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<int> character_weights(const QCharacter& c) {
  const CartanData cd = build_cartan("A1~1");
  std::vector<int> w;
  for (const auto& [m, mult] : c.terms())
    for (long long k = 0; k < mult; ++k) w.push_back(static_cast<int>(weight_of(m, cd)[0]));
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

TEST_CASE("evaluation modules") {
  const Rep<QFunc> v = eval_module(0);
  CHECK(v.dim == 2);
  CHECK(sorted_weights(v) == std::vector<int>{-1, 1});
  CHECK(v.wt[static_cast<std::size_t>(v.hw)] == 1);
  CHECK(sorted_weights(v) == character_weights(sl2_simple_qchar(Y(0))));
  for (long l : {0L, 2L, 5L, -3L}) {
    CAPTURE(l);
    const auto rep = verify_relations(eval_module(l));
    CHECK(rep.ok);
    CHECK(verify_relations(twist_rep(eval_module(l))).ok);
  }
  CHECK(eval_sign() == 1);
}

TEST_CASE("perturbed generator matrices violate the relations") {
  Rep<QFunc> v = tensor(eval_module(0), eval_module(2));
  REQUIRE(verify_relations(v).ok);
  Rep<QFunc> bad = v;
  bad.e1 = bad.e1.scaled(QFunc(2));
  CHECK_FALSE(verify_relations(bad).ok);
  bad = v;
  bad.e0 = bad.e0.scaled(QFunc::q());
  CHECK_FALSE(verify_relations(bad).ok);
  bad = v;
  bad.f0.add(0, 3, QFunc(1));
  CHECK_FALSE(verify_relations(bad).ok);
}

TEST_CASE("cyclic spans of highest weight vectors") {
  const Rep<QFunc> a = tensor(eval_module(2), eval_module(0)), b = tensor(eval_module(0), eval_module(2));
  CHECK(cyclic_span(a, basis_vector<QFunc>(4, a.hw)).dim == 4);
  CHECK(cyclic_span(b, basis_vector<QFunc>(4, b.hw)).dim == 3);
  CHECK(cyclic_span(b, Vec<QFunc>(4, QFunc(0))).dim == 0);
  CHECK(is_cyclic(a));
  CHECK_FALSE(is_cyclic(b));
  const auto s = cyclic_span(b, basis_vector<QFunc>(4, b.hw));
  const Rep<QFunc> sub = restrict_to(b, s);
  CHECK(sub.dim == 3);
  CHECK(verify_relations(sub).ok);
  CHECK(sorted_weights(sub) == character_weights(sl2_simple_qchar(Y(0) * Y(2))));
}

TEST_CASE("simplicity of V(a) (x) V(b) depends on b/a") {
  CHECK_FALSE(is_simple_tensor(eval_module(0), eval_module(2)));
  CHECK_FALSE(is_simple_tensor(eval_module(4), eval_module(2)));
  CHECK(is_simple_tensor(eval_module(0), eval_module(4)));
  CHECK(is_simple_tensor(eval_module(0), eval_module(0)));
  CHECK(is_simple_tensor(eval_module(0), eval_module(1)));
  CHECK(is_simple_tensor(simple_module(Y(0) * Y(2)), eval_module(6)));
  CHECK_FALSE(is_simple_tensor(simple_module(Y(0) * Y(2)), eval_module(4)));
}

TEST_CASE("simple modules match their q-characters") {
  CHECK(simple_module(Monomial()).dim == 1);
  CHECK(simple_module(Y(0) * Y(2)).dim == 3);
  CHECK(simple_module(Y(0) * Y(4)).dim == 4);
  CHECK(simple_module(Y(0) * Y(2) * Y(4, 2)).dim == 8);
  CHECK(sl2_parameters(Y(4) * Y(0, 2)) == std::vector<long>{0, 0, 4});
  CHECK_THROWS(sl2_parameters(Y(0, -1)));
  for (const Monomial& M : desk_monomials()) {
    CAPTURE(M.str());
    const Realized r = realize_simple(M);
    CHECK(verify_relations(r.module).ok);
    CHECK(is_cyclic(r.module));
    CHECK(sorted_weights(r.module) == character_weights(sl2_simple_qchar(M)));
    CHECK(r.embed.rows() == static_cast<std::size_t>(r.ambient.dim));
    CHECK(r.embed.cols() == static_cast<std::size_t>(r.module.dim));
  }
}

TEST_CASE("cyclicity of tensor products of simples") {
  CHECK(is_cyclic_tensor({Y(2), Y(0)}));
  CHECK_FALSE(is_cyclic_tensor({Y(0), Y(2)}));
  CHECK(is_cyclic_tensor({Y(4), Y(2), Y(0)}));
  CHECK_FALSE(is_cyclic_tensor({Y(2), Y(0), Y(4)}));
  CHECK(is_cyclic_tensor({Y(2) * Y(4), Y(0) * Y(2)}));
}

TEST_CASE("certified cyclicity agrees with the exact computation") {
  const std::vector<Monomial> ms = {Y(0), Y(2), Y(4), Y(0) * Y(2), Y(2) * Y(4), Y(0, 2), Y(0) * Y(4)};
  for (const auto& a : ms)
    for (const auto& b : ms) {
      CAPTURE(a.str(), b.str());
      const Rep<QFunc> t = tensor(simple_module(a), simple_module(b));
      CHECK(is_cyclic_certified(t) == is_cyclic(t));
    }
  const auto sp = specialize(eval_module(2), Fp(1000003));
  REQUIRE(sp.has_value());
  CHECK(sp->dim == 2);
  CHECK(sp->wt == eval_module(2).wt);
}
