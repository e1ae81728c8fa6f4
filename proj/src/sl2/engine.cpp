#include "qcyc/sl2/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcyc/qchar.hpp"

namespace qcyc {

template struct Rep<QFunc>;
template struct Rep<ZFunc>;

Rep<QFunc> eval_module_signed(long l, int s) {
  Rep<QFunc> r;
  r.dim = 2;
  r.wt = {1, -1};
  r.hw = 0;
  const QFunc lam = QFunc::q_power(s * l);
  r.e1 = SparseMat<QFunc>(2);
  r.e1.add(0, 1, QFunc(1));
  r.f1 = SparseMat<QFunc>(2);
  r.f1.add(1, 0, QFunc(1));
  r.e0 = SparseMat<QFunc>(2);
  r.e0.add(1, 0, lam);
  r.f0 = SparseMat<QFunc>(2);
  r.f0.add(0, 1, lam.inverse());
  return r;
}

int eval_sign() {
  static const int s = [] {
    for (int s : {1, -1}) {
      const bool a = is_cyclic(tensor(eval_module_signed(2, s), eval_module_signed(0, s)));
      const bool b = is_cyclic(tensor(eval_module_signed(0, s), eval_module_signed(2, s)));
      if (a && !b) return s;
    }
    throw std::logic_error("eval_sign: no calibration of V(a) matches");
  }();
  return s;
}

Rep<QFunc> eval_module(long l) { return eval_module_signed(l, eval_sign()); }

Rep<QFunc> fundamental_tensor(const std::vector<long>& ls) {
  std::vector<Rep<QFunc>> f;
  f.reserve(ls.size());
  for (long l : ls) f.push_back(eval_module(l));
  return tensor_all(f);
}

std::vector<long> sl2_parameters(const Monomial& M) {
  if (!M.dominant()) throw std::invalid_argument("sl2 monomial is not dominant");
  if (!M.single_orbit()) throw std::invalid_argument("sl2 monomial spans several orbits");
  std::vector<long> ls;
  for (const auto& [k, e] : M.exps()) {
    if (k.i != 1) throw std::invalid_argument("not an sl2 monomial: node " + std::to_string(k.i));
    if (k.a.k != 0) throw std::invalid_argument("not an sl2 monomial: eps power");
    for (int t = 0; t < e; ++t) ls.push_back(k.a.l);
  }
  std::sort(ls.begin(), ls.end());
  return ls;
}

Realized realize_simple(const Monomial& M) {
  Realized out;
  out.ambient = fundamental_tensor(sl2_parameters(M));
  const Span<QFunc> s = cyclic_span(out.ambient, basis_vector<QFunc>(out.ambient.dim, out.ambient.hw));
  const long long expect = sl2_simple_qchar(M).dimension();
  if (static_cast<long long>(s.dim) != expect)
    throw std::logic_error("realize_simple: span dimension " + std::to_string(s.dim) + " differs from q-character dimension " +
                           std::to_string(expect) + " for " + M.str());
  out.module = restrict_to(out.ambient, s);
  WeightIndex wi(out.ambient);
  out.embed = Matrix<QFunc>(static_cast<std::size_t>(out.ambient.dim), s.dim);
  for (std::size_t n = 0; n < s.order.size(); ++n) {
    const auto [w, j] = s.order[n];
    const Vec<QFunc>& u = s.spaces.at(w).vector(j);
    const auto& mem = wi.members.at(w);
    for (std::size_t p = 0; p < u.size(); ++p) out.embed(static_cast<std::size_t>(mem[p]), n) = u[p];
  }
  return out;
}

Rep<QFunc> simple_module(const Monomial& M) {
  if (M.is_one()) return trivial_rep<QFunc>();
  return realize_simple(M).module;
}

bool is_simple_tensor(const Rep<QFunc>& w, const Rep<QFunc>& w2) { return is_cyclic(tensor(w, w2)) && is_cyclic(tensor(w2, w)); }

bool is_cyclic_tensor(const std::vector<Monomial>& factors) {
  std::vector<Rep<QFunc>> reps;
  for (const auto& m : factors) reps.push_back(simple_module(m));
  return is_cyclic(tensor_all(reps));
}

std::optional<Rep<Fp>> specialize(const Rep<QFunc>& r, const Fp& q0) {
  Rep<Fp> out;
  out.dim = r.dim;
  out.wt = r.wt;
  out.hw = r.hw;
  for (Gen g : kGens) {
    SparseMat<Fp> m(r.dim);
    for (int c = 0; c < r.dim; ++c)
      for (const auto& [row, v] : r.gen(g).col(c)) {
        auto x = specialize(v, q0);
        if (!x) return std::nullopt;
        if (!x->is_zero()) m.mutable_col(c).emplace_back(row, *x);
      }
    out.gen(g) = std::move(m);
  }
  return out;
}

bool is_cyclic_certified(const Rep<QFunc>& r) {
  for (std::uint64_t q0 : {1000003ULL, 982451653ULL}) {
    auto s = specialize(r, Fp::raw(q0));
    if (s && is_cyclic(*s)) return true;
  }
  return is_cyclic(r);
}

}  // namespace qcyc
