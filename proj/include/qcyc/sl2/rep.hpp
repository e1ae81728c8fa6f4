#pragma once

// Explicit finite-dimensional U_q(sl2^) modules over an exact field K.
//
// Basis vectors are weight vectors: k_1 acts by q^{wt[b]} and k_0 by
// q^{-wt[b]} (level zero).  x_1^+ raises wt by 2, x_0^+ lowers it by 2.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcyc/arith/frac.hpp"
#include "qcyc/arith/qfunc.hpp"
#include "qcyc/linalg/elim.hpp"
#include "qcyc/linalg/matrix.hpp"

namespace qcyc {

enum class Gen { E0, F0, E1, F1 };
inline constexpr Gen kGens[] = {Gen::E0, Gen::F0, Gen::E1, Gen::F1};

inline int weight_shift(Gen g) {
  switch (g) {
    case Gen::E1: return 2;
    case Gen::F1: return -2;
    case Gen::E0: return -2;
    case Gen::F0: return 2;
  }
  return 0;
}

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::E0: return "x0+";
    case Gen::F0: return "x0-";
    case Gen::E1: return "x1+";
    case Gen::F1: return "x1-";
  }
  return "?";
}

template <class K>
struct Rep {
  int dim = 0;
  std::vector<int> wt;
  SparseMat<K> e0, f0, e1, f1;
  int hw = 0;

  const SparseMat<K>& gen(Gen g) const {
    switch (g) {
      case Gen::E0: return e0;
      case Gen::F0: return f0;
      case Gen::E1: return e1;
      case Gen::F1: return f1;
    }
    return e0;
  }
  SparseMat<K>& gen(Gen g) { return const_cast<SparseMat<K>&>(static_cast<const Rep&>(*this).gen(g)); }

  // Exponent of q in the action of k_i on basis vector b.
  int k_exp(int i, int b) const { return i == 1 ? wt[static_cast<std::size_t>(b)] : -wt[static_cast<std::size_t>(b)]; }
};

template <class K>
Rep<K> trivial_rep() {
  Rep<K> r;
  r.dim = 1;
  r.wt = {0};
  r.e0 = r.f0 = r.e1 = r.f1 = SparseMat<K>(1);
  r.hw = 0;
  return r;
}

// Tensor product through Delta(x+) = x+ (x) 1 + k (x) x+,
// Delta(x-) = x- (x) k^{-1} + 1 (x) x-, Delta(k) = k (x) k.
// Basis index (a, b) -> a * dim(w2) + b.
template <class K>
Rep<K> tensor(const Rep<K>& w1, const Rep<K>& w2) {
  Rep<K> r;
  const int d1 = w1.dim, d2 = w2.dim;
  r.dim = d1 * d2;
  r.wt.resize(static_cast<std::size_t>(r.dim));
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b) r.wt[static_cast<std::size_t>(a * d2 + b)] = w1.wt[static_cast<std::size_t>(a)] + w2.wt[static_cast<std::size_t>(b)];
  r.hw = w1.hw * d2 + w2.hw;
  std::map<int, K> qp;
  auto qpow = [&qp](int n) -> const K& {
    auto it = qp.find(n);
    if (it == qp.end()) it = qp.emplace(n, q_power<K>(n)).first;
    return it->second;
  };
  for (Gen g : kGens) {
    const int node = (g == Gen::E1 || g == Gen::F1) ? 1 : 0;
    const bool plus = (g == Gen::E0 || g == Gen::E1);
    const SparseMat<K>& x1 = w1.gen(g);
    const SparseMat<K>& x2 = w2.gen(g);
    SparseMat<K> m(r.dim);
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < d2; ++b) {
        const int col = a * d2 + b;
        auto& out = m.mutable_col(col);
        for (const auto& [a2, v] : x1.col(a)) {
          if (plus) out.emplace_back(a2 * d2 + b, v);
          else out.emplace_back(a2 * d2 + b, v * qpow(-w2.k_exp(node, b)));
        }
        for (const auto& [b2, v] : x2.col(b)) {
          if (plus) out.emplace_back(a * d2 + b2, qpow(w1.k_exp(node, a)) * v);
          else out.emplace_back(a * d2 + b2, v);
        }
      }
    r.gen(g) = std::move(m);
  }
  return r;
}

template <class K>
Rep<K> tensor_all(const std::vector<Rep<K>>& factors) {
  if (factors.empty()) return trivial_rep<K>();
  Rep<K> r = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) r = tensor(factors[i], r);
  return r;
}

// Change of scalars along an embedding K -> K2.
template <class K2, class K, class F>
Rep<K2> lift_rep(const Rep<K>& r, F&& f) {
  Rep<K2> out;
  out.dim = r.dim;
  out.wt = r.wt;
  out.hw = r.hw;
  for (Gen g : kGens) out.gen(g) = r.gen(g).map(f);
  return out;
}

// The spectral twist x0+ -> z x0+, x0- -> z^{-1} x0-.
template <class K>
Rep<K> twisted(const Rep<K>& r, const K& z) {
  Rep<K> out = r;
  out.e0 = r.e0.scaled(z);
  out.f0 = r.f0.scaled(K(1) / z);
  return out;
}

inline Rep<ZFunc> twist_rep(const Rep<QFunc>& r) {
  return twisted(lift_rep<ZFunc>(r, [](const QFunc& x) { return ZFunc(x); }), ZFunc::x());
}

struct RelationReport {
  bool ok = true;
  std::string failed;  // first failing relation
};

template <class K>
SparseMat<K> diag_q_integer(const Rep<K>& r, int node) {
  SparseMat<K> d(r.dim);
  for (int b = 0; b < r.dim; ++b) d.add(b, b, from_q<K>(QFunc::q_integer(r.k_exp(node, b))));
  return d;
}

template <class K>
RelationReport verify_relations(const Rep<K>& r) {
  RelationReport rep;
  auto fail = [&rep](std::string what) {
    if (rep.ok) {
      rep.ok = false;
      rep.failed = std::move(what);
    }
  };
  if (static_cast<int>(r.wt.size()) != r.dim) fail("weight grading size");
  // k_i x_j^{+-} k_i^{-1} = q^{+-C_ij} x_j^{+-}, with C = [[2,-2],[-2,2]].
  for (Gen g : kGens) {
    const SparseMat<K>& x = r.gen(g);
    for (int c = 0; c < r.dim; ++c)
      for (const auto& [row, v] : x.col(c)) {
        const int diff = r.wt[static_cast<std::size_t>(row)] - r.wt[static_cast<std::size_t>(c)];
        if (diff != weight_shift(g)) fail(std::string("k x k^-1 for ") + gen_name(g));
      }
  }
  // [x_i^+, x_j^-] = delta_ij [k_i]_q
  const SparseMat<K>* E[2] = {&r.e0, &r.e1};
  const SparseMat<K>* F[2] = {&r.f0, &r.f1};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      SparseMat<K> lhs = (*E[i]) * (*F[j]) - (*F[j]) * (*E[i]);
      SparseMat<K> rhs = i == j ? diag_q_integer(r, i) : SparseMat<K>(r.dim);
      if (!(lhs - rhs).is_zero()) fail("[x" + std::to_string(i) + "+, x" + std::to_string(j) + "-]");
    }
  // Serre: sum_s (-1)^s x^{(3-s)} y x^{(s)} = 0 for i != j.
  auto serre = [&](const SparseMat<K>& x, const SparseMat<K>& y) {
    SparseMat<K> pw[4];
    pw[0] = SparseMat<K>(r.dim);
    for (int b = 0; b < r.dim; ++b) pw[0].add(b, b, K(1));
    for (int s = 1; s < 4; ++s) pw[s] = pw[s - 1] * x;
    SparseMat<K> acc(r.dim);
    for (int s = 0; s <= 3; ++s) {
      K c = from_q<K>(QFunc(1) / (QFunc::q_factorial(3 - s) * QFunc::q_factorial(s)));
      if (s % 2) c = -c;
      acc = acc + (pw[3 - s] * y * pw[s]).scaled(c);
    }
    return acc.is_zero();
  };
  if (!serre(r.e0, r.e1)) fail("Serre x0+ x1+");
  if (!serre(r.e1, r.e0)) fail("Serre x1+ x0+");
  if (!serre(r.f0, r.f1)) fail("Serre x0- x1-");
  if (!serre(r.f1, r.f0)) fail("Serre x1- x0-");
  return rep;
}

// Weight spaces: global basis indices grouped by weight.
struct WeightIndex {
  std::map<int, std::vector<int>> members;
  std::vector<int> local;  // position of each basis index inside its weight space

  template <class K>
  explicit WeightIndex(const Rep<K>& r) : local(static_cast<std::size_t>(r.dim)) {
    for (int b = 0; b < r.dim; ++b) {
      auto& v = members[r.wt[static_cast<std::size_t>(b)]];
      local[static_cast<std::size_t>(b)] = static_cast<int>(v.size());
      v.push_back(b);
    }
  }
  std::size_t size(int w) const {
    auto it = members.find(w);
    return it == members.end() ? 0 : it->second.size();
  }
};

// Apply a generator to a vector supported on weight space w (local
// coordinates); the result lives on w + weight_shift(g).
template <class K>
Vec<K> apply_local(const Rep<K>& r, const WeightIndex& wi, Gen g, int w, const Vec<K>& v) {
  const int w2 = w + weight_shift(g);
  Vec<K> out(wi.size(w2), K(0));
  if (out.empty()) return out;
  const auto& mem = wi.members.at(w);
  const SparseMat<K>& x = r.gen(g);
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (detail::coeff_zero(v[p])) continue;
    for (const auto& [row, val] : x.col(mem[p])) out[static_cast<std::size_t>(wi.local[static_cast<std::size_t>(row)])] += val * v[p];
  }
  return out;
}

template <class K>
struct Span {
  std::size_t dim = 0;
  std::map<int, EchelonBasis<K>> spaces;
  std::vector<std::pair<int, std::size_t>> order;  // discovery order: (weight, index)
};

// U_q(sl2^) v for a weight vector v given in global coordinates.  Breadth
// first over generator applications with immediate echelon reduction.
template <class K>
Span<K> cyclic_span(const Rep<K>& r, const Vec<K>& v) {
  Span<K> s;
  WeightIndex wi(r);
  std::optional<int> w0;
  for (int b = 0; b < r.dim; ++b)
    if (!detail::coeff_zero(v[static_cast<std::size_t>(b)])) {
      const int w = r.wt[static_cast<std::size_t>(b)];
      if (w0 && *w0 != w) throw std::invalid_argument("cyclic_span: start vector is not a weight vector");
      w0 = w;
    }
  if (!w0) return s;
  for (const auto& [w, mem] : wi.members) s.spaces.emplace(w, EchelonBasis<K>(mem.size()));
  Vec<K> loc(wi.size(*w0), K(0));
  for (int b : wi.members.at(*w0)) loc[static_cast<std::size_t>(wi.local[static_cast<std::size_t>(b)])] = v[static_cast<std::size_t>(b)];

  std::vector<std::pair<int, std::size_t>> queue;
  if (auto j = s.spaces.at(*w0).insert(loc)) queue.emplace_back(*w0, *j);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [w, j] = queue[head];
    const Vec<K> u = s.spaces.at(w).vector(j);
    for (Gen g : kGens) {
      const int w2 = w + weight_shift(g);
      if (wi.size(w2) == 0) continue;
      EchelonBasis<K>& sp = s.spaces.at(w2);
      if (sp.size() == sp.ambient()) continue;
      Vec<K> x = apply_local(r, wi, g, w, u);
      if (auto k = sp.insert(std::move(x))) queue.emplace_back(w2, *k);
    }
  }
  s.order = std::move(queue);
  s.dim = s.order.size();
  return s;
}

template <class K>
Vec<K> basis_vector(int dim, int b) {
  Vec<K> v(static_cast<std::size_t>(dim), K(0));
  v[static_cast<std::size_t>(b)] = K(1);
  return v;
}

template <class K>
bool is_cyclic(const Rep<K>& r) {
  return static_cast<int>(cyclic_span(r, basis_vector<K>(r.dim, r.hw)).dim) == r.dim;
}

// The action restricted to a span that is a submodule; basis in discovery order.
template <class K>
Rep<K> restrict_to(const Rep<K>& r, const Span<K>& s) {
  WeightIndex wi(r);
  Rep<K> out;
  out.dim = static_cast<int>(s.dim);
  out.hw = 0;
  std::map<std::pair<int, std::size_t>, int> index;
  for (std::size_t n = 0; n < s.order.size(); ++n) {
    index[s.order[n]] = static_cast<int>(n);
    out.wt.push_back(s.order[n].first);
  }
  for (Gen g : kGens) out.gen(g) = SparseMat<K>(out.dim);
  for (std::size_t n = 0; n < s.order.size(); ++n) {
    const auto [w, j] = s.order[n];
    const Vec<K>& u = s.spaces.at(w).vector(j);
    for (Gen g : kGens) {
      const int w2 = w + weight_shift(g);
      if (wi.size(w2) == 0) continue;
      Vec<K> x = apply_local(r, wi, g, w, u);
      Vec<K> c = s.spaces.at(w2).coords(std::move(x));
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!detail::coeff_zero(c[k])) out.gen(g).add(index.at({w2, k}), static_cast<int>(n), c[k]);
    }
  }
  return out;
}

}  // namespace qcyc
