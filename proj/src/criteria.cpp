#include "qcyc/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcyc {

bool fundamental_order_ok(const FundamentalList& fl, const CartanData& cd) {
  for (std::size_t p = 0; p < fl.size(); ++p) {
    if (fl[p].i < 1 || fl[p].i > cd.n) throw std::invalid_argument("fundamental_order_ok: node index out of range");
    for (std::size_t r = 0; r < p; ++r)
      if (fl[p].a.orbit == fl[r].a.orbit && fl[p].a.l < fl[r].a.l) return false;
  }
  return true;
}

Monomial product(const FundamentalList& fl) {
  Monomial m;
  for (const auto& f : fl) m *= Monomial::Y(f.i, f.a);
  return m;
}

FundamentalList admissible_factorization(const Monomial& M, const CartanData& cd) {
  if (!M.dominant()) throw std::invalid_argument("admissible_factorization: monomial is not dominant");
  FundamentalList fl;
  for (const auto& [k, e] : M.exps())
    for (int t = 0; t < e; ++t) fl.push_back(Fundamental{k.i, k.a});
  std::stable_sort(fl.begin(), fl.end(), [](const Fundamental& x, const Fundamental& y) {
    if (x.a.orbit != y.a.orbit) return x.a.orbit < y.a.orbit;
    return x.a.l < y.a.l;
  });
  if (!fundamental_order_ok(fl, cd) || !(product(fl) == M))
    throw std::logic_error("admissible_factorization: post-condition violated");
  return fl;
}

bool pairwise_cyclic_sufficient(const Monomial& m, const Monomial& m2, const CartanData& cd) {
  if (!m.dominant() || !m2.dominant()) throw std::invalid_argument("pairwise_cyclic_sufficient: monomials must be dominant");
  (void)cd;
  const auto f1 = orbit_factorize(m);
  const auto f2 = orbit_factorize(m2);
  for (const auto& [orbit, a] : f1) {
    auto it = f2.find(orbit);
    if (it == f2.end()) continue;
    if (it->second.max_l() > a.min_l()) return false;
  }
  return true;
}

std::vector<PairWitness> CyclicVerdict::failing() const {
  std::vector<PairWitness> out;
  for (const auto& p : pairs)
    if (!p.result) out.push_back(p);
  return out;
}

CyclicVerdict maincyc_conclude(const std::vector<Monomial>& ms, const PairOracle& pairwise, const std::string& oracle_name,
                               Backend backend) {
  for (const auto& m : ms)
    if (!m.dominant()) throw std::invalid_argument("maincyc_conclude: monomials must be dominant");
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) idx.emplace_back(i, j);
  const auto res = map_indices<char>(backend, idx.size(), [&](std::size_t t) {
    return static_cast<char>(pairwise(idx[t].first, idx[t].second));
  });
  CyclicVerdict v;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    v.pairs.push_back(PairWitness{idx[t].first, idx[t].second, oracle_name, res[t] != 0});
    if (!res[t]) v.status = Verdict::Inconclusive;
  }
  return v;
}

const char* to_string(Verdict v) { return v == Verdict::Cyclic ? "Cyclic" : "Inconclusive"; }

}  // namespace qcyc
