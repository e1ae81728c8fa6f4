#include "qcyc/desk.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "qcyc/qchar.hpp"
#include "qcyc/sl2/engine.hpp"

namespace qcyc {

std::vector<Monomial> desk_monomials() {
  std::vector<Monomial> out;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        if (a + b + c == 0) continue;
        out.push_back(Monomial::sl2(0, a) * Monomial::sl2(2, b) * Monomial::sl2(4, c));
      }
  return out;
}

namespace {


// Simple modules for every monomial that occurs, built once.
class ModuleTable {
 public:
  void want(const Monomial& m) { mods_.emplace(m, Rep<QFunc>{}); }
  void build(Backend b) {
    std::vector<Monomial> keys;
    for (const auto& [m, r] : mods_) keys.push_back(m);
    auto reps = map_indices<Rep<QFunc>>(b, keys.size(), [&](std::size_t i) { return simple_module(keys[i]); });
    for (std::size_t i = 0; i < keys.size(); ++i) mods_[keys[i]] = std::move(reps[i]);
  }
  const Rep<QFunc>& operator[](const Monomial& m) const { return mods_.at(m); }

 private:
  std::map<Monomial, Rep<QFunc>> mods_;
};

bool cyclic_product(const ModuleTable& t, const std::vector<Monomial>& ms) {
  std::vector<Rep<QFunc>> f;
  for (const auto& m : ms) f.push_back(t[m]);
  return is_cyclic_certified(tensor_all(f));
}

}  // namespace

DeskReport run_desk(Backend backend, long max_dim) {
  const auto ms = desk_monomials();
  const CartanData cd = build_cartan("A1~1");
  DeskReport rep;
  rep.simples = ms.size();
  std::vector<long long> dim;
  for (const auto& m : ms) dim.push_back(sl2_simple_qchar(m).dimension());

  using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::vector<Triple> triples;
  std::set<std::pair<std::size_t, std::size_t>> pair_set;
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b)
      for (std::size_t c = 0; c < ms.size(); ++c)
        if (dim[a] * dim[b] * dim[c] <= max_dim) {
          triples.emplace_back(a, b, c);
          pair_set.insert({a, b});
          pair_set.insert({a, c});
          pair_set.insert({b, c});
        }
  rep.triples = triples.size();
  const std::vector<std::pair<std::size_t, std::size_t>> pairs(pair_set.begin(), pair_set.end());
  rep.pairs = pairs.size();

  ModuleTable table;
  for (const auto& m : ms) {
    table.want(m);
    auto [p, n] = plus_minus_split(m);
    table.want(p);
    table.want(n);
  }
  table.build(backend);

  const auto pair_ok = map_indices<char>(backend, pairs.size(), [&](std::size_t i) {
    return static_cast<char>(cyclic_product(table, {ms[pairs[i].first], ms[pairs[i].second]}));
  });
  std::map<std::pair<std::size_t, std::size_t>, bool> cyc;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    cyc[pairs[i]] = pair_ok[i] != 0;
    rep.cyclic_pairs += pair_ok[i] != 0;
    if (pairwise_cyclic_sufficient(ms[pairs[i].first], ms[pairs[i].second], cd)) {
      ++rep.criterion_true;
      if (!pair_ok[i]) {
        ++rep.criterion_failures;
        rep.failures.push_back("pairwise criterion: " + ms[pairs[i].first].str() + " (x) " + ms[pairs[i].second].str());
      }
    }
  }

  // Cyclicity of the positive parts for every cyclic pair.
  std::set<std::pair<Monomial, Monomial>> plus_set;
  for (const auto& [pr, ok] : cyc)
    if (ok) plus_set.insert({plus_minus_split(ms[pr.first]).first, plus_minus_split(ms[pr.second]).first});
  const std::vector<std::pair<Monomial, Monomial>> plus(plus_set.begin(), plus_set.end());
  rep.plus_pairs = plus.size();
  const auto plus_ok = map_indices<char>(backend, plus.size(), [&](std::size_t i) {
    return static_cast<char>(cyclic_product(table, {plus[i].first, plus[i].second}));
  });
  for (std::size_t i = 0; i < plus.size(); ++i)
    if (!plus_ok[i]) {
      ++rep.plus_failures;
      rep.failures.push_back("positive parts: " + plus[i].first.str() + " (x) " + plus[i].second.str());
    }

  std::vector<Triple> good;
  for (const auto& t : triples) {
    const auto [a, b, c] = t;
    if (cyc.at({a, b}) && cyc.at({a, c}) && cyc.at({b, c})) good.push_back(t);
  }
  rep.all_pairs_cyclic = good.size();
  struct TripleResult {
    bool product = false, vcyc = false;
  };
  const auto res = map_indices<TripleResult>(backend, good.size(), [&](std::size_t i) {
    const auto [a, b, c] = good[i];
    const auto [p, n] = plus_minus_split(ms[a]);
    return TripleResult{cyclic_product(table, {ms[a], ms[b], ms[c]}), cyclic_product(table, {p, ms[b], ms[c], n})};
  });
  for (std::size_t i = 0; i < good.size(); ++i) {
    const auto [a, b, c] = good[i];
    const std::string name = ms[a].str() + " (x) " + ms[b].str() + " (x) " + ms[c].str();
    if (!res[i].product) {
      ++rep.maincyc_failures;
      rep.failures.push_back("triple product: " + name);
    }
    if (!res[i].vcyc) {
      ++rep.vcyc_failures;
      rep.failures.push_back("S1+ S2 S3 S1-: " + name);
    }
  }
  return rep;
}

bool oracle_cyclic(const FundamentalList& fl) {
  std::vector<long> ls;
  for (auto it = fl.rbegin(); it != fl.rend(); ++it) {
    if (it->i != 1 || it->a.k != 0) throw std::invalid_argument("oracle_cyclic: expects sl2 fundamentals");
    ls.push_back(it->a.l);
  }
  if (!fl.empty()) {
    for (const auto& f : fl)
      if (f.a.orbit != fl.front().a.orbit) throw std::invalid_argument("oracle_cyclic: one orbit only");
  }
  return is_cyclic(fundamental_tensor(ls));
}

CycReport random_list_soundness(std::size_t count, std::uint64_t seed, Backend backend, int max_len, long max_l) {
  const CartanData cd = build_cartan("A1~1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<long> ell(0, max_l);
  std::vector<FundamentalList> lists;
  while (lists.size() < count) {
    FundamentalList fl(static_cast<std::size_t>(len(rng)));
    for (auto& f : fl) f = Fundamental{1, SpectralParam(ell(rng))};
    if (fundamental_order_ok(fl, cd)) lists.push_back(std::move(fl));
  }
  const auto ok = map_indices<char>(backend, lists.size(), [&](std::size_t i) { return static_cast<char>(oracle_cyclic(lists[i])); });
  CycReport rep;
  rep.lists = lists.size();
  for (std::size_t i = 0; i < lists.size(); ++i)
    if (!ok[i]) {
      ++rep.failures;
      std::string s;
      for (const auto& f : lists[i]) s += (s.empty() ? "" : ",") + std::to_string(f.a.l);
      rep.failed.push_back("[" + s + "]");
    }
  return rep;
}

}  // namespace qcyc
