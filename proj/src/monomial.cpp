#include "qcyc/monomial.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcyc {

SpectralParam SpectralParam::canonical(int twist_order) const {
  SpectralParam p = *this;
  if (twist_order <= 1) {
    p.k = 0;
  } else {
    p.k %= twist_order;
    if (p.k < 0) p.k += twist_order;
  }
  return p;
}

Monomial Monomial::Y(int i, const SpectralParam& a, int e) {
  Monomial m;
  m.set(YKey{i, a}, e);
  return m;
}

void Monomial::set(const YKey& key, int e) {
  if (e == 0) e_.erase(key);
  else e_[key] = e;
}

int Monomial::exponent(int i, const SpectralParam& a) const {
  auto it = e_.find(YKey{i, a});
  return it == e_.end() ? 0 : it->second;
}

bool Monomial::dominant() const {
  return std::all_of(e_.begin(), e_.end(), [](const auto& kv) { return kv.second > 0; });
}

int Monomial::degree() const {
  int s = 0;
  for (const auto& [k, e] : e_) s += e;
  return s;
}

Monomial Monomial::inv() const {
  Monomial m = *this;
  for (auto& [k, e] : m.e_) e = -e;
  return m;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (const auto& [k, e] : o.e_) {
    auto [it, inserted] = e_.emplace(k, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) e_.erase(it);
    }
  }
  return *this;
}

Monomial Monomial::pow(int p) const {
  if (p == 0) return Monomial();
  Monomial m = *this;
  for (auto& [k, e] : m.e_) e *= p;
  return m;
}

Monomial Monomial::shifted(long dl) const {
  Monomial m;
  for (const auto& [k, e] : e_) m.e_.emplace(YKey{k.i, k.a.shifted(dl)}, e);
  return m;
}

Monomial Monomial::canonical(int twist_order) const {
  Monomial m;
  for (const auto& [k, e] : e_) m *= Y(k.i, k.a.canonical(twist_order), e);
  return m;
}

std::vector<std::string> Monomial::orbits() const {
  std::vector<std::string> out;
  for (const auto& [k, e] : e_)
    if (out.empty() || out.back() != k.a.orbit) out.push_back(k.a.orbit);
  return out;
}

long Monomial::min_l() const {
  long v = std::numeric_limits<long>::max();
  for (const auto& [k, e] : e_) v = std::min(v, k.a.l);
  return v;
}

long Monomial::max_l() const {
  long v = std::numeric_limits<long>::min();
  for (const auto& [k, e] : e_) v = std::max(v, k.a.l);
  return v;
}

std::string Monomial::str() const {
  if (e_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : e_) {
    if (!first) os << '*';
    first = false;
    if (k.a.orbit != "c") os << k.a.orbit << '@';
    os << "Y[" << k.i << ';' << k.a.l;
    if (k.a.k != 0) os << ';' << k.a.k;
    os << ']';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

Monomial a_monomial(const CartanData& cd, int i, const SpectralParam& a0) {
  if (i < 1 || i > cd.n) throw std::invalid_argument("a_monomial: node index out of range");
  const int r = cd.twist_order;
  const SpectralParam a = a0.canonical(r);
  const auto ui = static_cast<std::size_t>(i);
  auto key = [&](int j, const SpectralParam& p) { return Monomial::Y(j, p.canonical(r)); };
  Monomial m;

  if (cd.special_node(i)) {
    m *= key(i, a.shifted(-1)) * key(i, a.shifted(1)) * key(i, a.shifted(0, 1)).inv();
    if (cd.n > 1) m *= key(i - 1, a).inv();
    return m;
  }

  if (r == 1) {
    // A_{i,a} = Y_{i,aq^{-r_i}} Y_{i,aq^{r_i}} times inverse neighbour factors
    // with -C_{j,i} variables spread symmetrically around a.
    const long ri = cd.r[ui].get_num().get_si();
    m *= key(i, a.shifted(-ri)) * key(i, a.shifted(ri));
    for (int j = 1; j <= cd.n; ++j) {
      if (j == i) continue;
      const int c = cd.C[static_cast<std::size_t>(j)][ui];
      if (c == 0) continue;
      const int cnt = -c;
      for (int s = 0; s < cnt; ++s) m *= key(j, a.shifted(-(cnt - 1) + 2 * s)).inv();
    }
    return m;
  }

  // Twisted types: base parameter c stands for a = c^{d_i}.
  m *= key(i, a.shifted(-1)) * key(i, a.shifted(1));
  const bool long_node = cd.d[ui] > 1;
  for (int j = 1; j <= cd.n; ++j) {
    if (j == i || cd.C[ui][static_cast<std::size_t>(j)] == 0) continue;
    if (long_node && cd.d[static_cast<std::size_t>(j)] == 1) {
      // Product over the r-th roots b of a = c^r: b = c eps^s.
      for (int s = 0; s < r; ++s) m *= key(j, a.shifted(0, s)).inv();
    } else {
      m *= key(j, a).inv();
    }
  }
  return m;
}

namespace {
void require_single_orbit(const Monomial& m, const char* what) {
  if (!m.single_orbit()) throw std::invalid_argument(std::string(what) + ": monomial spans several orbits");
}
}  // namespace

std::pair<Monomial, Monomial> truncate(const Monomial& m, long L) {
  require_single_orbit(m, "truncate");
  Monomial hi, lo;
  for (const auto& [k, e] : m.exps()) (k.a.l >= L ? hi : lo).set(k, e);
  return {hi, lo};
}

std::pair<Monomial, Monomial> plus_minus_split(const Monomial& M) {
  if (!M.dominant()) throw std::invalid_argument("plus_minus_split: monomial is not dominant");
  return truncate(M, 1);
}

std::map<std::string, Monomial> orbit_factorize(const Monomial& M) {
  std::map<std::string, Monomial> out;
  for (const auto& [k, e] : M.exps()) out[k.a.orbit].set(k, e);
  return out;
}

bool in_C_ell(const Monomial& M, long ell) {
  require_single_orbit(M, "in_C_ell");
  for (const auto& [k, e] : M.exps())
    if (k.a.l < 0 || k.a.l > ell) return false;
  return true;
}

Weight weight_of(const Monomial& m, const CartanData& cd) {
  Weight w(static_cast<std::size_t>(cd.n), 0);
  for (const auto& [k, e] : m.exps()) {
    if (k.i < 1 || k.i > cd.n) throw std::invalid_argument("weight_of: node index out of range");
    w[static_cast<std::size_t>(k.i - 1)] += static_cast<long long>(e) * cd.mu[static_cast<std::size_t>(k.i)];
  }
  return w;
}

}  // namespace qcyc
