#include "qcyc/qchar.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcyc/linalg/elim.hpp"

namespace qcyc {

long long QCharacter::multiplicity(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? 0 : it->second;
}

long long QCharacter::dimension() const {
  long long d = 0;
  for (const auto& [m, c] : t_) d += c;
  return d;
}

void QCharacter::add(const Monomial& m, long long c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

QCharacter& QCharacter::operator+=(const QCharacter& o) {
  for (const auto& [m, c] : o.t_) add(m, c);
  return *this;
}

QCharacter QCharacter::scaled(long long c) const {
  QCharacter out;
  if (c == 0) return out;
  for (const auto& [m, x] : t_) out.t_.emplace(m, x * c);
  return out;
}

QCharacter operator*(const QCharacter& a, const QCharacter& b) {
  QCharacter out;
  for (const auto& [m, x] : a.t_)
    for (const auto& [n, y] : b.t_) out.add(m * n, x * y);
  return out;
}

QCharacter operator*(const Monomial& m, const QCharacter& a) {
  QCharacter out;
  for (const auto& [n, y] : a.t_) out.add(m * n, y);
  return out;
}

std::string QCharacter::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    long long a = c;
    if (first) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (a < 0) a = -a;
    if (a != 1) os << a << '*';
    os << m.str();
  }
  return os.str();
}

Monomial highest_monomial(const QCharacter& chi, const CartanData& cd) {
  if (chi.is_zero()) throw std::invalid_argument("highest_monomial: empty character");
  std::vector<std::pair<Monomial, Weight>> mw;
  for (const auto& [m, c] : chi.terms()) mw.emplace_back(m, weight_of(m, cd));
  std::vector<std::size_t> tops;
  for (std::size_t a = 0; a < mw.size(); ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < mw.size() && ok; ++b)
      if (a != b && !weight_leq(mw[b].second, mw[a].second, cd)) ok = false;
    if (ok) tops.push_back(a);
  }
  if (tops.size() != 1) throw std::domain_error("highest_monomial: no unique maximal monomial");
  return mw[tops[0]].first;
}

std::vector<StringTerm> string_terms(int i, const QString& s, long h) {
  std::vector<StringTerm> out;
  StringTerm cur;
  out.push_back(cur);
  for (int k = 1; k <= s.length; ++k) {
    SpectralParam c = s.start.shifted(h * (2 * (s.length - k) + 1));
    cur.a_inv.push_back(c);
    cur.ratio *= Monomial::Y(i, c.shifted(-h), -1) * Monomial::Y(i, c.shifted(h), -1);
    out.push_back(cur);
  }
  return out;
}

namespace {

// Greedy decomposition of the node-i part of m into strings of step 2h.
std::vector<QString> strings_of(const Monomial& m, int i, long h) {
  std::map<YKey, int> left;
  for (const auto& [k, e] : m.exps())
    if (k.i == i) {
      if (e < 0) throw std::invalid_argument("string decomposition of a non-dominant monomial");
      left[k] = e;
    }
  std::vector<QString> out;
  while (!left.empty()) {
    // Lowest l first; the canonical order within one node is (orbit, l, k).
    YKey start = left.begin()->first;
    for (const auto& [k, e] : left)
      if (k.a.l < start.a.l) start = k;
    int len = 0;
    YKey cur = start;
    for (;;) {
      auto it = left.find(cur);
      if (it == left.end()) break;
      if (--it->second == 0) left.erase(it);
      ++len;
      cur.a = cur.a.shifted(2 * h);
    }
    out.push_back(QString{start.a, len});
  }
  return out;
}

}  // namespace

std::vector<QString> string_decompose(const Monomial& M) {
  if (!M.dominant()) throw std::invalid_argument("string_decompose: monomial is not dominant");
  if (!M.single_orbit()) throw std::invalid_argument("string_decompose: monomial spans several orbits");
  for (const auto& [k, e] : M.exps())
    if (k.i != 1) throw std::invalid_argument("string_decompose: expects an sl2 monomial");
  return strings_of(M, 1, 1);
}

bool special_position(const QString& a, const QString& b) {
  if (a.start.orbit != b.start.orbit || a.start.k != b.start.k) return false;
  if ((a.start.l - b.start.l) % 2 != 0) return false;
  const long a0 = a.start.l, a1 = a.start.l + 2L * (a.length - 1);
  const long b0 = b.start.l, b1 = b.start.l + 2L * (b.length - 1);
  const bool a_in_b = b0 <= a0 && a1 <= b1;
  const bool b_in_a = a0 <= b0 && b1 <= a1;
  if (a_in_b || b_in_a) return false;
  // Union is a string iff the two overlap or are adjacent.
  return std::max(a0, b0) <= std::min(a1, b1) + 2;
}

QCharacter fm_complete(const CartanData& cd, const Monomial& top, int max_terms) {
  if (!cd.type.untwisted()) throw std::invalid_argument("Frenkel-Mukhin completion is implemented for untwisted types only");
  if (!top.dominant()) throw std::invalid_argument("fm_complete: top monomial is not dominant");
  struct Entry {
    long long mult = 0;
    std::map<int, long long> colored;
    int depth = 0;
  };
  std::map<Monomial, Entry> data;
  std::set<std::pair<int, Monomial>> pending;
  data[top] = Entry{1, {}, 0};
  pending.emplace(0, top);

  while (!pending.empty()) {
    auto [depth, m] = *pending.begin();
    pending.erase(pending.begin());
    for (int j = 1; j <= cd.n; ++j) {
      bool has_j = false, j_dominant = true;
      for (const auto& [k, e] : m.exps())
        if (k.i == j) {
          has_j = true;
          if (e < 0) j_dominant = false;
        }
      if (!has_j || !j_dominant) continue;
      Entry& me = data[m];
      const long long fresh = me.mult - me.colored[j];
      if (fresh <= 0) continue;
      me.colored[j] += fresh;

      const long h = cd.r[static_cast<std::size_t>(j)].get_num().get_si();
      std::vector<StringTerm> terms{StringTerm{}};
      for (const QString& s : strings_of(m, j, h)) {
        std::vector<StringTerm> next;
        for (const auto& t : terms)
          for (const auto& u : string_terms(j, s, h)) {
            StringTerm w = t;
            w.a_inv.insert(w.a_inv.end(), u.a_inv.begin(), u.a_inv.end());
            next.push_back(std::move(w));
          }
        terms = std::move(next);
      }
      for (const auto& t : terms) {
        if (t.a_inv.empty()) continue;
        Monomial m2 = m;
        for (const auto& b : t.a_inv) m2 *= a_monomial(cd, j, b).inv();
        auto [it, inserted] = data.try_emplace(m2);
        Entry& e2 = it->second;
        if (inserted) {
          e2.depth = depth + static_cast<int>(t.a_inv.size());
          pending.emplace(e2.depth, m2);
          if (static_cast<int>(data.size()) > max_terms)
            throw std::runtime_error("fm_complete: iteration cap reached (unsupported input)");
        }
        e2.colored[j] += fresh;
        e2.mult = std::max(e2.mult, e2.colored[j]);
      }
    }
  }
  QCharacter chi;
  for (const auto& [m, e] : data) chi.add(m, e.mult);
  return chi;
}

QCharacter fm_fundamental(const CartanData& cd, int i, const SpectralParam& a, int max_terms) {
  if (i < 1 || i > cd.n) throw std::invalid_argument("fm_fundamental: node index out of range");
  return fm_complete(cd, Monomial::Y(i, a.canonical(cd.twist_order)), max_terms);
}

namespace {
const CartanData& sl2_data() {
  static const CartanData cd = build_cartan(AffineType{Family::A1, 1});
  return cd;
}
}  // namespace

QCharacter sl2_simple_qchar(const Monomial& M) {
  QCharacter chi(Monomial{});
  for (const QString& s : string_decompose(M)) {
    Monomial t;
    for (int k = 0; k < s.length; ++k) t *= Monomial::Y(1, s.start.shifted(2L * k));
    chi = chi * fm_complete(sl2_data(), t);
  }
  return chi;
}

QCharacter truncate_upper(const QCharacter& chi, const Monomial& M, long L) {
  const Monomial target = truncate(M, L).second;
  QCharacter out;
  for (const auto& [m, c] : chi.terms()) {
    if (!m.single_orbit() || (!m.is_one() && !M.is_one() && m.orbits() != M.orbits()))
      throw std::invalid_argument("truncate_upper: mixed orbits");
    if (truncate(m, L).second == target) out.add(m, c);
  }
  return out;
}

bool verify_useqt(const Monomial& M, long L) {
  const QCharacter lhs = truncate_upper(sl2_simple_qchar(M), M, L);
  auto [hi, lo] = truncate(M, L);
  const QCharacter rhs = lo * sl2_simple_qchar(hi);
  return lhs == rhs;
}

bool in_A_inverse_cone(const Monomial& m, const Monomial& M, const CartanData& cd,
                       std::map<std::pair<int, SpectralParam>, int>* exps) {
  const Monomial R = M.inv() * m;
  if (R.is_one()) {
    if (exps) exps->clear();
    return true;
  }
  if (!R.single_orbit()) return false;
  const std::string orbit = R.orbits().front();
  const long lo = R.min_l() - 6, hi = R.max_l() + 6;
  std::vector<std::pair<int, SpectralParam>> cand;
  std::vector<Monomial> amons;
  for (int j = 1; j <= cd.n; ++j)
    for (long l = lo; l <= hi; ++l)
      for (int k = 0; k < cd.twist_order; ++k) {
        SpectralParam b(l, k, orbit);
        cand.emplace_back(j, b);
        amons.push_back(a_monomial(cd, j, b));
      }
  // Rows: every variable that occurs; columns: candidates, then -R.
  std::map<YKey, std::size_t> row_of;
  auto row = [&](const YKey& k) {
    auto [it, ins] = row_of.emplace(k, row_of.size());
    return it->second;
  };
  for (const auto& a : amons)
    for (const auto& [k, e] : a.exps()) row(k);
  for (const auto& [k, e] : R.exps()) row(k);
  Matrix<mpq_class> A(row_of.size(), cand.size() + 1);
  for (std::size_t c = 0; c < amons.size(); ++c)
    for (const auto& [k, e] : amons[c].exps()) A(row_of[k], c) = e;
  // R = prod A^{-e}  <=>  sum e_c A_c = -R
  for (const auto& [k, e] : R.exps()) A(row_of[k], cand.size()) = -e;
  Echelon<mpq_class> ech = rref_serial(A);
  std::map<std::pair<int, SpectralParam>, int> out;
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    const std::size_t p = ech.pivots[r];
    if (p == cand.size()) return false;  // inconsistent
    const mpq_class& x = ech.rows[r][cand.size()];
    if (sgn(x) < 0 || x.get_den() != 1) return false;
    if (sgn(x) > 0) out[cand[p]] = static_cast<int>(x.get_num().get_si());
  }
  if (ech.rank() < cand.size()) throw std::logic_error("in_A_inverse_cone: A-monomials dependent on the window");
  if (exps) *exps = std::move(out);
  return true;
}

}  // namespace qcyc
