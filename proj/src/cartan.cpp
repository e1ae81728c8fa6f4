#include "qcyc/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "qcyc/linalg/elim.hpp"

namespace qcyc {

namespace {

struct Label {
  char letter;
  int k;
  int twist;
};

Label label_of(const AffineType& t) {
  switch (t.family) {
    case Family::A1: return {'A', t.n, 1};
    case Family::B1: return {'B', t.n, 1};
    case Family::C1: return {'C', t.n, 1};
    case Family::D1: return {'D', t.n, 1};
    case Family::E1: return {'E', t.n, 1};
    case Family::F1: return {'F', t.n, 1};
    case Family::G1: return {'G', t.n, 1};
    case Family::A_even: return {'A', 2 * t.n, 2};
    case Family::A_odd: return {'A', 2 * t.n - 1, 2};
    case Family::D2: return {'D', t.n + 1, 2};
    case Family::E62: return {'E', 6, 2};
    case Family::D43: return {'D', 4, 3};
  }
  return {'?', 0, 0};
}

using IntMat = std::vector<std::vector<int>>;

IntMat blank(int n) {
  IntMat c(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  return c;
}

void edge(IntMat& c, int i, int j, int aij = -1, int aji = -1) {
  c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
  c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
}

void chain(IntMat& c, int from, int to) {
  for (int i = from; i < to; ++i) edge(c, i, i + 1);
}

// Kac's tables Aff 1-3.
IntMat kac_matrix(const AffineType& t) {
  const int n = t.n;
  IntMat c = blank(n);
  switch (t.family) {
    case Family::A1:
      if (n == 1) {
        edge(c, 0, 1, -2, -2);
      } else {
        chain(c, 0, n);
        edge(c, n, 0);
      }
      break;
    case Family::B1:
      edge(c, 0, 2);
      chain(c, 1, n - 1);
      edge(c, n - 1, n, -1, -2);
      break;
    case Family::C1:
      edge(c, 0, 1, -1, -2);
      chain(c, 1, n - 1);
      edge(c, n - 1, n, -2, -1);
      break;
    case Family::D1:
      edge(c, 0, 2);
      chain(c, 1, n - 1);
      edge(c, n - 2, n);
      break;
    case Family::E1:
      if (n == 6) {
        chain(c, 1, 5);
        edge(c, 3, 6);
        edge(c, 6, 0);
      } else if (n == 7) {
        chain(c, 0, 6);
        edge(c, 3, 7);
      } else {
        chain(c, 1, 7);
        edge(c, 5, 8);
        edge(c, 0, 1);
      }
      break;
    case Family::F1:
      chain(c, 0, 4);
      edge(c, 2, 3, -1, -2);
      break;
    case Family::G1:
      edge(c, 0, 1);
      edge(c, 1, 2, -1, -3);
      break;
    case Family::A_even:
      if (n == 1) {
        edge(c, 0, 1, -4, -1);
      } else {
        chain(c, 0, n);
        edge(c, 0, 1, -2, -1);
        edge(c, n - 1, n, -2, -1);
      }
      break;
    case Family::A_odd:
      edge(c, 0, 2);
      chain(c, 1, n - 1);
      edge(c, n - 1, n, -2, -1);
      break;
    case Family::D2:
      chain(c, 0, n);
      edge(c, 0, 1, -2, -1);
      edge(c, n - 1, n, -1, -2);
      break;
    case Family::E62:
      chain(c, 0, 4);
      edge(c, 2, 3, -2, -1);
      break;
    case Family::D43:
      edge(c, 0, 1);
      edge(c, 1, 2, -3, -1);
      break;
  }
  return c;
}

IntMat reversed(const IntMat& c) {
  const std::size_t m = c.size();
  IntMat out(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[i][j] = c[m - 1 - i][m - 1 - j];
  return out;
}

mpz_class lcm_den(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace

AffineType AffineType::parse(const std::string& s) {
  static const std::regex re(R"(^\s*([A-Ga-g])(\d+)\s*~\s*([123])\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("invalid affine type '" + s + "' (expected e.g. A1~1, A2~2, D4~3)");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
  const int k = std::stoi(m[2].str());
  const int tw = std::stoi(m[3].str());
  AffineType t{Family::A1, 0};
  if (tw == 1) {
    t.n = k;
    switch (letter) {
      case 'A': t.family = Family::A1; break;
      case 'B': t.family = Family::B1; break;
      case 'C': t.family = Family::C1; break;
      case 'D': t.family = Family::D1; break;
      case 'E': t.family = Family::E1; break;
      case 'F': t.family = Family::F1; break;
      case 'G': t.family = Family::G1; break;
      default: break;
    }
  } else if (tw == 2) {
    if (letter == 'A' && k % 2 == 0) t = {Family::A_even, k / 2};
    else if (letter == 'A') t = {Family::A_odd, (k + 1) / 2};
    else if (letter == 'D') t = {Family::D2, k - 1};
    else if (letter == 'E' && k == 6) t = {Family::E62, 4};
    else throw std::invalid_argument("invalid affine type '" + s + "'");
  } else {
    if (letter == 'D' && k == 4) t = {Family::D43, 2};
    else throw std::invalid_argument("invalid affine type '" + s + "'");
  }
  if (!t.valid() || t.name() != std::string(1, letter) + std::to_string(k) + "~" + std::to_string(tw))
    throw std::invalid_argument("invalid affine type '" + s + "'");
  return t;
}

std::string AffineType::name() const {
  Label l = label_of(*this);
  return std::string(1, l.letter) + std::to_string(l.k) + "~" + std::to_string(l.twist);
}

bool AffineType::untwisted() const { return label_of(*this).twist == 1; }

bool AffineType::valid() const {
  switch (family) {
    case Family::A1: return n >= 1;
    case Family::B1: return n >= 3;
    case Family::C1: return n >= 2;
    case Family::D1: return n >= 4;
    case Family::E1: return n >= 6 && n <= 8;
    case Family::F1: return n == 4;
    case Family::G1: return n == 2;
    case Family::A_even: return n >= 1;
    case Family::A_odd: return n >= 3;
    case Family::D2: return n >= 2;
    case Family::E62: return n == 4;
    case Family::D43: return n == 2;
  }
  return false;
}

Weight CartanData::alpha(int i) const {
  Weight w(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) w[static_cast<std::size_t>(j - 1)] = finite_C[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
  return w;
}

Weight CartanData::omega(int i) const {
  Weight w(static_cast<std::size_t>(n), 0);
  w[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

CartanData build_cartan(const AffineType& t) {
  if (!t.valid()) throw std::invalid_argument("invalid affine type " + t.name());
  CartanData cd;
  cd.type = t;
  cd.n = t.n;
  const int n = t.n;
  const auto N = static_cast<std::size_t>(n + 1);
  cd.C = kac_matrix(t);
  if (t.family == Family::A_even) cd.C = reversed(cd.C);

  cd.mu.assign(N, 1);
  if (t.family == Family::A_even) cd.mu[N - 1] = 2;

  // Symmetrizer by propagation along the diagram: r_j C_ji = r_i C_ij.
  std::vector<mpq_class> r(N, 0);
  std::vector<bool> seen(N, false);
  r[0] = 1;
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < N; ++j) {
      if (j == i || cd.C[i][j] == 0 || seen[j]) continue;
      r[j] = r[i] * cd.C[i][j] / cd.C[j][i];
      seen[j] = true;
      queue.push_back(j);
    }
  }
  // Normalize: mu_i r_i positive integers with gcd 1.
  std::vector<mpq_class> mr(N);
  for (std::size_t i = 0; i < N; ++i) mr[i] = r[i] * cd.mu[i];
  mpz_class l = lcm_den(mr);
  mpz_class g = 0;
  for (auto& x : mr) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  cd.r.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    cd.r[i] = r[i] * l / g;
    cd.r[i].canonicalize();
  }

  Label lab = label_of(t);
  cd.twist_order = lab.twist;
  cd.d.assign(N, 1);
  for (std::size_t i = 0; i < N; ++i)
    if (cd.twist_order > 1 && cd.r[i] == cd.twist_order) cd.d[i] = cd.twist_order;

  cd.finite_C.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      cd.finite_C[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = cd.C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return cd;
}

bool weight_leq(const Weight& a, const Weight& b, const CartanData& cd) {
  const auto n = static_cast<std::size_t>(cd.n);
  if (a.size() != n || b.size() != n) throw std::invalid_argument("weight_leq: dimension mismatch");
  // Solve finite_C x = b - a over Q.
  Matrix<mpq_class> m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cd.finite_C[i][j];
    m(i, n) = mpq_class(static_cast<long>(b[i] - a[i]));
  }
  Echelon<mpq_class> e = rref_serial(m);
  if (e.rank() != n) throw std::logic_error("weight_leq: degenerate finite Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    const mpq_class& x = e.rows[i][n];
    if (sgn(x) < 0 || x.get_den() != 1) return false;
  }
  return true;
}

long long det(const std::vector<std::vector<int>>& c) {
  const std::size_t n = c.size();
  if (n == 0) return 1;
  Matrix<mpq_class> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c[i][j];
  // Fraction-field elimination tracking the determinant.
  mpq_class d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(m(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      mpq_class f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d.get_num().get_si();
}

bool is_affine_cartan(const std::vector<std::vector<int>>& C) {
  const std::size_t N = C.size();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j && C[i][j] != 2) return false;
      if (i != j && (C[i][j] > 0 || ((C[i][j] == 0) != (C[j][i] == 0)))) return false;
    }
  if (det(C) != 0) return false;
  // Every proper principal minor: remove at least one index.
  for (unsigned mask = 1; mask + 1 < (1u << N); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < N; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    std::vector<std::vector<int>> sub(idx.size(), std::vector<int>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = C[idx[a]][idx[b]];
    if (det(sub) <= 0) return false;
  }
  // Indecomposable: the diagram is connected.
  std::vector<bool> seen(N, false);
  std::deque<std::size_t> q{0};
  seen[0] = true;
  while (!q.empty()) {
    auto i = q.front();
    q.pop_front();
    for (std::size_t j = 0; j < N; ++j)
      if (!seen[j] && C[i][j] != 0) {
        seen[j] = true;
        q.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

}  // namespace qcyc
