#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Coefficients are stored low degree first and the vector is kept trimmed, so
// the zero polynomial has no coefficients and degree() == -1.  The coefficient
// type must be constructible from int and provide the usual ring operators;
// zero tests go through an ADL-visible is_zero().

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qcyc {

inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

namespace detail {
template <class T>
bool coeff_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  explicit Poly(R c) {
    if (!detail::coeff_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(R c, std::size_t deg) {
    Poly p;
    if (detail::coeff_zero(c)) return p;
    p.c_.assign(deg + 1, R(0));
    p.c_[deg] = std::move(c);
    return p;
  }
  static Poly x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }
  const R& lead() const { return c_.back(); }
  std::span<const R> coeffs() const { return c_; }

  // Coefficient of x^i; zero outside the stored range.
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& operator[](std::size_t i) const { return c_[i]; }

  // Largest k with x^k dividing this polynomial (0 for the zero polynomial).
  std::size_t valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && detail::coeff_zero(c_[k])) ++k;
    return k == c_.size() ? 0 : k;
  }

  // True iff the polynomial is c * x^k for a single term.
  bool is_monomial() const {
    if (c_.empty()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
      if (!detail::coeff_zero(c_[i])) return false;
    return true;
  }

  Poly shifted_down(std::size_t k) const {
    Poly p;
    if (k >= c_.size()) return p;
    p.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
    return p;
  }
  Poly shifted_up(std::size_t k) const {
    if (c_.empty() || k == 0) return *this;
    Poly p;
    p.c_.reserve(c_.size() + k);
    p.c_.assign(k, R(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    if (a.c_.empty() || b.c_.empty()) return p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.trim();
    return p;
  }

  Poly scaled(const R& s) const {
    if (detail::coeff_zero(s)) return Poly();
    Poly p = *this;
    for (auto& x : p.c_) x *= s;
    p.trim();
    return p;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  R eval(const R& x) const {
    R acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Evaluate with the argument taken from a larger ring S that accepts R
  // coefficients through `lift`.
  template <class S, class Lift>
  S eval_in(const S& x, Lift&& lift) const {
    S acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + lift(c_[i]);
    return acc;
  }

  // p(1 + t) as a polynomial in t (Taylor shift by 1).
  Poly taylor_shift_one() const {
    std::vector<R> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] += a[j];
    return Poly(std::move(a));
  }

  // x^deg * p(1/x) for deg >= degree().
  Poly reversed(std::size_t deg) const {
    if (c_.empty()) return Poly();
    if (deg + 1 < c_.size()) throw std::invalid_argument("Poly::reversed: degree too small");
    std::vector<R> a(deg + 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) a[deg - i] = c_[i];
    return Poly(std::move(a));
  }

  std::vector<R>& mutable_coeffs() { return c_; }
  void trim() {
    while (!c_.empty() && detail::coeff_zero(c_.back())) c_.pop_back();
  }

 private:
  std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

// Division with remainder over a coefficient field.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>(), a};
  std::vector<K> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const K inv_lead = K(1) / b.lead();
  std::vector<K> q(static_cast<std::size_t>(a.degree() - db + 1), K(0));
  for (int i = a.degree(); i >= db; --i) {
    const K& top = r[static_cast<std::size_t>(i)];
    if (is_zero(top)) continue;
    K f = top * inv_lead;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i - db)] = std::move(f);
  }
  return {Poly<K>(std::move(q)), Poly<K>(std::move(r))};
}

// Monic gcd over a coefficient field (Euclid).
template <class K>
Poly<K> gcd_field(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(K(1) / a.lead());
}

}  // namespace qcyc
