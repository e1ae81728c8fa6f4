#pragma once

// Frac<K>: the rational function field K(x) over an exact field K.
//
// Elements are num/den with den monic and gcd(num, den) = 1, so equality is
// structural.  Nesting gives the deformation fields used by the intertwiner:
// Frac<QFunc> is Q(q)(z) and Frac<Frac<QFunc>> is Q(q)(z)(w).

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcyc/arith/poly.hpp"
#include "qcyc/arith/qfunc.hpp"

namespace qcyc {

template <class K>
class Frac {
 public:
  using base_type = K;
  using poly_type = Poly<K>;

  Frac() : den_(K(1)) {}
  Frac(int n) : num_(K(n)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  explicit Frac(K c) : num_(std::move(c)), den_(K(1)) {}
  Frac(poly_type num, poly_type den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Frac: zero denominator");
    normalize();
  }

  static Frac x() { return Frac(poly_type::x(), poly_type(K(1)), Reduced{}); }
  static Frac x_power(int n) {
    if (n >= 0) return Frac(poly_type::monomial(K(1), static_cast<std::size_t>(n)), poly_type(K(1)), Reduced{});
    return Frac(poly_type(K(1)), poly_type::monomial(K(1), static_cast<std::size_t>(-n)), Reduced{});
  }
  static Frac from_poly(poly_type p) { return Frac(std::move(p), poly_type(K(1)), Reduced{}); }

  const poly_type& num() const { return num_; }
  const poly_type& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Constant term when is_constant().
  K constant() const { return num_.is_zero() ? K(0) : num_[0]; }

  Frac operator-() const { return Frac(-num_, den_, Reduced{}); }

  Frac& operator+=(const Frac& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
      num_ += o.num_;
      if (den_.degree() > 0) normalize();
      else if (num_.is_zero()) den_ = poly_type(K(1));
      return *this;
    }
    if (den_.degree() == 0) {
      num_ = num_ * o.den_ + o.num_;
      den_ = o.den_;
      return *this;  // o reduced and den_ == 1 keeps the result reduced
    }
    if (o.den_.degree() == 0) {
      num_ += o.num_ * den_;
      return *this;
    }
    poly_type g = gcd_field(den_, o.den_);
    if (g.degree() == 0) {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
      return *this;
    }
    poly_type bg = divmod(den_, g).first;
    poly_type dg = divmod(o.den_, g).first;
    num_ = num_ * dg + o.num_ * bg;
    den_ = den_ * dg;
    normalize();
    return *this;
  }
  Frac& operator-=(const Frac& o) { return *this += -o; }

  friend Frac operator*(const Frac& a, const Frac& b) {
    if (a.is_zero() || b.is_zero()) return Frac();
    if (a.den_.degree() == 0 && b.den_.degree() == 0) return Frac(a.num_ * b.num_, poly_type(K(1)), Reduced{});
    if (a.is_constant()) return b.scaled(a.constant());
    if (b.is_constant()) return a.scaled(b.constant());
    poly_type g1 = gcd_field(a.num_, b.den_);
    poly_type g2 = gcd_field(b.num_, a.den_);
    poly_type n1 = g1.degree() > 0 ? divmod(a.num_, g1).first : a.num_;
    poly_type d2 = g1.degree() > 0 ? divmod(b.den_, g1).first : b.den_;
    poly_type n2 = g2.degree() > 0 ? divmod(b.num_, g2).first : b.num_;
    poly_type d1 = g2.degree() > 0 ? divmod(a.den_, g2).first : a.den_;
    return Frac(n1 * n2, d1 * d2, Reduced{});
  }
  Frac& operator*=(const Frac& o) { return *this = *this * o; }

  Frac inverse() const {
    if (is_zero()) throw std::domain_error("Frac: division by zero");
    K lead_inv = K(1) / num_.lead();
    return Frac(den_.scaled(lead_inv), num_.scaled(lead_inv), Reduced{});
  }
  Frac& operator/=(const Frac& o) { return *this = *this * o.inverse(); }

  friend Frac operator+(Frac a, const Frac& b) { return a += b; }
  friend Frac operator-(Frac a, const Frac& b) { return a -= b; }
  friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inverse(); }
  friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  Frac scaled(const K& c) const {
    if (is_zero(c)) return Frac();
    return Frac(num_.scaled(c), den_, Reduced{});
  }

  // Value at x = c; throws on a pole.
  K eval(const K& c) const {
    K d = den_.eval(c);
    if (is_zero(d)) throw std::domain_error("Frac::eval at a pole");
    return num_.eval(c) / d;
  }

  // Substitute x -> s for s in a larger field S that embeds K via lift.
  template <class S, class Lift>
  S substitute(const S& s, Lift&& lift) const {
    return num_.eval_in(s, lift) / den_.eval_in(s, lift);
  }

  std::string str(const char* var = "z") const {
    auto pstr = [var](const poly_type& p) {
      std::string out;
      bool first = true;
      for (std::size_t i = p.size(); i-- > 0;) {
        if (is_zero(p[i])) continue;
        if (!first) out += " + ";
        first = false;
        out += "(" + to_str(p[i]) + ")";
        if (i > 0) out += std::string("*") + var + (i > 1 ? "^" + std::to_string(i) : "");
      }
      return first ? std::string("0") : out;
    };
    if (den_.degree() == 0) return pstr(num_);
    return "[" + pstr(num_) + "]/[" + pstr(den_) + "]";
  }

 private:
  struct Reduced {};
  Frac(poly_type num, poly_type den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  static bool is_zero(const K& c) { return detail::coeff_zero(c); }
  static std::string to_str(const QFunc& c) { return c.str(); }
  template <class K2>
  static std::string to_str(const Frac<K2>& c) {
    return c.str("z");
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = poly_type(K(1));
      return;
    }
    if (den_.degree() > 0) {
      poly_type g = gcd_field(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
    }
    const K& l = den_.lead();
    if (!(l == K(1))) {
      K inv = K(1) / l;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  poly_type num_;
  poly_type den_;
};

template <class K>
bool is_zero(const Frac<K>& x) {
  return x.is_zero();
}
template <class K>
std::ostream& operator<<(std::ostream& os, const Frac<K>& x) {
  return os << x.str();
}

using ZFunc = Frac<QFunc>;    // Q(q)(z)
using ZWFunc = Frac<ZFunc>;   // Q(q)(z)(w)

// Embedding of Q(q) into the scalar fields of the engine.
template <class K>
struct Embed;
template <>
struct Embed<QFunc> {
  static QFunc from_q(const QFunc& x) { return x; }
};
template <class K>
struct Embed<Frac<K>> {
  static Frac<K> from_q(const QFunc& x) { return Frac<K>(Embed<K>::from_q(x)); }
};

template <class K>
K from_q(const QFunc& x) {
  return Embed<K>::from_q(x);
}
template <class K>
K q_power(int n) {
  return from_q<K>(QFunc::q_power(n));
}

}  // namespace qcyc
