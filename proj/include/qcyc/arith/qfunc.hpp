#pragma once

// QFunc: exact elements of the field Q(q) of rational functions in the
// generic quantum parameter q.
//
// Canonical form: num/den with num, den in Z[q], gcd(num, den) = 1 over Q[q],
// the integer contents of num and den coprime, and lead(den) > 0.  Zero is 0/1.
// With this normalization two QFuncs are equal iff their stored polynomials are.

#include <cstddef>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "qcyc/arith/poly.hpp"

namespace qcyc {

using ZPoly = Poly<mpz_class>;

namespace zpoly {

mpz_class content(const ZPoly& p);
// p / content(p), with positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);
// Greatest common divisor in Z[x], positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
// a / b where b is known to divide a in Z[x].
ZPoly divexact(const ZPoly& a, const ZPoly& b);
ZPoly divexact(const ZPoly& a, const mpz_class& c);
std::string to_string(const ZPoly& p, const char* var);

}  // namespace zpoly

class QFunc {
 public:
  QFunc() : den_(mpz_class(1)) {}
  QFunc(int n) : num_(mpz_class(n)), den_(mpz_class(1)) {}  // NOLINT(google-explicit-constructor)
  explicit QFunc(const mpz_class& n) : num_(n), den_(mpz_class(1)) {}
  explicit QFunc(const mpq_class& r);
  QFunc(ZPoly num, ZPoly den);

  static QFunc q() { return q_power(1); }
  static QFunc q_power(int n);
  // Symmetric quantum integer [n]_q = (q^n - q^-n)/(q - q^-1).
  static QFunc q_integer(int n);
  static QFunc q_factorial(int n);
  static QFunc q_binomial(int n, int k);

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // True iff the element is c * q^k for a rational c.
  bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

  QFunc operator-() const;
  QFunc& operator+=(const QFunc& o);
  QFunc& operator-=(const QFunc& o);
  QFunc& operator*=(const QFunc& o);
  QFunc& operator/=(const QFunc& o);
  friend QFunc operator+(QFunc a, const QFunc& b) { return a += b; }
  friend QFunc operator-(QFunc a, const QFunc& b) { return a -= b; }
  friend QFunc operator*(const QFunc& a, const QFunc& b);
  friend QFunc operator/(QFunc a, const QFunc& b) { return a /= b; }
  friend bool operator==(const QFunc& a, const QFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  QFunc inverse() const;
  // Value at a rational point; throws on a pole.
  mpq_class eval(const mpq_class& x) const;
  std::string str() const;

 private:
  struct Reduced {};
  QFunc(ZPoly num, ZPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  ZPoly num_;
  ZPoly den_;
};

inline bool is_zero(const QFunc& x) { return x.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const QFunc& x) { return os << x.str(); }

}  // namespace qcyc
