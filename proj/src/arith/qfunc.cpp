#include "qcyc/arith/qfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qcyc {
namespace zpoly {

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly divexact(const ZPoly& a, const mpz_class& c) {
  if (c == 1) return a;
  std::vector<mpz_class> v(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return ZPoly(std::move(v));
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  mpz_class c = content(p);
  if (sgn(p.lead()) < 0) c = -c;
  return divexact(p, c);
}

namespace {

// Pseudo-remainder of a by b, made primitive.
ZPoly prem_primitive(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const mpz_class& lb = b.lead();
  int dr = a.degree();
  while (dr >= db) {
    const mpz_class lr = r[static_cast<std::size_t>(dr)];
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(dr - db + j)] -= lr * b[static_cast<std::size_t>(j)];
    r.pop_back();
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  return primitive_part(ZPoly(std::move(r)));
}

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  if (a0.is_zero()) return primitive_part(b0).scaled(content(b0));
  if (b0.is_zero()) return primitive_part(a0).scaled(content(a0));

  const std::size_t v = std::min(a0.valuation(), b0.valuation());
  mpz_class cg;
  {
    mpz_class ca = content(a0), cb = content(b0);
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  ZPoly a = primitive_part(a0.shifted_down(a0.valuation()));
  ZPoly b = primitive_part(b0.shifted_down(b0.valuation()));
  if (a.degree() == 0 || b.degree() == 0) return ZPoly::monomial(cg, v);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return ZPoly::monomial(cg, v);
    ZPoly r = prem_primitive(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a).scaled(cg).shifted_up(v);
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("divexact by zero polynomial");
  if (b.degree() == 0) return divexact(a, b[0]);
  if (a.is_zero()) return a;
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) throw std::domain_error("divexact: degree mismatch");
  std::vector<mpz_class> q(static_cast<std::size_t>(da - db + 1));
  const mpz_class& lb = b.lead();
  for (int i = da; i >= db; --i) {
    mpz_class& top = r[static_cast<std::size_t>(i)];
    if (sgn(top) == 0) continue;
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i - db)] = std::move(f);
  }
  return ZPoly(std::move(q));
}

std::string to_string(const ZPoly& p, const char* var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const mpz_class& c = p[i];
    if (sgn(c) == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace zpoly

QFunc::QFunc(const mpq_class& r) : num_(r.get_num()), den_(r.get_den()) {}

QFunc::QFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QFunc: zero denominator");
  normalize();
}

void QFunc::normalize() {
  if (num_.is_zero()) {
    den_ = ZPoly(mpz_class(1));
    return;
  }
  if (den_.degree() == 0 && num_.degree() >= 0) {
    // Integer denominator: only contents interact.
    mpz_class g = zpoly::content(num_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_[0].get_mpz_t());
    if (sgn(den_[0]) < 0) g = -g;
    num_ = zpoly::divexact(num_, g);
    den_ = zpoly::divexact(den_, g);
    return;
  }
  ZPoly g = zpoly::gcd(num_, den_);
  if (sgn(den_.lead()) < 0) g = -g;
  num_ = zpoly::divexact(num_, g);
  den_ = zpoly::divexact(den_, g);
}

QFunc QFunc::q_power(int n) {
  if (n >= 0) return QFunc(ZPoly::monomial(mpz_class(1), static_cast<std::size_t>(n)), ZPoly(mpz_class(1)), Reduced{});
  return QFunc(ZPoly(mpz_class(1)), ZPoly::monomial(mpz_class(1), static_cast<std::size_t>(-n)), Reduced{});
}

QFunc QFunc::q_integer(int n) {
  if (n == 0) return QFunc(0);
  if (n < 0) return -q_integer(-n);
  // q^{1-n} + q^{3-n} + ... + q^{n-1}  =  (1 + q^2 + ... + q^{2n-2}) / q^{n-1}
  std::vector<mpz_class> c(static_cast<std::size_t>(2 * n - 1), mpz_class(0));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(2 * i)] = 1;
  return QFunc(ZPoly(std::move(c)), ZPoly::monomial(mpz_class(1), static_cast<std::size_t>(n - 1)), Reduced{});
}

QFunc QFunc::q_factorial(int n) {
  QFunc f(1);
  for (int i = 2; i <= n; ++i) f *= q_integer(i);
  return f;
}

QFunc QFunc::q_binomial(int n, int k) {
  if (k < 0 || k > n) return QFunc(0);
  return q_factorial(n) / (q_factorial(k) * q_factorial(n - k));
}

bool QFunc::is_one() const { return num_.degree() == 0 && den_.degree() == 0 && num_[0] == 1 && den_[0] == 1; }

QFunc QFunc::operator-() const { return QFunc(-num_, den_, Reduced{}); }

QFunc& QFunc::operator+=(const QFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (o.den_.degree() == 0 && den_.degree() == 0) {
    num_ = num_.scaled(o.den_[0]) + o.num_.scaled(den_[0]);
    den_ = ZPoly(mpz_class(den_[0] * o.den_[0]));
    normalize();
    return *this;
  }
  // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)),  g = gcd(b, d)
  ZPoly g = zpoly::gcd(den_, o.den_);
  ZPoly bg = zpoly::divexact(den_, g);
  ZPoly dg = zpoly::divexact(o.den_, g);
  num_ = num_ * dg + o.num_ * bg;
  den_ = den_ * dg;
  normalize();
  return *this;
}

QFunc& QFunc::operator-=(const QFunc& o) { return *this += -o; }

QFunc operator*(const QFunc& a, const QFunc& b) {
  if (a.is_zero() || b.is_zero()) return QFunc(0);
  // Cross-cancel: (a/b)(c/d) = ((a/g1)(c/g2)) / ((b/g2)(d/g1)).
  ZPoly g1 = zpoly::gcd(a.num_, b.den_);
  ZPoly g2 = zpoly::gcd(b.num_, a.den_);
  ZPoly n = zpoly::divexact(a.num_, g1) * zpoly::divexact(b.num_, g2);
  ZPoly d = zpoly::divexact(a.den_, g2) * zpoly::divexact(b.den_, g1);
  if (sgn(d.lead()) < 0) {
    n = -n;
    d = -d;
  }
  return QFunc(std::move(n), std::move(d), QFunc::Reduced{});
}

QFunc& QFunc::operator*=(const QFunc& o) { return *this = *this * o; }

QFunc QFunc::inverse() const {
  if (is_zero()) throw std::domain_error("QFunc: division by zero");
  if (sgn(num_.lead()) < 0) return QFunc(-den_, -num_, Reduced{});
  return QFunc(den_, num_, Reduced{});
}

QFunc& QFunc::operator/=(const QFunc& o) { return *this = *this * o.inverse(); }

mpq_class QFunc::eval(const mpq_class& x) const {
  mpq_class n = 0, d = 0;
  for (std::size_t i = num_.size(); i-- > 0;) n = n * x + mpq_class(num_[i]);
  for (std::size_t i = den_.size(); i-- > 0;) d = d * x + mpq_class(den_[i]);
  if (sgn(d) == 0) throw std::domain_error("QFunc::eval at a pole");
  return n / d;
}

std::string QFunc::str() const {
  if (den_.degree() == 0 && den_[0] == 1) return zpoly::to_string(num_, "q");
  std::string n = zpoly::to_string(num_, "q");
  std::string d = zpoly::to_string(den_, "q");
  if (num_.size() - num_.valuation() > 1) n = "(" + n + ")";
  if (den_.size() - den_.valuation() > 1 || (den_.is_monomial() && den_.lead() != 1)) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace qcyc
