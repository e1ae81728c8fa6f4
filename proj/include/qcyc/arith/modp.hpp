#pragma once

// The prime field F_p, p = 2^61 - 1, and specialization Q(q) -> F_p at q = q0.
// Used only for certified lower bounds on span dimensions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>

#include <gmpxx.h>

#include "qcyc/arith/qfunc.hpp"

namespace qcyc {

class Fp {
 public:
  static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

  Fp() = default;
  Fp(int n) : v_(n >= 0 ? static_cast<std::uint64_t>(n) : P - static_cast<std::uint64_t>(-static_cast<long long>(n))) {}  // NOLINT
  static Fp raw(std::uint64_t v) {
    Fp x;
    x.v_ = v % P;
    return x;
  }
  static Fp from_mpz(const mpz_class& z) {
    mpz_class r = z % mpz_class(static_cast<unsigned long>(P));
    if (r < 0) r += mpz_class(static_cast<unsigned long>(P));
    return raw(r.get_ui());
  }

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp& operator+=(const Fp& o) {
    v_ += o.v_;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    unsigned __int128 t = static_cast<unsigned __int128>(v_) * o.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(t & P), hi = static_cast<std::uint64_t>(t >> 61);
    v_ = lo + hi;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  Fp pow(std::uint64_t e) const {
    Fp b = *this, r = 1;
    for (; e; e >>= 1, b *= b)
      if (e & 1) r *= b;
    return r;
  }
  Fp inverse() const { return pow(P - 2); }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  Fp operator-() const { return Fp() - *this; }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp&, const Fp&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

 private:
  std::uint64_t v_ = 0;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline std::size_t entry_size(const Fp&) { return 1; }

// f(q0), or nullopt when q0 is a pole of f modulo p.
inline std::optional<Fp> specialize(const QFunc& f, const Fp& q0) {
  auto ev = [&q0](const ZPoly& p) {
    Fp acc;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * q0 + Fp::from_mpz(c[i]);
    return acc;
  };
  const Fp d = ev(f.den());
  if (d.is_zero()) return std::nullopt;
  return ev(f.num()) / d;
}

}  // namespace qcyc
