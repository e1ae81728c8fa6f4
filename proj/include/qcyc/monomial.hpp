#pragma once

// The Laurent monomial lattice in the variables Y_{i,a}.
//
// A spectral parameter is (orbit) * q^l * eps^k.  A key (i, a) stands for the
// variable Y_{i, a^{d_i}}: keys always carry the base parameter a of the
// fundamental module V_i(a), never its d_i-th power.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcyc/cartan.hpp"

namespace qcyc {

struct SpectralParam {
  std::string orbit = "c";
  long l = 0;
  int k = 0;

  SpectralParam() = default;
  SpectralParam(long l_, int k_ = 0, std::string orbit_ = "c") : orbit(std::move(orbit_)), l(l_), k(k_) {}

  SpectralParam shifted(long dl, int dk = 0) const { return SpectralParam(l + dl, k + dk, orbit); }
  // Reduce k modulo the twisting order.
  SpectralParam canonical(int twist_order) const;

  friend bool operator==(const SpectralParam&, const SpectralParam&) = default;
  friend std::strong_ordering operator<=>(const SpectralParam& a, const SpectralParam& b) {
    if (auto c = a.orbit <=> b.orbit; c != 0) return c;
    if (auto c = a.l <=> b.l; c != 0) return c;
    return a.k <=> b.k;
  }
};

struct YKey {
  int i = 1;
  SpectralParam a;

  friend bool operator==(const YKey&, const YKey&) = default;
  // Canonical order: (orbit, i, l, k).
  friend std::strong_ordering operator<=>(const YKey& x, const YKey& y) {
    if (auto c = x.a.orbit <=> y.a.orbit; c != 0) return c;
    if (auto c = x.i <=> y.i; c != 0) return c;
    if (auto c = x.a.l <=> y.a.l; c != 0) return c;
    return x.a.k <=> y.a.k;
  }
};

class Monomial {
 public:
  using Map = std::map<YKey, int>;

  Monomial() = default;
  static Monomial Y(int i, const SpectralParam& a, int e = 1);
  // Shorthand for the sl2 variable Y_{1, q^l} in orbit c.
  static Monomial sl2(long l, int e = 1) { return Y(1, SpectralParam(l), e); }

  const Map& exps() const { return e_; }
  int exponent(int i, const SpectralParam& a) const;
  bool is_one() const { return e_.empty(); }
  bool dominant() const;
  // Number of Y factors counted with sign.
  int degree() const;

  Monomial inv() const;
  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  Monomial pow(int e) const;
  // Multiply every parameter by q^dl.
  Monomial shifted(long dl) const;
  // Reduce every eps exponent modulo the twisting order.
  Monomial canonical(int twist_order) const;

  std::vector<std::string> orbits() const;
  bool single_orbit() const { return orbits().size() <= 1; }
  long min_l() const;
  long max_l() const;

  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  void set(const YKey& key, int e);

 private:
  Map e_;
};

// A_{i, a^{d_i}} for the base parameter a, covering the untwisted, twisted
// and A_{2n}^(2) special-node formulas.
Monomial a_monomial(const CartanData& cd, int i, const SpectralParam& a);

// (m^{>=L}, m^{<=L-1}); signed factors are sorted by l.  Throws on mixed orbits.
std::pair<Monomial, Monomial> truncate(const Monomial& m, long L);
// (M_+, M_-) = (M^{>=1}, M^{<=0}) for dominant single-orbit M.
std::pair<Monomial, Monomial> plus_minus_split(const Monomial& M);
std::map<std::string, Monomial> orbit_factorize(const Monomial& M);
bool in_C_ell(const Monomial& M, long ell);
Weight weight_of(const Monomial& m, const CartanData& cd);

}  // namespace qcyc
