#pragma once

// The q-character ring: integer combinations of monomials, Frenkel-Mukhin
// completion for untwisted fundamentals, sl2 string characters and upper
// truncations.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcyc/cartan.hpp"
#include "qcyc/monomial.hpp"

namespace qcyc {

class QCharacter {
 public:
  using Map = std::map<Monomial, long long>;

  QCharacter() = default;
  explicit QCharacter(const Monomial& m, long long c = 1) { add(m, c); }

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  long long multiplicity(const Monomial& m) const;
  long long dimension() const;

  void add(const Monomial& m, long long c);
  QCharacter& operator+=(const QCharacter& o);
  QCharacter scaled(long long c) const;
  friend QCharacter operator+(QCharacter a, const QCharacter& b) { return a += b; }
  friend QCharacter operator*(const QCharacter& a, const QCharacter& b);
  friend QCharacter operator*(const Monomial& m, const QCharacter& a);
  friend bool operator==(const QCharacter&, const QCharacter&) = default;

  // "Y[1;0] + 2*Y[1;2]^-1", terms in canonical monomial order.
  std::string str() const;

 private:
  Map t_;
};

// The unique monomial of maximal weight; throws if there is none.
Monomial highest_monomial(const QCharacter& chi, const CartanData& cd);

// q-character of V_i(a) by Frenkel-Mukhin completion (untwisted types only).
QCharacter fm_fundamental(const CartanData& cd, int i, const SpectralParam& a, int max_terms = 100000);
// Completion from an arbitrary dominant top monomial; exact for special
// modules such as fundamentals and sl2 strings.
QCharacter fm_complete(const CartanData& cd, const Monomial& top, int max_terms = 100000);

struct QString {
  SpectralParam start;
  int length;
  friend bool operator==(const QString&, const QString&) = default;
};

// Greedy q-string decomposition of a dominant sl2 monomial, step q^2.
std::vector<QString> string_decompose(const Monomial& M);
// Two strings are in special position when their union is a longer string
// containing neither.
bool special_position(const QString& a, const QString& b);

// Closed-form character of the string module L(Y_a Y_{aq^2} ... ) in the sl2
// variables of node i with step 2 * step_half, together with the A-parameters
// (base grid) of each term.
struct StringTerm {
  Monomial ratio;                    // term / top
  std::vector<SpectralParam> a_inv;  // A^{-1} parameters, in order
};
std::vector<StringTerm> string_terms(int i, const QString& s, long step_half);

QCharacter sl2_simple_qchar(const Monomial& M);
QCharacter truncate_upper(const QCharacter& chi, const Monomial& M, long L);
bool verify_useqt(const Monomial& M, long L);

// Solves m = M * prod A^{-e} with e >= 0 over the A-monomials reachable
// below M; returns the exponent map when it exists.
bool in_A_inverse_cone(const Monomial& m, const Monomial& M, const CartanData& cd,
                       std::map<std::pair<int, SpectralParam>, int>* exps = nullptr);

}  // namespace qcyc
