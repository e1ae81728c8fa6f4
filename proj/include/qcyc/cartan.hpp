#pragma once

// Affine Cartan data: the generalized Cartan matrix in Kac's convention
// (C_ij = <alpha_i^vee, alpha_j>), symmetrizers, the constants mu_i and d_i,
// the twisting order and the finite weight lattice P in the omega basis.

#include <string>
#include <vector>

#include <gmpxx.h>

namespace qcyc {

enum class Family {
  A1,      // A_n^(1)
  B1,      // B_n^(1)
  C1,      // C_n^(1)
  D1,      // D_n^(1)
  E1,      // E_n^(1), n = 6, 7, 8
  F1,      // F_4^(1)
  G1,      // G_2^(1)
  A_even,  // A_{2n}^(2)
  A_odd,   // A_{2n-1}^(2)
  D2,      // D_{n+1}^(2)
  E62,     // E_6^(2)
  D43,     // D_4^(3)
};

struct AffineType {
  Family family;
  int n;  // number of nodes minus one

  // Parses Kac labels written "X<k>~<twist>", e.g. "A1~1", "A2~2", "D4~3".
  static AffineType parse(const std::string& s);
  std::string name() const;
  bool valid() const;
  bool untwisted() const;
};

using Weight = std::vector<long long>;  // coordinates in the omega basis

struct CartanData {
  AffineType type;
  int n = 0;
  std::vector<std::vector<int>> C;  // (n+1) x (n+1)
  std::vector<mpq_class> r;         // r_0..r_n, diag(r) C symmetric
  std::vector<int> mu;              // mu_0..mu_n
  std::vector<int> d;               // d_0..d_n (d_0 kept for uniformity)
  int twist_order = 1;
  std::vector<std::vector<int>> finite_C;  // indexed by I = {1..n}, stored 0-based

  // True iff i is the special node n of A_{2n}^(2).
  bool special_node(int i) const { return type.family == Family::A_even && i == n; }
  // alpha_i in the omega basis (column i of the finite Cartan matrix), i in I.
  Weight alpha(int i) const;
  Weight omega(int i) const;
};

CartanData build_cartan(const AffineType& t);
inline CartanData build_cartan(const std::string& s) { return build_cartan(AffineType::parse(s)); }

// b - a is a non-negative integer combination of simple roots.
bool weight_leq(const Weight& a, const Weight& b, const CartanData& cd);

// Checks used by tests: determinant zero, proper principal minors positive.
long long det(const std::vector<std::vector<int>>& m);
bool is_affine_cartan(const std::vector<std::vector<int>>& C);

std::string to_string(const Weight& w);

}  // namespace qcyc
