#pragma once

// Evaluation modules, tensor products of fundamentals and simple modules for
// U_q(sl2^) over Q(q).

#include <vector>

#include "qcyc/arith/modp.hpp"
#include "qcyc/monomial.hpp"
#include "qcyc/sl2/rep.hpp"

namespace qcyc {

// V(q^l) with x0+ acting by q^{s l} E_10 and x0- by q^{-s l} E_01.
Rep<QFunc> eval_module_signed(long l, int s);
// The sign s for which V(q^2) (x) V(1) is cyclic on its highest weight vector
// and V(1) (x) V(q^2) is not.  Computed once.
int eval_sign();
Rep<QFunc> eval_module(long l);

// V(q^{l_1}) (x) ... (x) V(q^{l_R}), leftmost factor first.
Rep<QFunc> fundamental_tensor(const std::vector<long>& ls);

// Parameters of the Y-factors of an sl2 monomial, with multiplicity, sorted
// ascending.  Throws unless M is dominant and lives in one orbit on node 1.
std::vector<long> sl2_parameters(const Monomial& M);

// L(M) as the submodule generated by the highest weight vector of the tensor
// product with ascending parameters.  embed has one column per basis vector
// of module, in coordinates of ambient.
struct Realized {
  Rep<QFunc> module;
  Rep<QFunc> ambient;
  Matrix<QFunc> embed;
};
Realized realize_simple(const Monomial& M);
Rep<QFunc> simple_module(const Monomial& M);

// Both orders cyclic; the operational simplicity test for W (x) W'.
bool is_simple_tensor(const Rep<QFunc>& w, const Rep<QFunc>& w2);

// Cyclicity of the hw vector in L(M_1) (x) ... (x) L(M_k).
bool is_cyclic_tensor(const std::vector<Monomial>& factors);

// The module at q = q0 over F_p; nullopt if some entry has a pole there.
std::optional<Rep<Fp>> specialize(const Rep<QFunc>& r, const Fp& q0);

// Cyclicity of hw.  The span at a specialization q = q0 has dimension at most
// the generic one, so a full span there is a proof; otherwise the exact
// computation over Q(q) decides.
bool is_cyclic_certified(const Rep<QFunc>& r);

}  // namespace qcyc
