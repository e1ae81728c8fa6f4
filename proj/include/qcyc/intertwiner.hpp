#pragma once

// Normalized deformed intertwiners T_{W,W'}(z) : W (x) W'(z) -> W'(z) (x) W
// over Q(q)(z), their specializations at z = 1 and the worked examples.

#include <cstddef>
#include <string>
#include <vector>

#include "qcyc/arith/frac.hpp"
#include "qcyc/linalg/matrix.hpp"
#include "qcyc/monomial.hpp"
#include "qcyc/parallel.hpp"
#include "qcyc/sl2/rep.hpp"

namespace qcyc {

struct TMatrix {
  Matrix<ZFunc> T;  // rows: W'(z) (x) W, columns: W (x) W'(z)
  int dim_w = 0, dim_w2 = 0;
};

// Images of the words in the generators applied to hw (x) hw' determine T on
// each weight block; the intertwining identities are then checked exactly.
// Throws std::domain_error if W (x) W'(z) is not cyclic on hw (x) hw' or the
// identities fail.
TMatrix solve_T(const Rep<QFunc>& w, const Rep<QFunc>& w2);

// Dimension of the space of intertwiners W (x) W'(z) -> W'(z) (x) W by direct
// nullspace computation; the reference oracle for solve_T.
struct BruteForceT {
  std::size_t solution_dim = 0;
  Matrix<ZFunc> T;  // normalized, when solution_dim == 1
};
BruteForceT solve_T_bruteforce(const Rep<QFunc>& w, const Rep<QFunc>& w2);

// T * rho_{W (x) W'(z)}(g) == rho_{W'(z) (x) W}(g) * T for the four generators.
bool intertwines(const Matrix<ZFunc>& T, const Rep<ZFunc>& src, const Rep<ZFunc>& dst);

// T_{W',W}(z^{-1}) T_{W,W'}(z) == Id.
bool check_inverse_relation(const Rep<QFunc>& w, const Rep<QFunc>& w2);

// The two composite paths U (x) V(z) (x) W(zw) -> W(zw) (x) V(z) (x) U agree.
bool check_hexagon(const Rep<QFunc>& u, const Rep<QFunc>& v, const Rep<QFunc>& w);

ZFunc substitute_inverse(const ZFunc& f);  // f(z) -> f(1/z)
Matrix<ZFunc> substitute_inverse(const Matrix<ZFunc>& m);

// Valuation of f at z = 1.
long valuation_at_1(const ZFunc& f);
// Coefficient of (z-1)^order in the Laurent expansion at z = 1.  Throws
// std::domain_error if some entry has valuation < order.
QFunc laurent_coefficient_at_1(const ZFunc& f, long order);
Matrix<QFunc> laurent_at_1(const Matrix<ZFunc>& t, long order);

// I_{W,W'} = T_{W,W'}(1); throws std::domain_error on a pole at z = 1.
Matrix<QFunc> intertwiner_I(const Rep<QFunc>& w, const Rep<QFunc>& w2);

struct Check {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct ExampleReport {
  int example = 0;
  std::vector<Check> checks;
  bool pass() const;
};

ExampleReport example_suite(int n, Backend backend = Backend::OpenMP);

}  // namespace qcyc
