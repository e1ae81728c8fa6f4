#pragma once

// Decidable cyclicity conditions: ordering of fundamentals, admissible
// factorizations, the pairwise sufficient condition and the pairwise to
// global inference.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qcyc/cartan.hpp"
#include "qcyc/monomial.hpp"
#include "qcyc/parallel.hpp"

namespace qcyc {

struct Fundamental {
  int i = 1;
  SpectralParam a;
  friend bool operator==(const Fundamental&, const Fundamental&) = default;
};

// Position 0 is the RIGHTMOST tensor factor: [f_1, ..., f_R] denotes
// V(f_R) (x) ... (x) V(f_1).
using FundamentalList = std::vector<Fundamental>;

// a_p / a_r avoids eps^Z q^{-N*} for every r < p.
bool fundamental_order_ok(const FundamentalList& fl, const CartanData& cd);

// The Y-factors of a dominant M, ascending l within each orbit, orbits in
// label order.  The result always satisfies fundamental_order_ok.
FundamentalList admissible_factorization(const Monomial& M, const CartanData& cd);

Monomial product(const FundamentalList& fl);

// Sufficient condition for L(m) (x) L(m2) to be cyclic: on every shared
// orbit, max_l(m2) <= min_l(m).
bool pairwise_cyclic_sufficient(const Monomial& m, const Monomial& m2, const CartanData& cd);

enum class Verdict { Cyclic, Inconclusive };

struct PairWitness {
  std::size_t i = 0, j = 0;
  std::string oracle;
  bool result = false;
};

struct CyclicVerdict {
  Verdict status = Verdict::Cyclic;
  std::vector<PairWitness> pairs;  // every pair i < j that was examined
  std::vector<PairWitness> failing() const;
};

using PairOracle = std::function<bool(std::size_t, std::size_t)>;

// Cyclic iff every pair i < j passes; Inconclusive otherwise (never
// "non-cyclic").  Pair oracles run concurrently under Backend::OpenMP.
CyclicVerdict maincyc_conclude(const std::vector<Monomial>& ms, const PairOracle& pairwise, const std::string& oracle_name,
                               Backend backend = Backend::Serial);

const char* to_string(Verdict v);

}  // namespace qcyc
