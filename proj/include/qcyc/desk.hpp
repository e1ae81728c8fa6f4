#pragma once

// Desk-scale validation over small sl2 simples: exhaustive triples, the
// pairwise sufficient condition against the oracle, and random ordered
// lists of fundamentals.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qcyc/criteria.hpp"
#include "qcyc/monomial.hpp"
#include "qcyc/parallel.hpp"

namespace qcyc {

// Y0^a Y2^b Y4^c with a, b, c <= 2, excluding 1.
std::vector<Monomial> desk_monomials();

struct DeskReport {
  std::size_t simples = 0;
  std::size_t triples = 0;            // ordered triples with dim <= max_dim
  std::size_t pairs = 0;              // distinct ordered pairs occurring in them
  std::size_t cyclic_pairs = 0;
  std::size_t all_pairs_cyclic = 0;   // triples whose three pairs are cyclic
  std::size_t maincyc_failures = 0;   // ... but the triple is not
  std::size_t plus_pairs = 0;         // distinct (M+, M'+) from cyclic pairs
  std::size_t plus_failures = 0;
  std::size_t vcyc_failures = 0;      // S1+ S2 S3 S1- not cyclic
  std::size_t criterion_true = 0;     // pairs passing pairwise_cyclic_sufficient
  std::size_t criterion_failures = 0; // ... that the oracle rejects
  std::vector<std::string> failures;

  friend bool operator==(const DeskReport&, const DeskReport&) = default;
};

DeskReport run_desk(Backend backend, long max_dim = 64);

struct CycReport {
  std::size_t lists = 0;
  std::size_t failures = 0;
  std::vector<std::string> failed;
  friend bool operator==(const CycReport&, const CycReport&) = default;
};

// count random lists (R <= max_len, l in [0, max_l]) that pass
// fundamental_order_ok, each checked with the cyclic-span oracle.
CycReport random_list_soundness(std::size_t count, std::uint64_t seed, Backend backend, int max_len = 4, long max_l = 8);

// Tensor product V(f_R) (x) ... (x) V(f_1) of an sl2 fundamental list.
bool oracle_cyclic(const FundamentalList& fl);

}  // namespace qcyc
