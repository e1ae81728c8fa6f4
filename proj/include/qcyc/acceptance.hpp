#pragma once

// The ten acceptance criteria as runnable checks.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcyc/parallel.hpp"

namespace qcyc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  Backend backend = Backend::OpenMP;
  std::vector<int> only;  // empty: all criteria
};

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
// on_result is called as each criterion finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// "[PASS] 3 Example 2 reproduction (12.1 s): ..." 
std::string format_line(const CriterionResult& r);

}  // namespace qcyc
