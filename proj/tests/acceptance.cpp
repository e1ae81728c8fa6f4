// Runs the ten acceptance criteria; one line per criterion, nonzero exit on
// any failure.

#include <cstdlib>
#include <iostream>
#include <string>

#include "qcyc/acceptance.hpp"

int main(int argc, char** argv) {
  qcyc::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--serial")
      opt.backend = qcyc::Backend::Serial;
    else if (a == "--seed" && i + 1 < argc)
      opt.seed = std::stoull(argv[++i]);
    else
      opt.only.push_back(std::stoi(a));
  }
  bool ok = true;
  const auto results = qcyc::run_acceptance(opt, [&ok](const qcyc::CriterionResult& r) {
    std::cout << qcyc::format_line(r) << std::endl;
    ok = ok && r.pass;
  });
  std::cout << (ok ? "ALL PASS" : "FAILURES") << " (" << results.size() << " criteria)" << std::endl;
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
