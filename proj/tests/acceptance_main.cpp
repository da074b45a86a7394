#include <cstdlib>
#include <iostream>
#include <string>

#include "hnc/acceptance.hpp"

// Runs every acceptance criterion and prints one verdict line per criterion.
// An optional argument restricts the run to a single criterion id.
int main(int argc, char** argv) {
  hnc::AcceptanceOptions options;
  bool all = true;
  auto report = [&](const hnc::CriterionResult& r) {
    std::cout << hnc::format_result_line(r) << '\n';
    for (const auto& n : r.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
    all = all && r.passed;
  };
  if (argc > 1) {
    report(hnc::run_criterion(std::atoi(argv[1]), options));
  } else {
    hnc::run_acceptance(options, report);
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
