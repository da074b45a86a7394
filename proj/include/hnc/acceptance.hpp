#pragma once

// The end-to-end acceptance suite. Each criterion is an independent function
// returning a verdict plus the measured quantities, so the same code backs
// the test binary and `hnc selftest`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hnc {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string summary;             // one line, shown after PASS/FAIL
  std::vector<std::string> notes;  // failures or measured values
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
};

/// Criteria 1..11 in order. Exceptions inside a criterion turn into a failure.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// "[PASS] 1 so(3) regular fibers: ..." style line.
std::string format_result_line(const CriterionResult& r);

}  // namespace hnc
