#pragma once

// The twelve end-to-end acceptance criteria, runnable from the CLI
// (`verify-all`) and from the acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

namespace plovkit {

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  int samples = 8;  // random ample tuples per sampled positivity check
  int jobs = 1;
  int sweep_dk = 24;  // largest dk in the rank and unimodality sweeps
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // 0 when the criterion has no runtime budget
};

inline constexpr int kCriterionCount = 12;

/// Runs criterion `id` in [1, 12]; exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace plovkit
