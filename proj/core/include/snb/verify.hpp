#pragma once

#include <functional>
#include <string>
#include <vector>

namespace snb {

// The full verification suite: every theorem-backed guarantee distilled
// into a numbered criterion with an exact expected outcome. The
// acceptance test binary and `snb verify-all` both run these.
//
// Quick keeps the whole suite around a minute (smaller exhaustive orders
// and trial counts); Full runs the real gate: exhaustive sweeps through
// all 59049 five-vertex oriented graphs, the 10^5-trial Monte Carlo
// grid, and the long randomized families.
enum class Level { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string details;
  double elapsed_seconds = 0.0;

  std::string to_line() const;  // "ok 3 - name (details) [1.2s]"
};

using ProgressFn = std::function<void(const CriterionResult&)>;

// Runs criteria 1..13 in order, invoking progress after each. threads
// <= 0 resolves via SNB_THREADS / hardware concurrency. Counterexamples
// found by the conjecture sweeps are archived under archive_dir (unless
// empty) before the criterion reports failure.
std::vector<CriterionResult> run_all(Level level, int threads = 0,
                                     const ProgressFn& progress = {},
                                     const std::string& archive_dir = "");

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace snb
