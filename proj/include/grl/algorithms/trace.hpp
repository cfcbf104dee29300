#pragma once

#include <chrono>
#include <vector>

namespace grl {

/// One bound-and-solve step. Record 0 describes the initial iterate.
struct IterationRecord {
  int iteration = 0;
  /// Objective of the accepted iterate after this step: F(tau_t) or J-hat(pi_t).
  double objective = 0.0;
  double objective_std_error = 0.0;
  /// Objective of the solver's output before the acceptance test.
  double candidate_objective = 0.0;
  /// Bound built around the previous iterate, evaluated there (offset included).
  double bound_value = 0.0;
  /// The same bound evaluated at the solver's output.
  double bound_at_candidate = 0.0;
  bool accepted = false;
  double wall_ms = 0.0;
};

struct IterationTrace {
  std::vector<IterationRecord> records;
  /// True when the loop stopped because a step failed to improve.
  bool converged = false;

  double final_objective() const { return records.empty() ? 0.0 : records.back().objective; }
};

namespace detail {
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};
}  // namespace detail

inline constexpr double kImprovementTolerance = 1e-9;

}  // namespace grl
