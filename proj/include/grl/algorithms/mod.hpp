#pragma once

#include "grl/core/objective.hpp"
#include "grl/rewards/modularize.hpp"
#include "grl/solver/finite_horizon.hpp"

namespace grl {

struct ModResult {
  TabularPolicy policy;
  /// True objective under F, not the modular surrogate.
  ObjectiveEstimate objective;
  /// Optimal value of the additive surrogate (a classic MDP return).
  double surrogate_value = 0.0;
};

/// Optimal policy for the additive surrogate F({v}) (interactions ignored).
inline ModResult run_mod_baseline(const Gmdp& m, const GlobalReward& f,
                                  const EvaluationMode& mode = ExactMode{}) {
  const auto surrogate = modularize(f);
  auto solved = solve_finite_horizon(m, surrogate);
  ObjectiveEstimate j;
  if (m.deterministic()) {
    j.mean = f.evaluate(follow_policy(m, solved.policy).flat(m.ground()));
    j.samples = 1;
  } else {
    j = evaluate_policy_objective(m, solved.policy, f, mode);
  }
  return {std::move(solved.policy), j, solved.optimal_value + surrogate.offset};
}

}  // namespace grl
