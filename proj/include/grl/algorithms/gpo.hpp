#pragma once

#include "grl/algorithms/trace.hpp"
#include "grl/core/errors.hpp"
#include "grl/core/objective.hpp"
#include "grl/semigrad/expected.hpp"
#include "grl/solver/finite_horizon.hpp"

#include <optional>
#include <stdexcept>

namespace grl {

enum class Evaluation { automatic, exact, monte_carlo };

struct GpoOptions {
  BoundVariant variant = BoundVariant::full;
  int max_iters = 35;
  std::size_t n_traj_samples = 20;
  /// Monte Carlo trajectories per objective estimate.
  std::size_t eval_samples = 20;
  /// automatic: exact when the start policy's support enumerates within budget.
  Evaluation evaluation = Evaluation::automatic;
  std::size_t exact_budget = 200000;
  /// Uniform policy when absent.
  std::optional<TabularPolicy> init;
};

struct GpoResult {
  TabularPolicy policy;
  ObjectiveEstimate objective;
  IterationTrace trace;
  bool exact_evaluation = false;
};

/// Policy optimization for stochastic GMDPs: maximize the Monte Carlo expected
/// lower bound around the current policy, keep the result while J improves.
/// Candidates are compared on common random numbers (one fixed evaluation seed).
inline GpoResult run_gpo(const Gmdp& m, const GlobalReward& f, const GpoOptions& options, Rng& rng) {
  if (options.n_traj_samples == 0) throw std::invalid_argument("run_gpo: n_traj_samples must be >= 1");
  if (options.eval_samples == 0) throw std::invalid_argument("run_gpo: eval_samples must be >= 1");
  if (options.max_iters < 0) throw std::invalid_argument("run_gpo: max_iters must be >= 0");
  detail::Stopwatch clock;

  GpoResult out{options.init ? *options.init : TabularPolicy::uniform(m), {}, {}, false};
  if (!out.policy.matches(m)) throw std::invalid_argument("run_gpo: initial policy shape mismatch");

  const std::uint64_t eval_seed = rng();
  bool exact = options.evaluation == Evaluation::exact;
  ObjectiveEstimate start;
  if (options.evaluation == Evaluation::automatic) {
    try {
      start = evaluate_policy_objective(m, out.policy, f, ExactMode{options.exact_budget});
      exact = true;
    } catch (const BudgetExceeded&) {
      exact = false;
    }
  }
  auto evaluate = [&](const TabularPolicy& pi) {
    if (exact) return evaluate_policy_objective(m, pi, f, ExactMode{options.exact_budget});
    Rng paired(eval_seed);
    return evaluate_policy_objective(m, pi, f, MonteCarloMode{options.eval_samples, &paired});
  };
  if (!(exact && options.evaluation == Evaluation::automatic)) start = evaluate(out.policy);
  out.exact_evaluation = exact;
  out.objective = start;
  out.trace.records.push_back(
      {0, start.mean, start.std_error, start.mean, 0.0, 0.0, true, clock.elapsed_ms()});

  for (int it = 1; it <= options.max_iters; ++it) {
    const auto bound = expected_lower_bound(f, out.policy, m, options.n_traj_samples, rng, options.variant);
    const auto solved = solve_finite_horizon(m, bound);
    const auto cand = evaluate(solved.policy);
    IterationRecord rec;
    rec.iteration = it;
    rec.candidate_objective = cand.mean;
    rec.bound_value = evaluate_modular(m, out.policy, bound) + bound.offset;
    rec.bound_at_candidate = solved.optimal_value + bound.offset;
    rec.accepted = cand.mean > out.objective.mean + kImprovementTolerance;
    if (rec.accepted) {
      out.policy = solved.policy;
      out.objective = cand;
    }
    rec.objective = out.objective.mean;
    rec.objective_std_error = out.objective.std_error;
    rec.wall_ms = clock.elapsed_ms();
    out.trace.records.push_back(rec);
    if (!rec.accepted) {
      out.trace.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace grl
