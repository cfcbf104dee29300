#pragma once

#include "grl/core/enumerate.hpp"
#include "grl/core/errors.hpp"
#include "grl/core/objective.hpp"
#include "grl/rewards/reward.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace grl {

struct BruteForceResult {
  Trajectory trajectory;
  double value = -std::numeric_limits<double>::infinity();
  std::size_t candidates = 0;
};

/// argmax over admissible trajectories of F(tau). In deterministic GMDPs this is
/// the optimal non-Markovian value.
inline BruteForceResult brute_force_optimum(const Gmdp& m, const GlobalReward& f,
                                            std::size_t max_count = 2'000'000) {
  if (!m.deterministic()) throw std::invalid_argument("brute_force_optimum: GMDP must be deterministic");
  BruteForceResult best;
  const auto all = enumerate_trajectories(m, max_count);
  best.candidates = all.size();
  for (const auto& e : all) {
    const double v = f.evaluate(e.trajectory.flat(m.ground()));
    if (v > best.value) {
      best.value = v;
      best.trajectory = e.trajectory;
    }
  }
  return best;
}

struct MarkovReferenceResult {
  TabularPolicy policy;
  double value = 0.0;
  std::size_t policies = 0;
};

/// Exact max of J over all deterministic Markovian non-stationary policies
/// (|A|^(|S| H) candidates); a tractable reference for tiny stochastic GMDPs.
inline MarkovReferenceResult best_deterministic_markov_policy(const Gmdp& m, const GlobalReward& f,
                                                              std::size_t max_policies = 1u << 20) {
  const std::size_t cells = static_cast<std::size_t>(m.horizon()) * m.num_states();
  const double count = std::pow(static_cast<double>(m.num_actions()), static_cast<double>(cells));
  if (count > static_cast<double>(max_policies)) {
    throw BudgetExceeded("best_deterministic_markov_policy: " + std::to_string(count) +
                         " policies exceed budget");
  }
  std::vector<int> actions(cells, 0);
  MarkovReferenceResult best{TabularPolicy::deterministic(m, actions),
                             -std::numeric_limits<double>::infinity(), 0};
  while (true) {
    const auto pi = TabularPolicy::deterministic(m, actions);
    const double j = evaluate_policy_objective(m, pi, f, ExactMode{}).mean;
    ++best.policies;
    if (j > best.value) {
      best.value = j;
      best.policy = pi;
    }
    std::size_t i = 0;
    while (i < cells && ++actions[i] == m.num_actions()) actions[i++] = 0;
    if (i == cells) break;
  }
  return best;
}

}  // namespace grl
