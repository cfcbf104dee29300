#pragma once

#include "grl/core/enumerate.hpp"
#include "grl/core/gmdp.hpp"
#include "grl/core/policy.hpp"
#include "grl/core/rng.hpp"
#include "grl/core/trajectory.hpp"
#include "grl/rewards/reward.hpp"

#include <cmath>
#include <variant>
#include <vector>

namespace grl {

struct ObjectiveEstimate {
  double mean = 0.0;
  /// Standard error of the mean; 0 in exact mode.
  double std_error = 0.0;
  std::size_t samples = 0;
};

struct ExactMode {
  std::size_t max_sequences = 200000;
};

struct MonteCarloMode {
  std::size_t samples = 1000;
  Rng* rng = nullptr;
};

using EvaluationMode = std::variant<ExactMode, MonteCarloMode>;

inline std::vector<Element> flat_states(const GroundSet& g, std::span<const int> states) {
  std::vector<Element> out(states.size());
  for (std::size_t t = 0; t < states.size(); ++t) {
    out[t] = g.flatten({states[t], static_cast<int>(t)});
  }
  return out;
}

/// J(pi) = E_{tau ~ p_pi}[F(tau)], exactly by enumeration or by Monte Carlo.
inline ObjectiveEstimate evaluate_policy_objective(const Gmdp& m, const TabularPolicy& policy,
                                                   const GlobalReward& reward,
                                                   const EvaluationMode& mode) {
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    ObjectiveEstimate est;
    double total = 0.0;
    for_each_state_sequence(m, policy, exact->max_sequences,
                            [&](std::span<const int> states, double p) {
                              total += p * reward.evaluate(flat_states(m.ground(), states));
                              ++est.samples;
                            });
    est.mean = total;
    return est;
  }
  const auto& mc = std::get<MonteCarloMode>(mode);
  if (mc.samples == 0 || mc.rng == nullptr) {
    throw std::invalid_argument("monte carlo evaluation needs samples >= 1 and an rng");
  }
  // Welford
  double mean = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < mc.samples; ++i) {
    const auto tau = sample_trajectory(m, policy, *mc.rng);
    const double f = reward.evaluate(tau.flat(m.ground()));
    const double delta = f - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (f - mean);
  }
  ObjectiveEstimate est;
  est.mean = mean;
  est.samples = mc.samples;
  if (mc.samples > 1) {
    const double n = static_cast<double>(mc.samples);
    est.std_error = std::sqrt(m2 / (n - 1.0) / n);
  }
  return est;
}

}  // namespace grl
