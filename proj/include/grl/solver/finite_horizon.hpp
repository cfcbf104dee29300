#pragma once

#include "grl/core/gmdp.hpp"
#include "grl/core/modular.hpp"
#include "grl/core/policy.hpp"
#include "grl/core/trajectory.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace grl {

struct SolveResult {
  TabularPolicy policy;
  /// values[t][s] for t = 0..H; values[H] is identically 0.
  std::vector<std::vector<double>> values;
  /// sum_s mu(s) values[0][s]; excludes the modular reward's offset.
  double optimal_value = 0.0;
};

/// Backward induction on the time-extended MDP: reward m(s,t) is collected on
/// occupying (s,t), t = 0 included. Ties go to the lowest action index.
inline SolveResult solve_finite_horizon(const Gmdp& m, const ModularReward& reward) {
  const int n = m.num_states(), na = m.num_actions(), h = m.horizon();
  if (reward.values.size() != static_cast<std::size_t>(m.ground().size())) {
    throw std::invalid_argument("solve_finite_horizon: modular reward shape does not match S x T");
  }
  std::vector<std::vector<double>> values(static_cast<std::size_t>(h) + 1,
                                          std::vector<double>(static_cast<std::size_t>(n), 0.0));
  std::vector<int> actions(static_cast<std::size_t>(h) * n, 0);
  for (int t = h - 1; t >= 0; --t) {
    const auto& next = values[static_cast<std::size_t>(t) + 1];
    for (int s = 0; s < n; ++s) {
      double best = -std::numeric_limits<double>::infinity();
      int best_a = 0;
      for (int a = 0; a < na; ++a) {
        double q = 0.0;
        for (const auto& tr : m.transitions(s, a)) q += tr.prob * next[static_cast<std::size_t>(tr.next)];
        if (q > best) {
          best = q;
          best_a = a;
        }
      }
      values[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] =
          reward.values[static_cast<std::size_t>(t) * n + s] + best;
      actions[static_cast<std::size_t>(t) * n + s] = best_a;
    }
  }
  double opt = 0.0;
  const auto mu = m.initial_distribution();
  for (int s = 0; s < n; ++s) opt += mu[static_cast<std::size_t>(s)] * values[0][static_cast<std::size_t>(s)];
  return {TabularPolicy::deterministic(m, actions), std::move(values), opt};
}

/// E_{tau ~ pi}[sum_{(s,t) in tau} m(s,t)] (offset excluded), by forward propagation.
inline double evaluate_modular(const Gmdp& m, const TabularPolicy& policy, const ModularReward& reward) {
  if (!policy.matches(m)) throw std::invalid_argument("evaluate_modular: policy shape mismatch");
  const int n = m.num_states();
  std::vector<double> occ(m.initial_distribution().begin(), m.initial_distribution().end());
  std::vector<double> next(static_cast<std::size_t>(n));
  double total = 0.0;
  for (int t = 0; t < m.horizon(); ++t) {
    for (int s = 0; s < n; ++s) total += occ[static_cast<std::size_t>(s)] * reward.values[static_cast<std::size_t>(t) * n + s];
    if (t + 1 == m.horizon()) break;
    std::fill(next.begin(), next.end(), 0.0);
    for (int s = 0; s < n; ++s) {
      const double p = occ[static_cast<std::size_t>(s)];
      if (p == 0.0) continue;
      for (int a = 0; a < m.num_actions(); ++a) {
        const double pa = policy.prob(t, s, a);
        if (pa == 0.0) continue;
        for (const auto& tr : m.transitions(s, a)) next[static_cast<std::size_t>(tr.next)] += p * pa * tr.prob;
      }
    }
    occ.swap(next);
  }
  return total;
}

/// The trajectory a deterministic policy induces in a deterministic GMDP.
inline Trajectory follow_policy(const Gmdp& m, const TabularPolicy& policy) {
  if (!m.deterministic()) throw std::invalid_argument("follow_policy: GMDP is not deterministic");
  if (!policy.matches(m) || !policy.is_deterministic()) {
    throw std::invalid_argument("follow_policy: need a deterministic policy of matching shape");
  }
  Trajectory tau;
  int s = *m.initial_state();
  tau.elements.push_back({s, 0});
  for (int t = 0; t + 1 < m.horizon(); ++t) {
    int a = 0;
    while (policy.prob(t, s, a) != 1.0) ++a;
    s = m.transitions(s, a).front().next;
    tau.actions.push_back(a);
    tau.elements.push_back({s, t + 1});
  }
  return tau;
}

inline Trajectory extract_trajectory(const Gmdp& m, const SolveResult& result) {
  if (!m.deterministic()) {
    throw std::invalid_argument("extract_trajectory: requires deterministic dynamics and start state");
  }
  return follow_policy(m, result.policy);
}

/// One-hot policy replaying tau's actions along its states; lowest action elsewhere.
inline TabularPolicy policy_from_trajectory(const Gmdp& m, const Trajectory& tau) {
  validate_structure(m, tau);
  std::vector<int> actions(static_cast<std::size_t>(m.horizon()) * m.num_states(), 0);
  for (std::size_t t = 0; t < tau.actions.size(); ++t) {
    actions[t * static_cast<std::size_t>(m.num_states()) + static_cast<std::size_t>(tau.elements[t].state)] = tau.actions[t];
  }
  return TabularPolicy::deterministic(m, actions);
}

}  // namespace grl
