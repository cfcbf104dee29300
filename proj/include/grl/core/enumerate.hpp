#pragma once

#include "grl/core/errors.hpp"
#include "grl/core/gmdp.hpp"
#include "grl/core/policy.hpp"
#include "grl/core/trajectory.hpp"

#include <functional>
#include <string>
#include <vector>

namespace grl {

/// A positive-probability trajectory together with mu(s_0) * prod P(s'|s,a);
/// p_pi(tau) is this mass times the product of the policy's action probabilities.
struct EnumeratedTrajectory {
  Trajectory trajectory;
  double kernel_mass = 1.0;

  double probability_under(const TabularPolicy& policy) const {
    double p = kernel_mass;
    for (std::size_t t = 0; t < trajectory.actions.size(); ++t) {
      p *= policy.prob(static_cast<int>(t), trajectory.elements[t].state, trajectory.actions[t]);
    }
    return p;
  }
};

/// Every (s_0, a_0, s_1, ..., s_{H-1}) with positive kernel mass, exactly once.
inline std::vector<EnumeratedTrajectory> enumerate_trajectories(const Gmdp& m,
                                                                std::size_t max_count) {
  std::vector<EnumeratedTrajectory> out;
  Trajectory cur;
  const int horizon = m.horizon();

  std::function<void(double)> dfs = [&](double mass) {
    const int t = static_cast<int>(cur.elements.size()) - 1;
    if (t == horizon - 1) {
      if (out.size() >= max_count) {
        throw BudgetExceeded("enumerate_trajectories: more than " + std::to_string(max_count) +
                             " trajectories");
      }
      out.push_back({cur, mass});
      return;
    }
    const int s = cur.elements.back().state;
    for (int a = 0; a < m.num_actions(); ++a) {
      for (const auto& tr : m.transitions(s, a)) {
        cur.actions.push_back(a);
        cur.elements.push_back({tr.next, t + 1});
        dfs(mass * tr.prob);
        cur.elements.pop_back();
        cur.actions.pop_back();
      }
    }
  };

  const auto mu = m.initial_distribution();
  for (int s = 0; s < m.num_states(); ++s) {
    if (mu[static_cast<std::size_t>(s)] <= 0.0) continue;
    cur.elements = {{s, 0}};
    cur.actions.clear();
    dfs(mu[static_cast<std::size_t>(s)]);
  }
  return out;
}

/// Visits every state sequence reachable under `policy` with its probability
/// (actions marginalized). Throws BudgetExceeded past max_leaves sequences.
template <class Visitor>
void for_each_state_sequence(const Gmdp& m, const TabularPolicy& policy, std::size_t max_leaves,
                             Visitor&& visit) {
  if (!policy.matches(m)) throw std::invalid_argument("policy shape does not match GMDP");
  const int horizon = m.horizon();
  std::vector<int> states;
  std::vector<double> next_mass(static_cast<std::size_t>(m.num_states()), 0.0);
  std::size_t leaves = 0;

  std::function<void(double)> dfs = [&](double mass) {
    const int t = static_cast<int>(states.size()) - 1;
    if (t == horizon - 1) {
      if (++leaves > max_leaves) {
        throw BudgetExceeded("state-sequence enumeration exceeded " + std::to_string(max_leaves));
      }
      visit(std::span<const int>(states), mass);
      return;
    }
    const int s = states.back();
    std::vector<double> dist(static_cast<std::size_t>(m.num_states()), 0.0);
    for (int a = 0; a < m.num_actions(); ++a) {
      const double pa = policy.prob(t, s, a);
      if (pa == 0.0) continue;
      for (const auto& tr : m.transitions(s, a)) dist[static_cast<std::size_t>(tr.next)] += pa * tr.prob;
    }
    for (int nx = 0; nx < m.num_states(); ++nx) {
      const double p = dist[static_cast<std::size_t>(nx)];
      if (p <= 0.0) continue;
      states.push_back(nx);
      dfs(mass * p);
      states.pop_back();
    }
  };

  const auto mu = m.initial_distribution();
  for (int s = 0; s < m.num_states(); ++s) {
    if (mu[static_cast<std::size_t>(s)] <= 0.0) continue;
    states = {s};
    dfs(mu[static_cast<std::size_t>(s)]);
  }
}

}  // namespace grl
