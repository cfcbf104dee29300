#pragma once

#include "grl/core/gmdp.hpp"
#include "grl/core/policy.hpp"
#include "grl/core/rng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace grl {

/// (s_0,0), ..., (s_{H-1},H-1) together with the H-1 connecting actions.
struct Trajectory {
  std::vector<GroundElement> elements;
  std::vector<int> actions;

  std::vector<int> states() const {
    std::vector<int> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.state);
    return out;
  }

  /// Flat ground-set indices in time order.
  std::vector<Element> flat(const GroundSet& ground) const {
    std::vector<Element> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(ground.flatten(e));
    return out;
  }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

inline Trajectory make_trajectory(std::span<const int> states, std::span<const int> actions) {
  Trajectory tau;
  for (std::size_t t = 0; t < states.size(); ++t) {
    tau.elements.push_back({states[t], static_cast<int>(t)});
  }
  tau.actions.assign(actions.begin(), actions.end());
  return tau;
}

/// Structural check: H elements with times 0..H-1, H-1 actions, all indices in range.
inline void validate_structure(const Gmdp& m, const Trajectory& tau) {
  if (tau.elements.size() != static_cast<std::size_t>(m.horizon())) {
    throw std::invalid_argument("trajectory length " + std::to_string(tau.elements.size()) +
                                " does not match horizon " + std::to_string(m.horizon()));
  }
  if (tau.actions.size() + 1 != tau.elements.size()) {
    throw std::invalid_argument("trajectory must carry H-1 actions");
  }
  for (std::size_t t = 0; t < tau.elements.size(); ++t) {
    const auto& e = tau.elements[t];
    if (e.time != static_cast<int>(t)) throw std::invalid_argument("trajectory times out of order");
    if (e.state < 0 || e.state >= m.num_states()) {
      throw std::invalid_argument("trajectory state out of range");
    }
  }
  for (int a : tau.actions) {
    if (a < 0 || a >= m.num_actions()) throw std::invalid_argument("trajectory action out of range");
  }
}

/// Membership in the dynamics constraint: structurally valid, positive start
/// mass and every transition has positive kernel probability.
inline bool is_admissible(const Gmdp& m, const Trajectory& tau) {
  try {
    validate_structure(m, tau);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (m.initial_distribution()[static_cast<std::size_t>(tau.elements.front().state)] <= 0.0) {
    return false;
  }
  for (std::size_t t = 0; t + 1 < tau.elements.size(); ++t) {
    if (m.probability(tau.elements[t].state, tau.actions[t], tau.elements[t + 1].state) <= 0.0) {
      return false;
    }
  }
  return true;
}

/// p_pi(tau) = mu(s_0) * prod_t pi_t(a_t|s_t) P(s_{t+1}|s_t,a_t).
/// Zero-probability transitions yield 0; malformed trajectories throw.
inline double trajectory_probability(const Gmdp& m, const TabularPolicy& policy,
                                     const Trajectory& tau) {
  if (!policy.matches(m)) throw std::invalid_argument("policy shape does not match GMDP");
  validate_structure(m, tau);
  double p = m.initial_distribution()[static_cast<std::size_t>(tau.elements.front().state)];
  for (std::size_t t = 0; t + 1 < tau.elements.size() && p > 0.0; ++t) {
    const int s = tau.elements[t].state;
    const int a = tau.actions[t];
    p *= policy.prob(static_cast<int>(t), s, a) * m.probability(s, a, tau.elements[t + 1].state);
  }
  return p;
}

namespace detail {
inline int sample_next(const Gmdp& m, int s, int a, Rng& rng) {
  const auto row = m.transitions(s, a);
  const double u = uniform01(rng);
  double acc = 0.0;
  for (const auto& t : row) {
    acc += t.prob;
    if (u < acc) return t.next;
  }
  return row.back().next;
}
}  // namespace detail

/// Samples tau ~ p_pi. Consumes 1 + 2(H-1) draws regardless of the policy.
inline Trajectory sample_trajectory(const Gmdp& m, const TabularPolicy& policy, Rng& rng) {
  if (!policy.matches(m)) throw std::invalid_argument("policy shape does not match GMDP");
  Trajectory tau;
  tau.elements.reserve(static_cast<std::size_t>(m.horizon()));
  int s = static_cast<int>(sample_index(m.initial_distribution(), rng));
  tau.elements.push_back({s, 0});
  for (int t = 0; t + 1 < m.horizon(); ++t) {
    const int a = static_cast<int>(sample_index(policy.row(t, s), rng));
    s = detail::sample_next(m, s, a, rng);
    tau.actions.push_back(a);
    tau.elements.push_back({s, t + 1});
  }
  return tau;
}

/// Uniform-random admissible trajectory (random actions).
inline Trajectory random_trajectory(const Gmdp& m, Rng& rng) {
  return sample_trajectory(m, TabularPolicy::uniform(m), rng);
}

}  // namespace grl
