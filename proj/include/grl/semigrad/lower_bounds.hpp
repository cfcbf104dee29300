#pragma once

#include "grl/core/modular.hpp"
#include "grl/core/trajectory.hpp"
#include "grl/rewards/reward.hpp"
#include "grl/semigrad/permutation.hpp"

#include <stdexcept>
#include <string_view>
#include <vector>

namespace grl {

enum class BoundVariant { full, state_dependent, greedy_state_dependent };

inline std::string_view variant_name(BoundVariant v) {
  switch (v) {
    case BoundVariant::full: return "full";
    case BoundVariant::state_dependent: return "state_dependent";
    case BoundVariant::greedy_state_dependent: return "greedy_state_dependent";
  }
  return "unknown";
}

inline BoundVariant parse_variant(std::string_view s) {
  if (s == "full") return BoundVariant::full;
  if (s == "state_dependent") return BoundVariant::state_dependent;
  if (s == "greedy_state_dependent") return BoundVariant::greedy_state_dependent;
  throw std::invalid_argument("unknown lower bound variant '" + std::string(s) + "'");
}

/// Extreme point of the subdifferential: values[sigma(i)] = F(S_i) - F(S_{i-1}).
/// Tight at X and below F everywhere when F is submodular.
inline ModularReward submodular_lower_bound(const GlobalReward& f, std::span<const Element> anchor,
                                            const Permutation& sigma) {
  const auto& g = f.ground();
  if (!is_anchored_at(g, sigma, anchor)) {
    throw std::invalid_argument("submodular_lower_bound: permutation is not anchored at X");
  }
  ModularReward m;
  m.values.assign(static_cast<std::size_t>(g.size()), 0.0);
  auto acc = f.accumulator();
  // normalized view: the chain telescopes to F(X) - F(empty)
  m.offset = acc->value();
  for (Element v : sigma.order) m.values[static_cast<std::size_t>(v)] = acc->add(v);
  m.anchor.assign(anchor.begin(), anchor.end());
  m.provenance = "submodular";
  return m;
}

/// m_X(Y) = G(X) - sum_{j in X\Y} G(j|X\j) + sum_{j in Y\X} G(j|empty), stored as
/// per-element values plus a constant offset.
inline ModularReward supermodular_lower_bound(const GlobalReward& g_fn, std::span<const Element> anchor) {
  const auto& g = g_fn.ground();
  ModularReward m;
  m.values.assign(static_cast<std::size_t>(g.size()), 0.0);
  const auto empty = g_fn.accumulator();
  for (Element v = 0; v < g.size(); ++v) m.values[static_cast<std::size_t>(v)] = empty->gain(v);

  std::vector<char> in_anchor(static_cast<std::size_t>(g.size()), 0);
  for (Element v : anchor) {
    if (!g.contains(v)) throw std::invalid_argument("supermodular_lower_bound: element outside V");
    in_anchor[static_cast<std::size_t>(v)] = 1;
  }
  const double at_anchor = g_fn.evaluate(anchor);
  double sum_last = 0.0;
  std::vector<Element> rest;
  for (Element j : anchor) {
    rest.clear();
    for (Element u : anchor) {
      if (u != j) rest.push_back(u);
    }
    const double last = at_anchor - g_fn.evaluate(rest);
    m.values[static_cast<std::size_t>(j)] = last;
    sum_last += last;
  }
  m.offset = at_anchor - sum_last;
  m.anchor.assign(anchor.begin(), anchor.end());
  m.provenance = "supermodular";
  return m;
}

namespace detail {
inline void require_state_level(const GlobalReward& f, const char* who) {
  if (!f.time_invariant()) {
    throw std::invalid_argument(std::string(who) + ": reward '" + f.name() + "' is not time invariant");
  }
  if (!f.monotone()) {
    throw std::invalid_argument(std::string(who) + ": reward '" + f.name() + "' is not monotone");
  }
}

inline std::vector<char> visited_states(const GroundSet& g, const Trajectory& tau) {
  std::vector<char> visited(static_cast<std::size_t>(g.num_states()), 0);
  for (const auto& e : tau.elements) visited[static_cast<std::size_t>(e.state)] = 1;
  return visited;
}
}  // namespace detail

/// Greedy ordering of the unvisited states by marginal gain over tau (ties -> lower
/// state index); each state's H copies follow consecutively, the copies of
/// visited states at other times come last in ascending flat index.
inline Permutation greedy_permutation(const GlobalReward& f, const Trajectory& tau) {
  detail::require_state_level(f, "greedy_permutation");
  const auto& g = f.ground();
  const auto anchor = tau.flat(g);
  const auto visited = detail::visited_states(g, tau);

  auto acc = f.accumulator();
  for (Element v : anchor) acc->add(v);

  std::vector<int> remaining;
  for (int s = 0; s < g.num_states(); ++s) {
    if (!visited[static_cast<std::size_t>(s)]) remaining.push_back(s);
  }
  std::vector<int> ordered;
  ordered.reserve(remaining.size());
  while (!remaining.empty()) {
    std::size_t best = 0;
    double best_gain = acc->gain(g.flatten({remaining[0], 0}));
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      const double gain = acc->gain(g.flatten({remaining[i], 0}));
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    acc->add(g.flatten({remaining[best], 0}));
    ordered.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }

  Permutation sigma;
  sigma.order = anchor;
  sigma.anchor_size = anchor.size();
  for (int s : ordered) {
    for (int t = 0; t < g.horizon(); ++t) sigma.order.push_back(g.flatten({s, t}));
  }
  std::vector<char> placed(static_cast<std::size_t>(g.size()), 0);
  for (Element v : sigma.order) placed[static_cast<std::size_t>(v)] = 1;
  for (Element v = 0; v < g.size(); ++v) {
    if (!placed[static_cast<std::size_t>(v)]) sigma.order.push_back(v);
  }
  return sigma;
}

/// Bound for rewards that depend only on visited states:
///   (s,t) in tau            -> prefix marginal along tau,
///   s never visited by tau  -> F(s | tau, earlier unvisited states) / H at every t,
///   s visited at another t  -> 0.
/// Unvisited states are taken in the order they first appear in sigma
/// (default: ascending state index).
inline ModularReward state_dependent_lower_bound(const GlobalReward& f, const Trajectory& tau,
                                                 const Permutation* sigma = nullptr) {
  detail::require_state_level(f, "state_dependent_lower_bound");
  const auto& g = f.ground();
  const auto anchor = tau.flat(g);
  if (sigma != nullptr && !is_anchored_at(g, *sigma, anchor)) {
    throw std::invalid_argument("state_dependent_lower_bound: permutation is not anchored at tau");
  }
  const auto visited = detail::visited_states(g, tau);

  std::vector<int> unvisited_order;
  if (sigma != nullptr) {
    std::vector<char> seen(static_cast<std::size_t>(g.num_states()), 0);
    for (std::size_t i = sigma->anchor_size; i < sigma->order.size(); ++i) {
      const int s = g.state_of(sigma->order[i]);
      if (!visited[static_cast<std::size_t>(s)] && !seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = 1;
        unvisited_order.push_back(s);
      }
    }
  } else {
    for (int s = 0; s < g.num_states(); ++s) {
      if (!visited[static_cast<std::size_t>(s)]) unvisited_order.push_back(s);
    }
  }

  ModularReward m;
  m.values.assign(static_cast<std::size_t>(g.size()), 0.0);
  auto acc = f.accumulator();
  m.offset = acc->value();
  for (Element v : anchor) m.values[static_cast<std::size_t>(v)] = acc->add(v);
  const double h = g.horizon();
  for (int s : unvisited_order) {
    const double share = acc->add(g.flatten({s, 0})) / h;
    for (int t = 0; t < g.horizon(); ++t) m.values[static_cast<std::size_t>(g.flatten({s, t}))] = share;
  }
  m.anchor = anchor;
  m.provenance = sigma != nullptr ? "state_dependent(sigma)" : "state_dependent";
  return m;
}

/// Sum of a submodular bound on Q (given sigma) and the supermodular bound on G.
inline ModularReward bp_lower_bound(const GlobalReward& f, std::span<const Element> anchor,
                                    const Permutation& sigma) {
  const auto* parts = f.decomposition();
  if (parts == nullptr) throw std::invalid_argument("bp_lower_bound: reward has no decomposition");
  auto m = submodular_lower_bound(*parts->submodular, anchor, sigma);
  const auto sup = supermodular_lower_bound(*parts->supermodular, anchor);
  for (std::size_t i = 0; i < m.values.size(); ++i) m.values[i] += sup.values[i];
  m.offset += sup.offset + parts->constant;
  m.provenance = "bp";
  return m;
}

namespace detail {
inline ModularReward submodular_part_bound(const GlobalReward& q, const Trajectory& tau,
                                           BoundVariant variant) {
  const auto& g = q.ground();
  switch (variant) {
    case BoundVariant::full: {
      const auto anchor = tau.flat(g);
      return submodular_lower_bound(q, anchor, anchored_permutation(g, anchor));
    }
    case BoundVariant::state_dependent:
      return state_dependent_lower_bound(q, tau);
    case BoundVariant::greedy_state_dependent: {
      const auto sigma = greedy_permutation(q, tau);
      auto m = state_dependent_lower_bound(q, tau, &sigma);
      m.provenance = "greedy_state_dependent";
      return m;
    }
  }
  throw std::logic_error("unreachable");
}
}  // namespace detail

/// Tight modular lower bound of F about tau, dispatched on the reward's kind.
/// The variant selects the construction for the submodular part.
inline ModularReward lower_bound(const GlobalReward& f, const Trajectory& tau, BoundVariant variant) {
  const auto& g = f.ground();
  switch (f.kind()) {
    case RewardKind::modular:
    case RewardKind::submodular:
      return detail::submodular_part_bound(f, tau, variant);
    case RewardKind::supermodular: {
      const auto anchor = tau.flat(g);
      return supermodular_lower_bound(f, anchor);
    }
    case RewardKind::bp:
    case RewardKind::arbitrary: {
      const auto* parts = f.decomposition();
      if (parts == nullptr) {
        throw std::invalid_argument("lower_bound: reward '" + f.name() +
                                    "' needs an explicit (Q, G) decomposition");
      }
      auto m = detail::submodular_part_bound(*parts->submodular, tau, variant);
      const auto anchor = tau.flat(g);
      const auto sup = supermodular_lower_bound(*parts->supermodular, anchor);
      for (std::size_t i = 0; i < m.values.size(); ++i) m.values[i] += sup.values[i];
      m.offset += sup.offset + parts->constant;
      m.provenance = "bp:" + m.provenance;
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace grl
