#pragma once

#include "grl/gp/mutual_information.hpp"
#include "grl/harness/config.hpp"
#include "grl/rewards/additive.hpp"
#include "grl/rewards/composite.hpp"
#include "grl/rewards/count_based.hpp"
#include "grl/rewards/coverage.hpp"
#include "grl/rewards/synergy.hpp"

#include <numeric>

namespace grl::harness {

/// Named random streams derived from a run's seed.
enum class Stream : std::uint64_t { synergy = 1, unsafe = 2, init = 3, algorithm = 4, evaluation = 5 };

inline Rng stream_rng(std::uint64_t seed, Stream s) {
  return Rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
}

inline std::uint64_t run_seed(const ExperimentConfig& c, int run) { return c.seed + static_cast<std::uint64_t>(run); }

inline Gmdp build_environment(const ExperimentConfig& c) { return build_grid(c.environment); }

inline int start_state(const ExperimentConfig& c) { return c.environment.initial_state.value_or(0); }

/// k distinct items of [0, n) by partial Fisher-Yates.
inline std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  k = std::min(k, n);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + uniform_index(n - i, rng)]);
  idx.resize(k);
  return idx;
}

/// Synergy sets over elements (s, t) reachable from the start by time t
/// (Manhattan distance at most t), so every set can in principle be completed.
inline std::vector<std::vector<Element>> draw_synergy_sets(const ExperimentConfig& c, const Gmdp& m,
                                                           std::uint64_t seed) {
  const auto& geo = *m.grid();
  const auto& g = m.ground();
  const int s0 = start_state(c);
  std::vector<Element> reachable;
  for (Element v = 0; v < g.size(); ++v) {
    if (geo.manhattan(s0, g.state_of(v)) <= g.time_of(v)) reachable.push_back(v);
  }
  auto rng = stream_rng(seed, Stream::synergy);
  std::vector<std::vector<Element>> sets;
  for (int i = 0; i < c.reward.num_synergy_sets; ++i) {
    std::vector<Element> set;
    for (auto j : sample_without_replacement(reachable.size(), static_cast<std::size_t>(c.reward.synergy_set_size), rng)) {
      set.push_back(reachable[j]);
    }
    std::sort(set.begin(), set.end());
    sets.push_back(std::move(set));
  }
  return sets;
}

/// Unsafe states drawn uniformly among all states except the start.
inline std::vector<int> draw_unsafe_states(const ExperimentConfig& c, const Gmdp& m, std::uint64_t seed) {
  const int s0 = start_state(c);
  std::vector<int> candidates;
  for (int s = 0; s < m.num_states(); ++s) {
    if (s != s0) candidates.push_back(s);
  }
  auto rng = stream_rng(seed, Stream::unsafe);
  std::vector<int> out;
  for (auto j : sample_without_replacement(candidates.size(), static_cast<std::size_t>(c.reward.num_unsafe_states), rng)) {
    out.push_back(candidates[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline gp::GpModel build_gp_model(const ExperimentConfig& c, const Gmdp& m, int run) {
  gp::GpModel model;
  model.locations = gp::grid_locations(*m.grid());
  model.kernel.nu = gp::parse_nu(c.gp.nu);
  model.kernel.lengthscale = c.gp.lengthscale;
  if (!c.gp.lengthscale_cycle.empty()) {
    model.kernel.lengthscale = c.gp.lengthscale_cycle[static_cast<std::size_t>(run) % c.gp.lengthscale_cycle.size()];
  }
  model.kernel.signal_variance = c.gp.signal_variance;
  model.noise_variance = c.gp.noise_variance;
  return model;
}

/// The global reward of one run: fixed parts from the config, random parts
/// (synergy sets, unsafe states, GP lengthscale) from the run's seed.
inline RewardPtr build_reward(const ExperimentConfig& c, const Gmdp& m, int run) {
  const auto seed = run_seed(c, run);
  const auto& g = m.ground();
  const auto& rc = c.reward;
  auto disks = [&] { return grid_disks(*m.grid(), rc.disk); };
  auto sets = [&] { return rc.synergy_sets ? *rc.synergy_sets : draw_synergy_sets(c, m, seed); };
  if (rc.kind == "coverage") return coverage_reward(g, disks());
  if (rc.kind == "bounded_coverage") return bounded_curvature_coverage(g, rc.alpha);
  if (rc.kind == "entropy") return entropy_reward(g);
  if (rc.kind == "synergy") return synergy_reward(g, sets(), rc.beta);
  if (rc.kind == "diverse_synergy") return diverse_synergy_reward(g, disks(), sets(), rc.beta);
  if (rc.kind == "safe_coverage") {
    auto unsafe = rc.unsafe_states ? *rc.unsafe_states : draw_unsafe_states(c, m, seed);
    return safe_coverage_reward(g, disks(), std::move(unsafe), rc.penalty);
  }
  if (rc.kind == "mutual_information") return gp::mutual_information_reward(g, build_gp_model(c, m, run));
  if (rc.kind == "additive") return additive_reward(g, *rc.weights);
  throw ConfigError("/reward/kind: unknown reward kind '" + rc.kind + "'");
}

}  // namespace grl::harness
