#pragma once

#include "grl/harness/config.hpp"

#include <string>
#include <vector>

namespace grl::harness {

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"design",   "synergies",        "safe_coverage",
                                              "coverage", "bounded_coverage", "entropy"};
  return names;
}

namespace detail {
inline AlgorithmConfig algo(const std::string& name, BoundVariant v, int iters) {
  AlgorithmConfig a;
  a.name = name;
  a.lower_bound = v;
  a.max_iters = iters;
  a.label = default_label(name, v);
  return a;
}

inline ExperimentConfig grid(int side, int horizon, double rho) {
  ExperimentConfig c;
  c.environment.width = side;
  c.environment.height = side;
  c.environment.horizon = horizon;
  c.environment.stochasticity_degree = rho;
  c.environment.initial_state = 0;
  c.runs = 20;
  return c;
}
}  // namespace detail

/// Ready-made experiments on the 400-state grid (100 states for the smaller
/// catalog runs). Where the setup leaves a choice open the default is noted.
inline ExperimentConfig preset(const std::string& name) {
  using detail::algo;
  constexpr auto full = BoundVariant::full;
  constexpr auto sd = BoundVariant::state_dependent;
  constexpr auto greedy = BoundVariant::greedy_state_dependent;
  if (name == "design") {
    // D-optimal design: MI of a Matern-5/2 GP; four environments by lengthscale
    auto c = detail::grid(20, 10, 0.0);
    c.reward.kind = "mutual_information";
    c.gp.lengthscale_cycle = {1.5, 2.0, 2.5, 3.0};
    c.algorithms = {algo("gto", full, 6), algo("gto", sd, 6), algo("gto", greedy, 6), algo("mod", full, 0)};
    c.output_dir = "out/design";
    return c;
  }
  if (name == "synergies") {
    // diverse synergies: 2x2 coverage plus ten random reachable pairs, beta = 2
    auto c = detail::grid(20, 8, 0.1);
    c.reward.kind = "diverse_synergy";
    c.reward.beta = 2.0;
    c.reward.disk = DiskShape::corner_square(2);
    c.reward.num_synergy_sets = 10;
    c.reward.synergy_set_size = 2;
    c.algorithms = {algo("gpo", full, 6), algo("gpo", sd, 6), algo("gpo", greedy, 6), algo("mod", full, 0)};
    for (auto& a : c.algorithms) {
      if (a.name == "gpo") a.n_traj_samples = 20;
    }
    c.output_dir = "out/synergies";
    return c;
  }
  if (name == "safe_coverage") {
    // coverage with radius-1 disks, bonus 500 for never touching 40 random unsafe cells
    auto c = detail::grid(20, 20, 0.0);
    c.reward.kind = "safe_coverage";
    c.reward.penalty = 500.0;
    c.reward.disk = DiskShape::chebyshev(1);
    c.reward.num_unsafe_states = 40;
    c.algorithms = {algo("gto", full, 25), algo("gto", sd, 25), algo("gto", greedy, 25), algo("mod", full, 0)};
    c.output_dir = "out/safe_coverage";
    return c;
  }
  if (name == "coverage") {
    // long-horizon coverage with 2x2 disks: plain vs greedy state-dependent bounds
    auto c = detail::grid(20, 31, 0.0);
    c.reward.kind = "coverage";
    c.reward.disk = DiskShape::corner_square(2);
    c.algorithms = {algo("gto", sd, 35), algo("gto", greedy, 35), algo("mod", full, 0)};
    c.output_dir = "out/coverage";
    return c;
  }
  if (name == "bounded_coverage") {
    auto c = detail::grid(10, 10, 0.0);
    c.reward.kind = "bounded_coverage";
    c.reward.alpha = 0.1;
    c.algorithms = {algo("gto", full, 15), algo("gto", sd, 15), algo("mod", full, 0)};
    c.output_dir = "out/bounded_coverage";
    return c;
  }
  if (name == "entropy") {
    auto c = detail::grid(10, 10, 0.0);
    c.reward.kind = "entropy";
    c.algorithms = {algo("gto", full, 15), algo("mod", full, 0)};
    c.output_dir = "out/entropy";
    return c;
  }
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw ConfigError("unknown preset '" + name + "' (" + known + ")");
}

}  // namespace grl::harness
