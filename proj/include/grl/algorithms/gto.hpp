#pragma once

#include "grl/algorithms/trace.hpp"
#include "grl/core/rng.hpp"
#include "grl/semigrad/lower_bounds.hpp"
#include "grl/solver/finite_horizon.hpp"

#include <optional>
#include <stdexcept>

namespace grl {

struct GtoOptions {
  BoundVariant variant = BoundVariant::full;
  int max_iters = 35;
  /// Starting trajectory; a uniform-random admissible one is drawn when absent.
  std::optional<Trajectory> init;
};

struct GtoResult {
  Trajectory trajectory;
  double value = 0.0;
  IterationTrace trace;
};

/// Trajectory optimization for deterministic GMDPs: repeatedly maximize the
/// tight modular lower bound around the current trajectory.
inline GtoResult run_gto(const Gmdp& m, const GlobalReward& f, const GtoOptions& options, Rng& rng) {
  if (!m.deterministic()) throw std::invalid_argument("run_gto: GMDP must be deterministic");
  if (options.max_iters < 0) throw std::invalid_argument("run_gto: max_iters must be >= 0");
  detail::Stopwatch clock;
  const auto& g = m.ground();

  GtoResult out;
  if (options.init) {
    if (!is_admissible(m, *options.init)) throw std::invalid_argument("run_gto: initial trajectory not admissible");
    out.trajectory = *options.init;
  } else {
    out.trajectory = random_trajectory(m, rng);
  }
  out.value = f.evaluate(out.trajectory.flat(g));
  out.trace.records.push_back({0, out.value, 0.0, out.value, out.value, out.value, true, clock.elapsed_ms()});

  for (int it = 1; it <= options.max_iters; ++it) {
    const auto bound = lower_bound(f, out.trajectory, options.variant);
    const auto candidate = extract_trajectory(m, solve_finite_horizon(m, bound));
    const double cand_value = f.evaluate(candidate.flat(g));
    IterationRecord rec;
    rec.iteration = it;
    rec.candidate_objective = cand_value;
    rec.bound_value = bound(out.trajectory.flat(g));
    rec.bound_at_candidate = bound(candidate.flat(g));
    rec.accepted = cand_value > out.value + kImprovementTolerance;
    if (rec.accepted) {
      out.trajectory = candidate;
      out.value = cand_value;
    }
    rec.objective = out.value;
    rec.wall_ms = clock.elapsed_ms();
    out.trace.records.push_back(rec);
    if (!rec.accepted) {
      out.trace.converged = true;
      break;
    }
  }
  return out;
}

inline GtoResult run_gto(const Gmdp& m, const GlobalReward& f, const GtoOptions& options = {}) {
  Rng rng(0);
  return run_gto(m, f, options, rng);
}

}  // namespace grl
