#pragma once

#include "grl/core/gmdp.hpp"
#include "grl/core/policy.hpp"
#include "grl/core/rng.hpp"
#include "grl/core/trajectory.hpp"
#include "grl/semigrad/lower_bounds.hpp"

#include <stdexcept>

namespace grl {

/// m^E_pi = E_{tau ~ pi}[m_tau], estimated by averaging n_samples per-trajectory bounds.
inline ModularReward expected_lower_bound(const GlobalReward& f, const TabularPolicy& policy,
                                          const Gmdp& m, std::size_t n_samples, Rng& rng,
                                          BoundVariant variant = BoundVariant::full) {
  if (n_samples == 0) throw std::invalid_argument("expected_lower_bound: n_samples must be >= 1");
  ModularReward avg;
  avg.values.assign(static_cast<std::size_t>(m.ground().size()), 0.0);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const auto tau = sample_trajectory(m, policy, rng);
    const auto b = lower_bound(f, tau, variant);
    for (std::size_t k = 0; k < avg.values.size(); ++k) avg.values[k] += b.values[k];
    avg.offset += b.offset;
    if (i == 0) avg.provenance = "expected:" + b.provenance;
  }
  const double inv = 1.0 / static_cast<double>(n_samples);
  for (double& v : avg.values) v *= inv;
  avg.offset *= inv;
  return avg;
}

}  // namespace grl
