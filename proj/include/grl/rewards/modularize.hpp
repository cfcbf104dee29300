#pragma once

#include "grl/core/modular.hpp"
#include "grl/rewards/reward.hpp"

namespace grl {

/// Singleton-value surrogate: entry F({v}) at every v (the MOD baseline's reward).
inline ModularReward modularize(const GlobalReward& reward) {
  const auto& g = reward.ground();
  ModularReward m;
  m.values.resize(static_cast<std::size_t>(g.size()));
  for (Element v = 0; v < g.size(); ++v) {
    const Element single[] = {v};
    m.values[static_cast<std::size_t>(v)] = reward.evaluate(single);
  }
  m.provenance = "modularized";
  return m;
}

}  // namespace grl
