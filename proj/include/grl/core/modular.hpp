#pragma once

#include "grl/core/ground.hpp"

#include <span>
#include <string>
#include <vector>

namespace grl {

/// Additive function m(Y) = offset + sum_{v in Y} values[v] over the ground set.
struct ModularReward {
  std::vector<double> values;
  double offset = 0.0;
  /// Set the bound is tight at (empty for surrogates such as MOD).
  std::vector<Element> anchor;
  std::string provenance;

  double operator()(std::span<const Element> set) const {
    double total = offset;
    for (Element v : set) total += values[static_cast<std::size_t>(v)];
    return total;
  }

  double at(const GroundSet& g, int state, int time) const {
    return values[static_cast<std::size_t>(g.flatten({state, time}))];
  }
};

}  // namespace grl
