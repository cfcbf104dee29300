#pragma once

#include "grl/core/gmdp.hpp"

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace grl {

/// Markovian non-stationary policy: probs[t][s][a].
class TabularPolicy {
 public:
  static constexpr double kRowTolerance = 1e-12;

  TabularPolicy(int horizon, int num_states, int num_actions, std::vector<double> probs)
      : horizon_(horizon), num_states_(num_states), num_actions_(num_actions), probs_(std::move(probs)) {
    if (probs_.size() != static_cast<std::size_t>(horizon) * num_states * num_actions) {
      throw std::invalid_argument("TabularPolicy: probability table has wrong size");
    }
    for (int t = 0; t < horizon_; ++t) {
      for (int s = 0; s < num_states_; ++s) {
        double sum = 0.0;
        for (double p : row(t, s)) {
          if (!(p >= 0.0)) throw std::invalid_argument("TabularPolicy: negative probability");
          sum += p;
        }
        if (std::abs(sum - 1.0) > kRowTolerance) {
          throw std::invalid_argument("TabularPolicy: row does not sum to 1");
        }
      }
    }
  }

  static TabularPolicy uniform(const Gmdp& m) {
    const std::size_t n = static_cast<std::size_t>(m.horizon()) * m.num_states() * m.num_actions();
    return {m.horizon(), m.num_states(), m.num_actions(),
            std::vector<double>(n, 1.0 / m.num_actions())};
  }

  /// One-hot policy from an action table indexed [t * num_states + s].
  static TabularPolicy deterministic(const Gmdp& m, std::span<const int> actions) {
    const std::size_t cells = static_cast<std::size_t>(m.horizon()) * m.num_states();
    if (actions.size() != cells) throw std::invalid_argument("TabularPolicy: action table size");
    std::vector<double> probs(cells * m.num_actions(), 0.0);
    for (std::size_t c = 0; c < cells; ++c) {
      if (actions[c] < 0 || actions[c] >= m.num_actions()) {
        throw std::invalid_argument("TabularPolicy: action out of range");
      }
      probs[c * m.num_actions() + actions[c]] = 1.0;
    }
    return {m.horizon(), m.num_states(), m.num_actions(), std::move(probs)};
  }

  int horizon() const { return horizon_; }
  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }

  std::span<const double> row(int t, int s) const {
    return {probs_.data() + offset(t, s), static_cast<std::size_t>(num_actions_)};
  }
  double prob(int t, int s, int a) const { return probs_[offset(t, s) + a]; }

  bool matches(const Gmdp& m) const {
    return horizon_ == m.horizon() && num_states_ == m.num_states() &&
           num_actions_ == m.num_actions();
  }

  bool is_deterministic() const {
    for (double p : probs_) {
      if (p != 0.0 && p != 1.0) return false;
    }
    return true;
  }

  friend bool operator==(const TabularPolicy&, const TabularPolicy&) = default;

 private:
  std::size_t offset(int t, int s) const {
    return (static_cast<std::size_t>(t) * num_states_ + s) * num_actions_;
  }

  int horizon_;
  int num_states_;
  int num_actions_;
  std::vector<double> probs_;
};

}  // namespace grl
