#pragma once

#include "grl/core/ground.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grl {

/// Grid moves, in action-index order.
enum class Move : int { left = 0, right = 1, up = 2, down = 3, stay = 4 };
inline constexpr int kNumMoves = 5;

inline std::string_view move_name(Move m) {
  static constexpr std::array<std::string_view, kNumMoves> names{"left", "right", "up", "down",
                                                                 "stay"};
  return names[static_cast<std::size_t>(m)];
}

struct Transition {
  int next = 0;
  double prob = 0.0;
};

/// Row-major grid layout: state = y * width + x with y = 0 the bottom row.
struct GridGeometry {
  int width = 1;
  int height = 1;

  int num_states() const { return width * height; }
  int x(int s) const { return s % width; }
  int y(int s) const { return s / width; }
  int index(int x, int y) const { return y * width + x; }
  bool inside(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

  /// Target of a move; off-grid moves stay in place.
  int apply(int s, Move m) const {
    int nx = x(s), ny = y(s);
    switch (m) {
      case Move::left: --nx; break;
      case Move::right: ++nx; break;
      case Move::up: ++ny; break;
      case Move::down: --ny; break;
      case Move::stay: break;
    }
    return inside(nx, ny) ? index(nx, ny) : s;
  }

  /// In-grid 4-neighborhood of s (s itself excluded).
  std::vector<int> neighbors(int s) const {
    std::vector<int> out;
    const int cx = x(s), cy = y(s);
    constexpr std::array<std::array<int, 2>, 4> deltas{{{-1, 0}, {1, 0}, {0, 1}, {0, -1}}};
    for (auto [dx, dy] : deltas) {
      if (inside(cx + dx, cy + dy)) out.push_back(index(cx + dx, cy + dy));
    }
    return out;
  }

  int manhattan(int a, int b) const { return std::abs(x(a) - x(b)) + std::abs(y(a) - y(b)); }
};

/// Finite-horizon tabular controlled Markov process <S, A, P, mu, H>.
/// Immutable after construction.
class Gmdp {
 public:
  static constexpr double kRowTolerance = 1e-12;

  /// `kernel` is indexed by s * num_actions + a.
  Gmdp(int num_states, int num_actions, int horizon, std::vector<std::vector<Transition>> kernel,
       std::vector<double> initial_distribution, std::optional<GridGeometry> grid = std::nullopt)
      : ground_(num_states, horizon),
        num_actions_(num_actions),
        kernel_(std::move(kernel)),
        initial_(std::move(initial_distribution)),
        grid_(grid) {
    if (num_actions < 1) throw std::invalid_argument("Gmdp: need at least one action");
    if (kernel_.size() != static_cast<std::size_t>(num_states) * num_actions) {
      throw std::invalid_argument("Gmdp: kernel must have num_states * num_actions rows");
    }
    if (initial_.size() != static_cast<std::size_t>(num_states)) {
      throw std::invalid_argument("Gmdp: initial distribution has wrong length");
    }
    for (std::size_t row = 0; row < kernel_.size(); ++row) {
      auto& r = kernel_[row];
      std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.next < b.next; });
      // merge duplicate targets, drop zero entries
      std::vector<Transition> merged;
      for (const auto& t : r) {
        if (t.next < 0 || t.next >= num_states) {
          throw std::invalid_argument("Gmdp: transition target out of range");
        }
        if (t.prob < 0.0) throw std::invalid_argument("Gmdp: negative transition probability");
        if (t.prob == 0.0) continue;
        if (!merged.empty() && merged.back().next == t.next) {
          merged.back().prob += t.prob;
        } else {
          merged.push_back(t);
        }
      }
      r = std::move(merged);
      double sum = 0.0;
      for (const auto& t : r) sum += t.prob;
      if (std::abs(sum - 1.0) > kRowTolerance) {
        throw std::invalid_argument("Gmdp: transition row " + std::to_string(row) +
                                    " sums to " + std::to_string(sum));
      }
    }
    double mass = 0.0;
    for (double p : initial_) {
      if (p < 0.0) throw std::invalid_argument("Gmdp: negative initial probability");
      mass += p;
    }
    if (std::abs(mass - 1.0) > kRowTolerance) {
      throw std::invalid_argument("Gmdp: initial distribution does not sum to 1");
    }
  }

  const GroundSet& ground() const { return ground_; }
  int num_states() const { return ground_.num_states(); }
  int num_actions() const { return num_actions_; }
  int horizon() const { return ground_.horizon(); }

  std::span<const Transition> transitions(int s, int a) const {
    return kernel_[static_cast<std::size_t>(s) * num_actions_ + a];
  }

  double probability(int s, int a, int next) const {
    for (const auto& t : transitions(s, a)) {
      if (t.next == next) return t.prob;
    }
    return 0.0;
  }

  std::span<const double> initial_distribution() const { return initial_; }

  /// The start state when mu is a point mass.
  std::optional<int> initial_state() const {
    for (std::size_t s = 0; s < initial_.size(); ++s) {
      if (initial_[s] == 1.0) return static_cast<int>(s);
    }
    return std::nullopt;
  }

  /// Every kernel row is a unit vector.
  bool deterministic_dynamics() const {
    return std::all_of(kernel_.begin(), kernel_.end(), [](auto& r) { return r.size() == 1; });
  }

  /// Deterministic dynamics and a point-mass start: policies reduce to trajectories.
  bool deterministic() const { return deterministic_dynamics() && initial_state().has_value(); }

  const std::optional<GridGeometry>& grid() const { return grid_; }

 private:
  GroundSet ground_;
  int num_actions_;
  std::vector<std::vector<Transition>> kernel_;
  std::vector<double> initial_;
  std::optional<GridGeometry> grid_;
};

struct GridConfig {
  int width = 1;
  int height = 1;
  int horizon = 1;
  double stochasticity_degree = 0.0;
  /// Defaults to the bottom-left cell (state 0).
  std::optional<int> initial_state;
  std::optional<std::vector<double>> initial_distribution;
  std::uint64_t seed = 0;
};

/// Grid CMP: with probability 1 - rho the intended move executes, with
/// probability rho the next state is uniform over the in-grid 4-neighborhood
/// of the current state. Masses landing on the same cell are merged.
inline Gmdp build_grid(const GridConfig& config) {
  if (config.width < 1 || config.height < 1) {
    throw std::invalid_argument("build_grid: width and height must be >= 1");
  }
  if (config.horizon < 1) throw std::invalid_argument("build_grid: horizon must be >= 1");
  const double rho = config.stochasticity_degree;
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("build_grid: stochasticity_degree must lie in [0, 1]");
  }
  const GridGeometry geo{config.width, config.height};
  const int n = geo.num_states();

  std::vector<std::vector<Transition>> kernel(static_cast<std::size_t>(n) * kNumMoves);
  for (int s = 0; s < n; ++s) {
    const auto nbrs = geo.neighbors(s);
    for (int a = 0; a < kNumMoves; ++a) {
      auto& row = kernel[static_cast<std::size_t>(s) * kNumMoves + a];
      const int target = geo.apply(s, static_cast<Move>(a));
      if (rho == 0.0) {
        row.push_back({target, 1.0});
        continue;
      }
      row.push_back({target, 1.0 - rho});
      if (nbrs.empty()) {
        row.push_back({s, rho});
      } else {
        for (int nb : nbrs) row.push_back({nb, rho / static_cast<double>(nbrs.size())});
      }
    }
  }

  std::vector<double> mu(static_cast<std::size_t>(n), 0.0);
  if (config.initial_distribution) {
    mu = *config.initial_distribution;
  } else {
    const int s0 = config.initial_state.value_or(0);
    if (s0 < 0 || s0 >= n) throw std::invalid_argument("build_grid: initial_state out of range");
    mu[static_cast<std::size_t>(s0)] = 1.0;
  }
  return Gmdp(n, kNumMoves, config.horizon, std::move(kernel), std::move(mu), geo);
}

}  // namespace grl
