#pragma once

#include "grl/core/gmdp.hpp"
#include "grl/rewards/reward.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace grl {

/// Cell footprint covered from each state.
struct DiskShape {
  enum class Kind { chebyshev, corner_square };
  Kind kind = Kind::chebyshev;
  /// chebyshev: radius r (|dx|,|dy| <= r); corner_square: side length (extends right and up).
  int size = 0;

  static DiskShape chebyshev(int radius) { return {Kind::chebyshev, radius}; }
  static DiskShape corner_square(int side) { return {Kind::corner_square, side}; }
  bool operator==(const DiskShape&) const = default;
};

/// D^s for every grid state, clipped at the boundary.
inline std::vector<std::vector<int>> grid_disks(const GridGeometry& geo, DiskShape shape) {
  if (shape.size < 0 || (shape.kind == DiskShape::Kind::corner_square && shape.size < 1)) {
    throw std::invalid_argument("grid_disks: invalid disk size");
  }
  std::vector<std::vector<int>> disks(static_cast<std::size_t>(geo.num_states()));
  for (int s = 0; s < geo.num_states(); ++s) {
    const int cx = geo.x(s), cy = geo.y(s);
    int lo = -shape.size, hi = shape.size;
    if (shape.kind == DiskShape::Kind::corner_square) {
      lo = 0;
      hi = shape.size - 1;
    }
    for (int dy = lo; dy <= hi; ++dy) {
      for (int dx = lo; dx <= hi; ++dx) {
        if (geo.inside(cx + dx, cy + dy)) disks[static_cast<std::size_t>(s)].push_back(geo.index(cx + dx, cy + dy));
      }
    }
  }
  return disks;
}

/// F(X) = |union_{(s,t) in X} D^s|. Monotone submodular, time invariant.
class CoverageReward final : public GlobalReward {
 public:
  CoverageReward(GroundSet ground, std::vector<std::vector<int>> disks)
      : GlobalReward(ground), disks_(std::move(disks)) {
    if (disks_.size() != static_cast<std::size_t>(ground.num_states())) {
      throw std::invalid_argument("coverage_reward: need one disk per state");
    }
    for (const auto& d : disks_) {
      if (d.empty()) throw std::invalid_argument("coverage_reward: disks must be nonempty");
      for (int c : d) {
        if (c < 0) throw std::invalid_argument("coverage_reward: negative cell id");
        num_cells_ = std::max(num_cells_, c + 1);
      }
    }
  }

  double evaluate(std::span<const Element> set) const override {
    std::vector<char> covered(static_cast<std::size_t>(num_cells_), 0);
    int count = 0;
    for (Element v : set) {
      for (int c : disk(v)) {
        if (!covered[static_cast<std::size_t>(c)]) {
          covered[static_cast<std::size_t>(c)] = 1;
          ++count;
        }
      }
    }
    return count;
  }

  RewardKind kind() const override { return RewardKind::submodular; }
  std::string name() const override { return "coverage"; }
  bool time_invariant() const override { return true; }

  std::unique_ptr<Accumulator> accumulator() const override {
    return std::make_unique<Acc>(*this);
  }

  std::vector<double> leave_one_out_gains() const override {
    // a cell is lost only if v's state is the unique coverer across all of V
    const auto& g = ground();
    std::vector<int> multiplicity(static_cast<std::size_t>(num_cells_), 0);
    for (int s = 0; s < g.num_states(); ++s) {
      for (int c : disks_[static_cast<std::size_t>(s)]) multiplicity[static_cast<std::size_t>(c)] += g.horizon();
    }
    std::vector<double> out(static_cast<std::size_t>(g.size()));
    for (Element v = 0; v < g.size(); ++v) {
      int lost = 0;
      for (int c : disk(v)) lost += multiplicity[static_cast<std::size_t>(c)] == 1;
      out[static_cast<std::size_t>(v)] = lost;
    }
    return out;
  }

  const std::vector<int>& disk(Element v) const {
    return disks_[static_cast<std::size_t>(ground().state_of(v))];
  }

 private:
  class Acc final : public Accumulator {
   public:
    explicit Acc(const CoverageReward& f) : f_(f), covered_(static_cast<std::size_t>(f.num_cells_), 0) {}
    double value() const override { return value_; }
    double gain(Element v) const override {
      int g = 0;
      for (int c : f_.disk(v)) g += covered_[static_cast<std::size_t>(c)] == 0;
      return g;
    }
    double add(Element v) override {
      int g = 0;
      for (int c : f_.disk(v)) {
        if (covered_[static_cast<std::size_t>(c)]++ == 0) ++g;
      }
      value_ += g;
      return g;
    }

   private:
    const CoverageReward& f_;
    std::vector<int> covered_;
    double value_ = 0.0;
  };

  std::vector<std::vector<int>> disks_;
  int num_cells_ = 0;
};

inline RewardPtr coverage_reward(GroundSet ground, std::vector<std::vector<int>> disks) {
  return std::make_shared<CoverageReward>(ground, std::move(disks));
}

}  // namespace grl
