#pragma once

#include "grl/rewards/reward.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

namespace grl {

/// F(X) = sum_s phi(C(X, s)) for a per-state visit-count profile phi with phi(0) = 0.
/// Subclasses supply phi; concave phi gives a submodular reward.
class StateCountReward : public GlobalReward {
 public:
  using GlobalReward::GlobalReward;

  virtual double phi(int count) const = 0;

  double evaluate(std::span<const Element> set) const override {
    double total = 0.0;
    for (int c : state_counts(ground(), set)) {
      if (c > 0) total += phi(c);
    }
    return total;
  }

  bool time_invariant() const override { return true; }

  std::unique_ptr<Accumulator> accumulator() const override {
    return std::make_unique<Acc>(*this);
  }

  std::vector<double> leave_one_out_gains() const override {
    const int h = ground().horizon();
    const double loss = phi(h) - phi(h - 1);
    return std::vector<double>(static_cast<std::size_t>(ground().size()), loss);
  }

 private:
  class Acc final : public Accumulator {
   public:
    explicit Acc(const StateCountReward& f)
        : f_(f), counts_(static_cast<std::size_t>(f.ground().num_states()), 0) {}
    double value() const override { return value_; }
    double gain(Element v) const override {
      const int c = counts_[static_cast<std::size_t>(f_.ground().state_of(v))];
      return f_.phi(c + 1) - (c > 0 ? f_.phi(c) : 0.0);
    }
    double add(Element v) override {
      const double g = gain(v);
      ++counts_[static_cast<std::size_t>(f_.ground().state_of(v))];
      value_ += g;
      return g;
    }

   private:
    const StateCountReward& f_;
    std::vector<int> counts_;
    double value_ = 0.0;
  };
};

/// phi(C) = 1 + alpha (C - 1) for C > 0: the first visit is worth 1, every
/// revisit alpha. Submodular curvature 1 - alpha once a state can be revisited.
class BoundedCurvatureCoverage final : public StateCountReward {
 public:
  BoundedCurvatureCoverage(GroundSet ground, double alpha) : StateCountReward(ground), alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw std::invalid_argument("bounded_curvature_coverage: alpha must lie in [0, 1]");
    }
  }
  double phi(int c) const override { return c > 0 ? 1.0 + alpha_ * (c - 1) : 0.0; }
  RewardKind kind() const override { return RewardKind::submodular; }
  std::string name() const override { return "bounded_coverage"; }
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// Shannon entropy of the state-visitation profile with counts normalized by
/// the horizon H; equals the empirical entropy on full trajectories.
/// Submodular (concave per-state terms) but not monotone.
class EntropyReward final : public StateCountReward {
 public:
  using StateCountReward::StateCountReward;
  double phi(int c) const override {
    if (c <= 0) return 0.0;
    const double p = static_cast<double>(c) / ground().horizon();
    return -p * std::log(p);
  }
  RewardKind kind() const override { return RewardKind::submodular; }
  std::string name() const override { return "entropy"; }
  bool monotone() const override { return false; }
};

inline RewardPtr bounded_curvature_coverage(GroundSet ground, double alpha) {
  return std::make_shared<BoundedCurvatureCoverage>(ground, alpha);
}

inline RewardPtr entropy_reward(GroundSet ground) { return std::make_shared<EntropyReward>(ground); }

}  // namespace grl
