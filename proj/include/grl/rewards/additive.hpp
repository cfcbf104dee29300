#pragma once

#include "grl/rewards/reward.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace grl {

/// F(X) = sum_{v in X} w[v].
class AdditiveReward final : public GlobalReward {
 public:
  AdditiveReward(GroundSet ground, std::vector<double> weights)
      : GlobalReward(ground), weights_(std::move(weights)) {
    if (weights_.size() != static_cast<std::size_t>(ground.size())) {
      throw std::invalid_argument("additive_reward: one weight per ground element");
    }
    for (double w : weights_) nonnegative_ = nonnegative_ && w >= 0.0;
  }

  double evaluate(std::span<const Element> set) const override {
    double total = 0.0;
    for (Element v : set) total += weights_[static_cast<std::size_t>(v)];
    return total;
  }
  RewardKind kind() const override { return RewardKind::modular; }
  std::string name() const override { return "additive"; }
  bool monotone() const override { return nonnegative_; }
  std::unique_ptr<Accumulator> accumulator() const override { return std::make_unique<Acc>(*this); }
  std::vector<double> leave_one_out_gains() const override { return weights_; }

  const std::vector<double>& weights() const { return weights_; }

 private:
  class Acc final : public Accumulator {
   public:
    explicit Acc(const AdditiveReward& f) : f_(f) {}
    double value() const override { return value_; }
    double gain(Element v) const override { return f_.weights_[static_cast<std::size_t>(v)]; }
    double add(Element v) override {
      value_ += gain(v);
      return gain(v);
    }

   private:
    const AdditiveReward& f_;
    double value_ = 0.0;
  };

  std::vector<double> weights_;
  bool nonnegative_ = true;
};

inline RewardPtr additive_reward(GroundSet ground, std::vector<double> weights) {
  return std::make_shared<AdditiveReward>(ground, std::move(weights));
}

}  // namespace grl
