#pragma once

#include "grl/rewards/coverage.hpp"
#include "grl/rewards/reward.hpp"
#include "grl/rewards/synergy.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace grl {

/// -C * 1{X touches an unsafe state}: normalized, non-increasing and supermodular.
class UnsafePenalty final : public GlobalReward {
 public:
  UnsafePenalty(GroundSet ground, std::vector<int> unsafe_states, double penalty)
      : GlobalReward(ground), unsafe_(static_cast<std::size_t>(ground.num_states()), 0),
        penalty_(penalty) {
    if (!(penalty >= 0.0)) throw std::invalid_argument("safe_coverage_reward: penalty must be >= 0");
    for (int s : unsafe_states) {
      if (s < 0 || s >= ground.num_states()) {
        throw std::invalid_argument("safe_coverage_reward: unsafe state out of range");
      }
      unsafe_[static_cast<std::size_t>(s)] = 1;
    }
  }

  bool is_unsafe(Element v) const { return unsafe_[static_cast<std::size_t>(ground().state_of(v))] != 0; }

  double evaluate(std::span<const Element> set) const override {
    for (Element v : set) {
      if (is_unsafe(v)) return -penalty_;
    }
    return 0.0;
  }
  RewardKind kind() const override { return RewardKind::supermodular; }
  std::string name() const override { return "unsafe_penalty"; }
  bool monotone() const override { return penalty_ == 0.0; }
  bool time_invariant() const override { return true; }
  std::unique_ptr<Accumulator> accumulator() const override { return std::make_unique<Acc>(*this); }

  std::vector<double> leave_one_out_gains() const override {
    const auto& g = ground();
    std::size_t unsafe_elements = 0;
    for (Element v = 0; v < g.size(); ++v) unsafe_elements += is_unsafe(v) ? 1 : 0;
    std::vector<double> out(static_cast<std::size_t>(g.size()), 0.0);
    // removing v changes F(V) only if v is the sole unsafe element
    if (unsafe_elements == 1) {
      for (Element v = 0; v < g.size(); ++v) {
        if (is_unsafe(v)) out[static_cast<std::size_t>(v)] = -penalty_;
      }
    }
    return out;
  }

 private:
  class Acc final : public Accumulator {
   public:
    explicit Acc(const UnsafePenalty& f) : f_(f) {}
    double value() const override { return hit_ ? -f_.penalty_ : 0.0; }
    double gain(Element v) const override { return (!hit_ && f_.is_unsafe(v)) ? -f_.penalty_ : 0.0; }
    double add(Element v) override {
      const double g = gain(v);
      hit_ = hit_ || f_.is_unsafe(v);
      return g;
    }

   private:
    const UnsafePenalty& f_;
    bool hit_ = false;
  };

  std::vector<char> unsafe_;
  double penalty_;
};

/// F = Q + G + constant with the decomposition exposed to the bound constructors.
class SumReward final : public GlobalReward {
 public:
  SumReward(RewardPtr submodular, RewardPtr supermodular, double constant, RewardKind kind,
            std::string name)
      : GlobalReward(submodular->ground()), parts_{submodular, supermodular, constant}, kind_(kind),
        name_(std::move(name)) {
    if (!(submodular->ground() == supermodular->ground())) {
      throw std::invalid_argument("SumReward: components live on different ground sets");
    }
  }

  double evaluate(std::span<const Element> set) const override {
    return parts_.submodular->evaluate(set) + parts_.supermodular->evaluate(set) + parts_.constant;
  }
  RewardKind kind() const override { return kind_; }
  std::string name() const override { return name_; }
  bool monotone() const override {
    return parts_.submodular->monotone() && parts_.supermodular->monotone();
  }
  bool time_invariant() const override {
    return parts_.submodular->time_invariant() && parts_.supermodular->time_invariant();
  }
  const Decomposition* decomposition() const override { return &parts_; }

  std::unique_ptr<Accumulator> accumulator() const override { return std::make_unique<Acc>(*this); }

  std::vector<double> leave_one_out_gains() const override {
    auto q = parts_.submodular->leave_one_out_gains();
    const auto g = parts_.supermodular->leave_one_out_gains();
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += g[i];
    return q;
  }

 private:
  class Acc final : public Accumulator {
   public:
    explicit Acc(const SumReward& f)
        : q_(f.parts_.submodular->accumulator()), g_(f.parts_.supermodular->accumulator()),
          constant_(f.parts_.constant) {}
    double value() const override { return q_->value() + g_->value() + constant_; }
    double gain(Element v) const override { return q_->gain(v) + g_->gain(v); }
    double add(Element v) override { return q_->add(v) + g_->add(v); }

   private:
    std::unique_ptr<Accumulator> q_, g_;
    double constant_;
  };

  Decomposition parts_;
  RewardKind kind_;
  std::string name_;
};

/// Q + G with Q submodular and G supermodular (both normalized).
inline RewardPtr bp_reward(RewardPtr submodular, RewardPtr supermodular) {
  const std::string name = submodular->name() + "+" + supermodular->name();
  return std::make_shared<SumReward>(std::move(submodular), std::move(supermodular), 0.0,
                                     RewardKind::bp, name);
}

/// |union D^s| + sum_i |X cap S_i|^beta.
inline RewardPtr diverse_synergy_reward(GroundSet ground, std::vector<std::vector<int>> disks,
                                        std::vector<std::vector<Element>> sets, double beta) {
  return std::make_shared<SumReward>(coverage_reward(ground, std::move(disks)),
                                     synergy_reward(ground, std::move(sets), beta), 0.0,
                                     RewardKind::bp, "diverse_synergy");
}

/// |union D^s| + C * 1{X avoids every unsafe state}; non-monotone.
inline RewardPtr safe_coverage_reward(GroundSet ground, std::vector<std::vector<int>> disks,
                                      std::vector<int> unsafe_states, double penalty) {
  return std::make_shared<SumReward>(
      coverage_reward(ground, std::move(disks)),
      std::make_shared<UnsafePenalty>(ground, std::move(unsafe_states), penalty), penalty,
      RewardKind::arbitrary, "safe_coverage");
}

}  // namespace grl
