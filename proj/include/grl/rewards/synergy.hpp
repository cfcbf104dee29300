#pragma once

#include "grl/rewards/reward.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

namespace grl {

/// F(X) = sum_i |X cap S_i|^beta with S_i subsets of V. Monotone supermodular
/// for beta >= 1 (modular at beta = 1).
class SynergyReward final : public GlobalReward {
 public:
  SynergyReward(GroundSet ground, std::vector<std::vector<Element>> sets, double beta)
      : GlobalReward(ground), sets_(std::move(sets)), beta_(beta),
        membership_(static_cast<std::size_t>(ground.size())) {
    if (!(beta >= 1.0)) throw std::invalid_argument("synergy_reward: beta must be >= 1");
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      auto& s = sets_[i];
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      for (Element v : s) {
        if (!ground.contains(v)) throw std::invalid_argument("synergy_reward: element outside V");
        membership_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
      }
    }
  }

  double evaluate(std::span<const Element> set) const override {
    std::vector<int> hits(sets_.size(), 0);
    for (Element v : set) {
      for (int i : membership_[static_cast<std::size_t>(v)]) ++hits[static_cast<std::size_t>(i)];
    }
    double total = 0.0;
    for (int h : hits) total += power(h);
    return total;
  }

  RewardKind kind() const override {
    return beta_ == 1.0 ? RewardKind::modular : RewardKind::supermodular;
  }
  std::string name() const override { return "synergy"; }

  std::unique_ptr<Accumulator> accumulator() const override { return std::make_unique<Acc>(*this); }

  std::vector<double> leave_one_out_gains() const override {
    std::vector<double> out(static_cast<std::size_t>(ground().size()), 0.0);
    for (Element v = 0; v < ground().size(); ++v) {
      double g = 0.0;
      for (int i : membership_[static_cast<std::size_t>(v)]) {
        const int n = static_cast<int>(sets_[static_cast<std::size_t>(i)].size());
        g += power(n) - power(n - 1);
      }
      out[static_cast<std::size_t>(v)] = g;
    }
    return out;
  }

  const std::vector<std::vector<Element>>& sets() const { return sets_; }
  double beta() const { return beta_; }

 private:
  double power(int n) const { return n == 0 ? 0.0 : std::pow(static_cast<double>(n), beta_); }

  class Acc final : public Accumulator {
   public:
    explicit Acc(const SynergyReward& f) : f_(f), hits_(f.sets_.size(), 0) {}
    double value() const override { return value_; }
    double gain(Element v) const override {
      double g = 0.0;
      for (int i : f_.membership_[static_cast<std::size_t>(v)]) {
        const int h = hits_[static_cast<std::size_t>(i)];
        g += f_.power(h + 1) - f_.power(h);
      }
      return g;
    }
    double add(Element v) override {
      const double g = gain(v);
      for (int i : f_.membership_[static_cast<std::size_t>(v)]) ++hits_[static_cast<std::size_t>(i)];
      value_ += g;
      return g;
    }

   private:
    const SynergyReward& f_;
    std::vector<int> hits_;
    double value_ = 0.0;
  };

  std::vector<std::vector<Element>> sets_;
  double beta_;
  std::vector<std::vector<int>> membership_;
};

inline RewardPtr synergy_reward(GroundSet ground, std::vector<std::vector<Element>> sets, double beta) {
  return std::make_shared<SynergyReward>(ground, std::move(sets), beta);
}

}  // namespace grl
