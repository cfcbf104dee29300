#pragma once

#include "grl/core/ground.hpp"

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grl {

enum class RewardKind { modular, submodular, supermodular, bp, arbitrary };

inline std::string_view kind_name(RewardKind k) {
  switch (k) {
    case RewardKind::modular: return "modular";
    case RewardKind::submodular: return "submodular";
    case RewardKind::supermodular: return "supermodular";
    case RewardKind::bp: return "bp";
    case RewardKind::arbitrary: return "arbitrary";
  }
  return "unknown";
}

class GlobalReward;
using RewardPtr = std::shared_ptr<const GlobalReward>;

/// F = submodular + supermodular + constant, pointwise on 2^V.
struct Decomposition {
  RewardPtr submodular;
  RewardPtr supermodular;
  double constant = 0.0;
};

/// Single-owner incremental evaluation context for a chain X_0 = {} c X_1 c ...
class Accumulator {
 public:
  virtual ~Accumulator() = default;
  /// F of the current set.
  virtual double value() const = 0;
  /// F(v | current set); v must not already be in the set.
  virtual double gain(Element v) const = 0;
  /// Inserts v and returns its marginal gain.
  virtual double add(Element v) = 0;
};

/// Set function over the ground set V = S x T. Sets are spans of distinct
/// flat indices; evaluation does not depend on their order.
class GlobalReward {
 public:
  explicit GlobalReward(GroundSet ground) : ground_(ground) {}
  virtual ~GlobalReward() = default;

  virtual double evaluate(std::span<const Element> set) const = 0;
  virtual RewardKind kind() const = 0;
  virtual std::string name() const = 0;

  /// Non-decreasing under inclusion.
  virtual bool monotone() const { return true; }
  /// Depends only on the multiset of visited states (times dropped).
  virtual bool time_invariant() const { return false; }
  virtual const Decomposition* decomposition() const { return nullptr; }

  double marginal(Element v, std::span<const Element> set) const {
    std::vector<Element> with(set.begin(), set.end());
    with.push_back(v);
    return evaluate(with) - evaluate(set);
  }

  virtual std::unique_ptr<Accumulator> accumulator() const;

  /// F(v | V \ {v}) for every v in V, indexed by flat index.
  virtual std::vector<double> leave_one_out_gains() const {
    auto all = ground_.elements();
    const double full = evaluate(all);
    std::vector<double> out(all.size());
    std::vector<Element> rest;
    rest.reserve(all.size());
    for (Element v = 0; v < ground_.size(); ++v) {
      rest.clear();
      for (Element u = 0; u < ground_.size(); ++u) {
        if (u != v) rest.push_back(u);
      }
      out[static_cast<std::size_t>(v)] = full - evaluate(rest);
    }
    return out;
  }

  const GroundSet& ground() const { return ground_; }

 private:
  GroundSet ground_;
};

/// Re-evaluates from scratch; used when a reward has no incremental form.
class GenericAccumulator final : public Accumulator {
 public:
  explicit GenericAccumulator(const GlobalReward& f) : f_(f), value_(f.evaluate({})) {}

  double value() const override { return value_; }
  double gain(Element v) const override {
    scratch_ = members_;
    scratch_.push_back(v);
    return f_.evaluate(scratch_) - value_;
  }
  double add(Element v) override {
    members_.push_back(v);
    const double next = f_.evaluate(members_);
    const double g = next - value_;
    value_ = next;
    return g;
  }

 private:
  const GlobalReward& f_;
  std::vector<Element> members_;
  mutable std::vector<Element> scratch_;
  double value_;
};

inline std::unique_ptr<Accumulator> GlobalReward::accumulator() const {
  return std::make_unique<GenericAccumulator>(*this);
}

/// Per-state visit counts of a set; the sufficient statistic of time-invariant rewards.
inline std::vector<int> state_counts(const GroundSet& ground, std::span<const Element> set) {
  std::vector<int> counts(static_cast<std::size_t>(ground.num_states()), 0);
  for (Element v : set) ++counts[static_cast<std::size_t>(ground.state_of(v))];
  return counts;
}

}  // namespace grl
