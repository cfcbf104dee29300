#pragma once

#include "grl/core/errors.hpp"
#include "grl/gp/kernel.hpp"
#include "grl/rewards/reward.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <cmath>
#include <memory>
#include <vector>

namespace grl::gp {

/// log det(A) through a Cholesky factor. On failure a diagonal jitter of
/// 1e-10 is added and escalated x10 up to 1e-6 before giving up.
inline double log_det_spd(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return 0.0;
  const auto factor_logdet = [](const Eigen::MatrixXd& m, double& out) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) return false;
    const auto& l = llt.matrixLLT();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!(l(i, i) > 0.0)) return false;
      sum += std::log(l(i, i));
    }
    out = 2.0 * sum;
    return true;
  };
  double result = 0.0;
  if (factor_logdet(a, result)) return result;
  for (double jitter = 1e-10; jitter <= 1e-6 * 1.0000001; jitter *= 10.0) {
    Eigen::MatrixXd b = a;
    b.diagonal().array() += jitter;
    if (factor_logdet(b, result)) return result;
  }
  throw NumericalError("log_det_spd: Cholesky failed after jitter escalation to 1e-6");
}

/// I(y_X; f) = 1/2 log det(I + K_XX / sigma_n^2). Repeated states are repeated
/// noisy measurements (multiset semantics). Monotone submodular, time invariant.
class MutualInformationReward final : public GlobalReward {
 public:
  MutualInformationReward(GroundSet ground, GpModel model)
      : GlobalReward(ground), model_(std::move(model)) {
    model_.validate();
    if (model_.locations.size() != static_cast<std::size_t>(ground.num_states())) {
      throw std::invalid_argument("mutual_information_reward: one location per state required");
    }
    const auto n = static_cast<Eigen::Index>(model_.locations.size());
    gram_.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) {
        gram_(i, j) = gram_(j, i) = matern_kernel(model_, model_.locations[static_cast<std::size_t>(i)],
                                                  model_.locations[static_cast<std::size_t>(j)]);
      }
    }
  }

  /// K_XX + sigma_n^2 I over the states of X.
  Eigen::MatrixXd noisy_gram(std::span<const Element> set) const {
    const auto n = static_cast<Eigen::Index>(set.size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const int si = ground().state_of(set[static_cast<std::size_t>(i)]);
      for (Eigen::Index j = 0; j <= i; ++j) {
        const int sj = ground().state_of(set[static_cast<std::size_t>(j)]);
        a(i, j) = a(j, i) = gram_(si, sj);
      }
      a(i, i) += model_.noise_variance;
    }
    return a;
  }

  double evaluate(std::span<const Element> set) const override {
    if (set.empty()) return 0.0;
    const double n = static_cast<double>(set.size());
    return 0.5 * (log_det_spd(noisy_gram(set)) - n * std::log(model_.noise_variance));
  }

  RewardKind kind() const override { return RewardKind::submodular; }
  std::string name() const override { return "mutual_information"; }
  bool time_invariant() const override { return true; }

  std::unique_ptr<Accumulator> accumulator() const override { return std::make_unique<Acc>(*this); }

  std::vector<double> leave_one_out_gains() const override {
    // Var(f_s | y_V) -> Var(f_s | y_V minus one observation at s) by removing one
    // unit of measurement precision 1/sigma_n^2.
    Acc acc(*this);
    for (Element v = 0; v < ground().size(); ++v) acc.add(v);
    const double noise = model_.noise_variance;
    std::vector<double> out(static_cast<std::size_t>(ground().size()));
    for (Element v = 0; v < ground().size(); ++v) {
      const int s = ground().state_of(v);
      const double var_all = acc.posterior_variance(s);
      const double precision = 1.0 / var_all - 1.0 / noise;
      if (!(precision > 0.0)) {
        throw NumericalError("mutual_information: posterior variance not below noise level");
      }
      out[static_cast<std::size_t>(v)] = 0.5 * std::log1p(1.0 / precision / noise);
    }
    return out;
  }

  const GpModel& model() const { return model_; }
  const Eigen::MatrixXd& gram() const { return gram_; }

 private:
  /// Posterior covariance of f over all state locations, updated rank-1 per observation.
  class Acc final : public Accumulator {
   public:
    explicit Acc(const MutualInformationReward& f) : f_(f), cov_(f.gram_) {}
    double value() const override { return value_; }
    double gain(Element v) const override {
      const int s = f_.ground().state_of(v);
      return 0.5 * std::log1p(std::max(cov_(s, s), 0.0) / f_.model_.noise_variance);
    }
    double add(Element v) override {
      const int s = f_.ground().state_of(v);
      const double g = gain(v);
      const double denom = std::max(cov_(s, s), 0.0) + f_.model_.noise_variance;
      const Eigen::VectorXd k = cov_.col(s);
      cov_.noalias() -= (k / denom) * k.transpose();
      value_ += g;
      return g;
    }
    double posterior_variance(int s) const { return std::max(cov_(s, s), 0.0); }

   private:
    const MutualInformationReward& f_;
    Eigen::MatrixXd cov_;
    double value_ = 0.0;
  };

  GpModel model_;
  Eigen::MatrixXd gram_;
};

inline RewardPtr mutual_information_reward(GroundSet ground, GpModel model) {
  return std::make_shared<MutualInformationReward>(ground, std::move(model));
}

}  // namespace grl::gp
