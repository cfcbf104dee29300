#pragma once

#include "grl/algorithms/gto.hpp"
#include "grl/rewards/curvature.hpp"

#include <limits>
#include <stdexcept>
#include <string_view>

namespace grl {

enum class GuaranteeCase { submodular, supermodular, bp };

inline std::string_view case_name(GuaranteeCase c) {
  switch (c) {
    case GuaranteeCase::submodular: return "submodular";
    case GuaranteeCase::supermodular: return "supermodular";
    case GuaranteeCase::bp: return "bp";
  }
  return "unknown";
}

inline GuaranteeCase guarantee_case_for(const GlobalReward& f) {
  switch (f.kind()) {
    case RewardKind::modular:
    case RewardKind::submodular: return GuaranteeCase::submodular;
    case RewardKind::supermodular: return GuaranteeCase::supermodular;
    case RewardKind::bp: return GuaranteeCase::bp;
    case RewardKind::arbitrary: break;
  }
  throw std::invalid_argument("no curvature guarantee for reward '" + f.name() + "' of arbitrary kind");
}

/// Ratio alpha in J(pi_1) >= (1 - alpha) J*. For bp, k_sub is the submodular
/// curvature of Q and k_sup the supermodular curvature of G.
inline double guarantee_ratio(GuaranteeCase c, double k_sub, double k_sup) {
  const auto sup_ratio = [](double k) {
    return k >= 1.0 ? std::numeric_limits<double>::infinity() : (2.0 * k - k * k) / (1.0 - k);
  };
  switch (c) {
    case GuaranteeCase::submodular: return k_sub;
    case GuaranteeCase::supermodular: return sup_ratio(k_sup);
    case GuaranteeCase::bp:
      if (k_sup >= 1.0) return std::numeric_limits<double>::infinity();
      if (k_sub <= k_sup) return sup_ratio(k_sup);
      return (1.0 - (1.0 - k_sub) * (1.0 - k_sup)) / (1.0 - k_sup);
  }
  throw std::logic_error("unreachable");
}

struct GuaranteeCheck {
  GuaranteeCase which = GuaranteeCase::submodular;
  double k_sub = 0.0;
  double k_sup = 0.0;
  double alpha = 0.0;
  double observed = 0.0;
  double reference = 0.0;
  bool pass = false;
  /// alpha >= 1: the inequality holds trivially for non-negative rewards.
  bool vacuous = false;
};

struct CurvaturePair {
  double k_sub = 0.0;
  double k_sup = 0.0;
};

/// Curvatures relevant to the case: (k_F, k^F) of F, or (k_Q, k^G) of the parts.
inline CurvaturePair guarantee_curvatures(GuaranteeCase c, const GlobalReward& f) {
  if (c == GuaranteeCase::bp) {
    const auto* parts = f.decomposition();
    if (parts == nullptr) throw std::invalid_argument("bp guarantee needs a (Q, G) decomposition");
    return {compute_curvature(*parts->submodular).k_sub, compute_curvature(*parts->supermodular).k_sup};
  }
  const auto report = compute_curvature(f);
  return {report.k_sub, report.k_sup};
}

inline GuaranteeCheck check_guarantee(GuaranteeCase c, const GlobalReward& f, double observed,
                                      double reference) {
  if (!f.monotone()) throw std::invalid_argument("check_guarantee: reward must be monotone");
  const auto k = guarantee_curvatures(c, f);
  GuaranteeCheck out;
  out.which = c;
  out.k_sub = k.k_sub;
  out.k_sup = k.k_sup;
  out.alpha = guarantee_ratio(c, k.k_sub, k.k_sup);
  out.observed = observed;
  out.reference = reference;
  out.vacuous = out.alpha >= 1.0;
  out.pass = out.vacuous || observed >= (1.0 - out.alpha) * reference - kImprovementTolerance;
  return out;
}

/// F(tau_1) of a single full-bound GTO step from init.
inline double gto_first_iterate_value(const Gmdp& m, const GlobalReward& f, const Trajectory& init) {
  const auto bound = lower_bound(f, init, BoundVariant::full);
  const auto tau1 = extract_trajectory(m, solve_finite_horizon(m, bound));
  return f.evaluate(tau1.flat(m.ground()));
}

}  // namespace grl
