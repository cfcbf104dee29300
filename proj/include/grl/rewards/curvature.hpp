#pragma once

#include "grl/core/errors.hpp"
#include "grl/rewards/reward.hpp"

#include <algorithm>
#include <vector>

namespace grl {

struct CurvatureReport {
  /// 1 - min_v F(v|V\v) / F(v)
  double k_sub = 0.0;
  /// 1 - min_v F(v) / F(v|V\v)
  double k_sup = 0.0;
  /// elements with F(v) = F(v|V\v) = 0
  std::vector<Element> skipped_elements;
};

/// Submodular and supermodular curvature over the whole ground set. Both are
/// clamped to [0, 1]; the one matching the reward's kind is the meaningful one.
inline CurvatureReport compute_curvature(const GlobalReward& reward) {
  constexpr double eps = 1e-12;
  const auto& g = reward.ground();
  const auto loo = reward.leave_one_out_gains();
  auto acc = reward.accumulator();

  CurvatureReport report;
  double min_sub = 1.0, min_sup = 1.0;
  bool any = false;
  for (Element v = 0; v < g.size(); ++v) {
    const double single = acc->gain(v);
    const double last = loo[static_cast<std::size_t>(v)];
    const bool single_zero = std::abs(single) <= eps;
    const bool last_zero = std::abs(last) <= eps;
    if (single_zero && last_zero) {
      report.skipped_elements.push_back(v);
      continue;
    }
    any = true;
    if (!single_zero) min_sub = std::min(min_sub, last / single);
    if (!last_zero) min_sup = std::min(min_sup, single / last);
  }
  if (!any) throw NumericalError("compute_curvature: every element has 0/0 ratio; curvature undefined");
  report.k_sub = std::clamp(1.0 - min_sub, 0.0, 1.0);
  report.k_sup = std::clamp(1.0 - min_sup, 0.0, 1.0);
  return report;
}

}  // namespace grl
