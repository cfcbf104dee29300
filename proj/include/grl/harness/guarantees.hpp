#pragma once

#include "grl/algorithms/guarantee.hpp"
#include "grl/harness/experiment.hpp"

#include <ostream>

namespace grl::harness {

struct GuaranteeRow {
  std::uint64_t seed = 0;
  GuaranteeCheck check;
};

/// One bound-and-solve step from the run's initial iterate, compared with the
/// exact optimum: brute force over trajectories when deterministic, otherwise
/// the best deterministic Markovian policy (a necessary consequence of the
/// non-Markovian statement) with J evaluated exactly.
inline std::vector<GuaranteeRow> check_guarantees(const ExperimentConfig& c) {
  const auto m = build_environment(c);
  std::size_t n_traj = c.deterministic() ? 1 : 20;
  for (const auto& a : c.algorithms) {
    if (a.name == "gpo" || a.name == "gto") {
      n_traj = resolved_traj_samples(c, a);
      break;
    }
  }
  std::vector<GuaranteeRow> rows(static_cast<std::size_t>(c.runs));
  parallel_for(c.runs, [&](int r) {
    const auto seed = run_seed(c, r);
    const auto f = build_reward(c, m, r);
    if (!f->monotone()) {
      throw ConfigError("/reward/kind: guarantees need a monotone reward; '" + f->name() + "' is not");
    }
    GuaranteeCase which;
    try {
      which = guarantee_case_for(*f);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("/reward/kind: ") + e.what());
    }
    double observed = 0.0, reference = 0.0;
    if (m.deterministic()) {
      auto init_rng = stream_rng(seed, Stream::init);
      observed = gto_first_iterate_value(m, *f, random_trajectory(m, init_rng));
      reference = brute_force_optimum(m, *f, c.evaluation.exact_budget).value;
    } else {
      auto rng = stream_rng(seed, Stream::algorithm);
      const auto bound = expected_lower_bound(*f, TabularPolicy::uniform(m), m, n_traj, rng);
      const auto pi1 = solve_finite_horizon(m, bound).policy;
      observed = evaluate_policy_objective(m, pi1, *f, ExactMode{c.evaluation.exact_budget}).mean;
      reference = best_deterministic_markov_policy(m, *f).value;
    }
    rows[static_cast<std::size_t>(r)] = {seed, check_guarantee(which, *f, observed, reference)};
  });
  return rows;
}

inline void print_guarantees(std::ostream& out, const std::vector<GuaranteeRow>& rows) {
  out << "seed,case,k_sub,k_sup,alpha,observed,reference,verdict\n";
  for (const auto& r : rows) {
    const auto& g = r.check;
    out << r.seed << ',' << case_name(g.which) << ',' << format_double(g.k_sub) << ','
        << format_double(g.k_sup) << ',' << format_double(g.alpha) << ',' << format_double(g.observed)
        << ',' << format_double(g.reference) << ',' << (g.vacuous ? "vacuous" : g.pass ? "pass" : "FAIL")
        << '\n';
  }
}

}  // namespace grl::harness
