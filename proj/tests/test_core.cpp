#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace grl;

namespace {

Gmdp grid(int w, int h, int horizon, double rho = 0.0, int s0 = 0) {
  GridConfig c;
  c.width = w;
  c.height = h;
  c.horizon = horizon;
  c.stochasticity_degree = rho;
  c.initial_state = s0;
  return build_grid(c);
}

/// F = c for every set.
class ConstantReward final : public GlobalReward {
 public:
  ConstantReward(GroundSet g, double c) : GlobalReward(g), c_(c) {}
  double evaluate(std::span<const Element>) const override { return c_; }
  RewardKind kind() const override { return RewardKind::arbitrary; }
  std::string name() const override { return "constant"; }

 private:
  double c_;
};

}  // namespace

TEST(GroundSet, FlatIndexRoundTrips) {
  const GroundSet g(7, 5);
  EXPECT_EQ(g.size(), 35);
  for (Element v = 0; v < g.size(); ++v) {
    const auto e = g.unflatten(v);
    EXPECT_EQ(g.flatten(e), v);
    EXPECT_EQ(e.time * 7 + e.state, v);
    EXPECT_EQ(g.state_of(v), e.state);
    EXPECT_EQ(g.time_of(v), e.time);
  }
  EXPECT_FALSE(g.contains(35));
  EXPECT_FALSE(g.contains(-1));
}

TEST(BuildGrid, SingleCellAlwaysStays) {
  const auto m = grid(1, 1, 3);
  for (int a = 0; a < kNumMoves; ++a) EXPECT_DOUBLE_EQ(m.probability(0, a, 0), 1.0);
  const auto m2 = grid(1, 1, 3, 0.7);
  for (int a = 0; a < kNumMoves; ++a) EXPECT_DOUBLE_EQ(m2.probability(0, a, 0), 1.0);
}

TEST(BuildGrid, DeterministicMove) {
  const auto m = grid(2, 2, 2);
  EXPECT_DOUBLE_EQ(m.probability(0, static_cast<int>(Move::right), 1), 1.0);
  EXPECT_DOUBLE_EQ(m.probability(0, static_cast<int>(Move::up), 2), 1.0);
  EXPECT_TRUE(m.deterministic());
}

TEST(BuildGrid, BoundaryMovesStayInPlace) {
  const auto m = grid(3, 3, 2);
  EXPECT_DOUBLE_EQ(m.probability(0, static_cast<int>(Move::left), 0), 1.0);
  EXPECT_DOUBLE_EQ(m.probability(0, static_cast<int>(Move::down), 0), 1.0);
  EXPECT_DOUBLE_EQ(m.probability(8, static_cast<int>(Move::right), 8), 1.0);
  EXPECT_DOUBLE_EQ(m.probability(8, static_cast<int>(Move::up), 8), 1.0);
}

TEST(BuildGrid, StochasticRowMergesIntendedTarget) {
  const auto m = grid(2, 2, 2, 0.1);
  // in-grid neighbours of the corner: right (1) and up (2)
  EXPECT_NEAR(m.probability(0, static_cast<int>(Move::right), 1), 0.9 + 0.1 / 2, 1e-15);
  EXPECT_NEAR(m.probability(0, static_cast<int>(Move::right), 2), 0.1 / 2, 1e-15);
  EXPECT_DOUBLE_EQ(m.probability(0, static_cast<int>(Move::right), 3), 0.0);
  EXPECT_FALSE(m.deterministic_dynamics());
}

TEST(BuildGrid, EveryRowSumsToOne) {
  for (double rho : {0.0, 0.1, 0.5, 1.0}) {
    const auto m = grid(4, 3, 2, rho);
    for (int s = 0; s < m.num_states(); ++s) {
      for (int a = 0; a < m.num_actions(); ++a) {
        double sum = 0.0;
        for (const auto& t : m.transitions(s, a)) {
          EXPECT_GT(t.prob, 0.0);
          sum += t.prob;
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
        if (rho == 0.0) {
          EXPECT_EQ(m.transitions(s, a).size(), 1u);
        }
      }
    }
  }
}

TEST(BuildGrid, FullyRandomKernelIgnoresAction) {
  const auto m = grid(3, 3, 2, 1.0, 4);
  for (int a = 0; a < kNumMoves; ++a) {
    for (int nb : {1, 3, 5, 7}) EXPECT_NEAR(m.probability(4, a, nb), 0.25, 1e-15);
    EXPECT_DOUBLE_EQ(m.probability(4, a, 4), 0.0);
  }
}

TEST(BuildGrid, RejectsBadConfig) {
  EXPECT_THROW(grid(0, 2, 2), std::invalid_argument);
  EXPECT_THROW(grid(2, 0, 2), std::invalid_argument);
  EXPECT_THROW(grid(2, 2, 0), std::invalid_argument);
  EXPECT_THROW(grid(2, 2, 2, -0.1), std::invalid_argument);
  EXPECT_THROW(grid(2, 2, 2, 1.5), std::invalid_argument);
  EXPECT_THROW(grid(2, 2, 2, 0.0, 4), std::invalid_argument);
}

TEST(BuildGrid, DefaultStartIsBottomLeft) {
  GridConfig c;
  c.width = 3;
  c.height = 3;
  c.horizon = 2;
  const auto m = build_grid(c);
  ASSERT_TRUE(m.initial_state().has_value());
  EXPECT_EQ(*m.initial_state(), 0);
}

TEST(TrajectoryProbability, OneHotPolicyOnItsOwnPathIsOne) {
  const auto m = grid(3, 3, 4);
  const int r = static_cast<int>(Move::right), u = static_cast<int>(Move::up);
  const std::vector<int> states{0, 1, 4, 5}, actions{r, u, r};
  const auto tau = make_trajectory(states, actions);
  std::vector<int> table(static_cast<std::size_t>(4 * 9), static_cast<int>(Move::stay));
  for (int t = 0; t < 3; ++t) table[static_cast<std::size_t>(t * 9 + states[t])] = actions[t];
  EXPECT_DOUBLE_EQ(trajectory_probability(m, TabularPolicy::deterministic(m, table), tau), 1.0);
}

TEST(TrajectoryProbability, UniformPolicyClosedForm) {
  for (int h = 1; h <= 5; ++h) {
    const auto m = grid(3, 3, h);
    std::vector<int> states(static_cast<std::size_t>(h), 0), actions(static_cast<std::size_t>(h - 1), static_cast<int>(Move::stay));
    const auto tau = make_trajectory(states, actions);
    EXPECT_NEAR(trajectory_probability(m, TabularPolicy::uniform(m), tau), std::pow(5.0, -(h - 1)), 1e-15);
  }
}

TEST(TrajectoryProbability, ZeroProbabilityTransitionGivesZero) {
  const auto m = grid(3, 3, 3);
  const std::vector<int> states{0, 4, 5}, actions{static_cast<int>(Move::right), static_cast<int>(Move::right)};
  const auto tau = make_trajectory(states, actions);
  EXPECT_FALSE(is_admissible(m, tau));
  EXPECT_EQ(trajectory_probability(m, TabularPolicy::uniform(m), tau), 0.0);
}

TEST(TrajectoryProbability, MalformedTrajectoryIsRejected) {
  const auto m = grid(3, 3, 3);
  const std::vector<int> too_short{0, 1}, one_action{1};
  EXPECT_THROW(trajectory_probability(m, TabularPolicy::uniform(m), make_trajectory(too_short, one_action)),
               std::invalid_argument);
}

TEST(SampleTrajectory, DeterministicPolicyGivesTheSamePathEveryCall) {
  const auto m = grid(4, 4, 6);
  Rng pick(11);
  std::vector<int> table(static_cast<std::size_t>(6 * 16));
  for (auto& a : table) a = static_cast<int>(uniform_index(5, pick));
  const auto pi = TabularPolicy::deterministic(m, table);
  Rng rng(1);
  const auto first = sample_trajectory(m, pi, rng);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(sample_trajectory(m, pi, rng), first);
}

TEST(SampleTrajectory, SamplesAreAlwaysAdmissible) {
  const auto m = grid(3, 4, 7, 0.3);
  Rng rng(5);
  const auto pi = oracle::random_policy(m, rng);
  for (int i = 0; i < 2000; ++i) ASSERT_TRUE(is_admissible(m, sample_trajectory(m, pi, rng)));
}

TEST(SampleTrajectory, FrequenciesMatchExactProbabilities) {
  const auto m = oracle::two_state_chain(3, 0.2);
  Rng rng(2024);
  const auto pi = oracle::random_policy(m, rng);
  constexpr int n = 100000;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> counts;
  for (int i = 0; i < n; ++i) {
    const auto tau = sample_trajectory(m, pi, rng);
    ++counts[{tau.states(), tau.actions}];
  }
  double total = 0.0;
  for (const auto& p : oracle::all_paths(m)) {
    const double q = oracle::path_probability(p, pi);
    total += q;
    const double freq = static_cast<double>(counts[{p.states, p.actions}]) / n;
    const double se = std::sqrt(q * (1.0 - q) / n);
    EXPECT_LE(std::abs(freq - q), 3.0 * se) << "path probability " << q;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(SampleTrajectory, FullyRandomFirstStepIsUniformOverNeighbours) {
  const auto m = grid(3, 3, 2, 1.0, 4);
  const auto pi = TabularPolicy::deterministic(m, std::vector<int>(18, static_cast<int>(Move::left)));
  Rng rng(9);
  std::map<int, int> counts;
  constexpr int n = 40000;
  for (int i = 0; i < n; ++i) ++counts[sample_trajectory(m, pi, rng).elements[1].state];
  EXPECT_EQ(counts.size(), 4u);
  for (int nb : {1, 3, 5, 7}) EXPECT_NEAR(counts[nb] / static_cast<double>(n), 0.25, 3 * std::sqrt(0.25 * 0.75 / n));
}

TEST(EnumerateTrajectories, SingleActionGivesOnePath) {
  std::vector<std::vector<Transition>> k{{{1, 1.0}}, {{2, 1.0}}, {{0, 1.0}}};
  const Gmdp m(3, 1, 4, k, {1.0, 0.0, 0.0});
  const auto all = enumerate_trajectories(m, 100);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].trajectory.states(), (std::vector<int>{0, 1, 2, 0}));
}

TEST(EnumerateTrajectories, TwoActionsDeterministicH3) {
  const auto m = oracle::two_state_chain(3, 0.0);
  const auto all = enumerate_trajectories(m, 100);
  EXPECT_LE(all.size(), 4u);
  EXPECT_EQ(all.size(), oracle::all_paths(m).size());
  for (const auto& e : all) EXPECT_TRUE(is_admissible(m, e.trajectory));
}

TEST(EnumerateTrajectories, MatchesKernelSupportScan) {
  const auto m = grid(2, 2, 2, 0.1);
  const auto all = enumerate_trajectories(m, 1000);
  std::size_t support = 0;
  for (int a = 0; a < 5; ++a) {
    for (int nx = 0; nx < 4; ++nx) support += m.probability(0, a, nx) > 0.0;
  }
  EXPECT_EQ(all.size(), support);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : all) {
    EXPECT_TRUE(seen.insert({e.trajectory.actions[0], e.trajectory.elements[1].state}).second);
    EXPECT_NEAR(e.kernel_mass, m.probability(0, e.trajectory.actions[0], e.trajectory.elements[1].state), 1e-15);
  }
}

TEST(EnumerateTrajectories, ProbabilitiesSumToOneForAnyPolicy) {
  const auto m = grid(2, 3, 4, 0.25);
  const auto all = enumerate_trajectories(m, 1'000'000);
  EXPECT_EQ(all.size(), oracle::all_paths(m).size());
  Rng rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const auto pi = oracle::random_policy(m, rng);
    double total = 0.0;
    for (const auto& e : all) {
      const double p = e.probability_under(pi);
      EXPECT_NEAR(p, trajectory_probability(m, pi, e.trajectory), 1e-15);
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(EnumerateTrajectories, BudgetExceededIsReported) {
  const auto m = grid(3, 3, 6);
  EXPECT_THROW(enumerate_trajectories(m, 100), BudgetExceeded);
}

TEST(EvaluatePolicyObjective, DeterministicPolicyBothModes) {
  const auto m = grid(3, 3, 5);
  const GroundSet& g = m.ground();
  const auto disks = grid_disks(*m.grid(), DiskShape::chebyshev(1));
  const auto f = coverage_reward(g, disks);
  std::vector<int> table(45, static_cast<int>(Move::right));
  for (int t = 0; t < 5; ++t) {
    table[static_cast<std::size_t>(t * 9 + 2)] = static_cast<int>(Move::up);
    table[static_cast<std::size_t>(t * 9 + 5)] = static_cast<int>(Move::up);
  }
  const auto pi = TabularPolicy::deterministic(m, table);
  Rng rng(0);
  const double induced = f->evaluate(sample_trajectory(m, pi, rng).flat(g));
  EXPECT_DOUBLE_EQ(oracle::coverage(disks, g, oracle::path_set(g, {0, 1, 2, 5, 8})), induced);
  EXPECT_DOUBLE_EQ(evaluate_policy_objective(m, pi, *f, ExactMode{}).mean, induced);
  const auto mc = evaluate_policy_objective(m, pi, *f, MonteCarloMode{50, &rng});
  EXPECT_DOUBLE_EQ(mc.mean, induced);
  EXPECT_DOUBLE_EQ(mc.std_error, 0.0);
}

TEST(EvaluatePolicyObjective, ExactAgreesWithIndependentEnumeration) {
  const auto m = grid(2, 2, 4, 0.1);
  const auto disks = grid_disks(*m.grid(), DiskShape::chebyshev(0));
  const auto f = coverage_reward(m.ground(), disks);
  Rng rng(17);
  for (int rep = 0; rep < 5; ++rep) {
    const auto pi = oracle::random_policy(m, rng);
    const double want = oracle::exact_objective(m, pi, [&](const auto& x) { return oracle::coverage(disks, m.ground(), x); });
    EXPECT_NEAR(evaluate_policy_objective(m, pi, *f, ExactMode{}).mean, want, 1e-12);
  }
}

TEST(EvaluatePolicyObjective, MonteCarloWithinThreeStandardErrors) {
  const auto m = grid(2, 2, 4, 0.1);
  const auto f = bounded_curvature_coverage(m.ground(), 0.3);
  Rng rng(99);
  const auto pi = oracle::random_policy(m, rng);
  const double exact = evaluate_policy_objective(m, pi, *f, ExactMode{}).mean;
  const auto mc = evaluate_policy_objective(m, pi, *f, MonteCarloMode{100000, &rng});
  EXPECT_GT(mc.std_error, 0.0);
  EXPECT_LE(std::abs(mc.mean - exact), 3.0 * mc.std_error);
}

TEST(EvaluatePolicyObjective, ConstantRewardGivesConstant) {
  const auto m = grid(2, 2, 3, 0.2);
  const ConstantReward f(m.ground(), 4.25);
  Rng rng(1);
  for (int rep = 0; rep < 3; ++rep) {
    const auto pi = oracle::random_policy(m, rng);
    EXPECT_NEAR(evaluate_policy_objective(m, pi, f, ExactMode{}).mean, 4.25, 1e-12);
    EXPECT_DOUBLE_EQ(evaluate_policy_objective(m, pi, f, MonteCarloMode{100, &rng}).mean, 4.25);
  }
}

TEST(EvaluatePolicyObjective, ExactModeRespectsBudget) {
  const auto m = grid(3, 3, 8, 0.1);
  const auto f = entropy_reward(m.ground());
  EXPECT_THROW(evaluate_policy_objective(m, TabularPolicy::uniform(m), *f, ExactMode{1000}), BudgetExceeded);
}

TEST(TabularPolicy, RejectsRowsThatAreNotDistributions) {
  EXPECT_THROW(TabularPolicy(1, 1, 2, {0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(TabularPolicy(1, 1, 2, {1.5, -0.5}), std::invalid_argument);
  EXPECT_THROW(TabularPolicy(1, 1, 2, {1.0}), std::invalid_argument);
  EXPECT_NO_THROW(TabularPolicy(1, 1, 2, {0.25, 0.75}));
}

TEST(Gmdp, RejectsBadKernel) {
  EXPECT_THROW(Gmdp(2, 1, 2, {{{0, 0.5}}, {{1, 1.0}}}, {1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(Gmdp(2, 1, 2, {{{2, 1.0}}, {{1, 1.0}}}, {1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(Gmdp(2, 1, 2, {{{0, 1.0}}, {{1, 1.0}}}, {0.5, 0.0}), std::invalid_argument);
}

TEST(Rng, DerivedStreamsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 10; ++s) {
    for (std::uint64_t stream = 1; stream <= 5; ++stream) seeds.insert(derive_seed(s, stream));
  }
  EXPECT_EQ(seeds.size(), 50u);
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const double x = uniform01(a);
    EXPECT_EQ(x, uniform01(b));
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
}
