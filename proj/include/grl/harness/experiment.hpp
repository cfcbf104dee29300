#pragma once

#include "grl/algorithms/gpo.hpp"
#include "grl/algorithms/gto.hpp"
#include "grl/algorithms/guarantee.hpp"
#include "grl/algorithms/mod.hpp"
#include "grl/harness/config.hpp"
#include "grl/harness/instance.hpp"
#include "grl/harness/plot.hpp"
#include "grl/harness/records.hpp"
#include "grl/rewards/curvature.hpp"
#include "grl/solver/brute_force.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <limits>
#include <thread>

namespace grl::harness {

/// Worker count: GRL_THREADS when set to a positive integer, else the hardware
/// concurrency; never more than the number of tasks.
inline int worker_count(int tasks) {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("GRL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = static_cast<int>(std::min<long>(v, 1024));
  }
  return std::max(1, std::min(n, tasks));
}

/// Runs body(i) for i in [0, n) on a small pool. The lowest-index failure is rethrown.
template <class Body>
void parallel_for(int n, Body&& body) {
  const int workers = worker_count(n);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct RunOptions {
  /// Write measured wall times; off keeps CSV output byte-identical across runs.
  bool record_wall_time = false;
};

/// Curvatures reported per run: (k_Q, k^G) of the parts when a decomposition
/// exists, else (k_F, k^F); nan when undefined.
inline CurvaturePair reported_curvature(const GlobalReward& f) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    if (const auto* parts = f.decomposition()) {
      return {compute_curvature(*parts->submodular).k_sub, compute_curvature(*parts->supermodular).k_sup};
    }
    const auto report = compute_curvature(f);
    return {report.k_sub, report.k_sup};
  } catch (const NumericalError&) {
    return {nan, nan};
  }
}

inline int reported_iterations(const ExperimentConfig& c) {
  int iters = 0;
  for (const auto& a : c.algorithms) {
    if (a.name == "gto" || a.name == "gpo") iters = std::max(iters, a.max_iters);
  }
  return iters;
}

namespace detail {
inline void append_trace(std::vector<RunRecord>& out, const RunRecord& base, const IterationTrace& trace,
                         int iterations, bool timing) {
  RunRecord row = base;
  for (int it = 0; it <= iterations; ++it) {
    // past convergence the last record repeats
    const auto& rec = trace.records[std::min<std::size_t>(static_cast<std::size_t>(it), trace.records.size() - 1)];
    row.iteration = it;
    row.objective = rec.objective;
    row.objective_stderr = rec.objective_std_error;
    row.bound_value = it == 0 ? rec.objective : rec.bound_at_candidate;
    if (static_cast<std::size_t>(it) >= trace.records.size()) row.bound_value = rec.objective;
    row.wall_ms = timing ? rec.wall_ms : 0.0;
    out.push_back(row);
  }
}

inline void append_constant(std::vector<RunRecord>& out, const RunRecord& base, double objective,
                            double stderr_value, double bound, int iterations, double wall_ms, bool timing) {
  RunRecord row = base;
  for (int it = 0; it <= iterations; ++it) {
    row.iteration = it;
    row.objective = objective;
    row.objective_stderr = stderr_value;
    row.bound_value = bound;
    row.wall_ms = timing ? wall_ms : 0.0;
    out.push_back(row);
  }
}
}  // namespace detail

/// Every configured algorithm on run r's instance. Algorithms of the same
/// family share their random streams, so variants start from the same iterate.
inline std::vector<RunRecord> run_single(const ExperimentConfig& c, const Gmdp& m, int run, const RunOptions& opts) {
  const auto seed = run_seed(c, run);
  const auto f = build_reward(c, m, run);
  const auto k = reported_curvature(*f);
  const int iterations = reported_iterations(c);
  const bool timing = opts.record_wall_time || c.record_wall_time;

  std::vector<RunRecord> out;
  for (const auto& a : c.algorithms) {
    RunRecord base;
    base.seed = seed;
    base.algorithm = a.label;
    base.k_sub = k.k_sub;
    base.k_sup = k.k_sup;
    if (a.name == "gto") {
      auto init_rng = stream_rng(seed, Stream::init);
      GtoOptions o;
      o.variant = a.lower_bound;
      o.max_iters = a.max_iters;
      o.init = random_trajectory(m, init_rng);
      auto rng = stream_rng(seed, Stream::algorithm);
      const auto res = run_gto(m, *f, o, rng);
      detail::append_trace(out, base, res.trace, iterations, timing);
    } else if (a.name == "gpo") {
      GpoOptions o;
      o.variant = a.lower_bound;
      o.max_iters = a.max_iters;
      o.n_traj_samples = resolved_traj_samples(c, a);
      o.eval_samples = a.eval_samples;
      o.exact_budget = c.evaluation.exact_budget;
      auto rng = stream_rng(seed, Stream::algorithm);
      const auto res = run_gpo(m, *f, o, rng);
      detail::append_trace(out, base, res.trace, iterations, timing);
    } else if (a.name == "mod") {
      grl::detail::Stopwatch clock;
      ModResult res = [&] {
        if (m.deterministic()) return run_mod_baseline(m, *f);
        try {
          return run_mod_baseline(m, *f, ExactMode{c.evaluation.exact_budget});
        } catch (const BudgetExceeded&) {
          auto eval_rng = stream_rng(seed, Stream::evaluation);
          return run_mod_baseline(m, *f, MonteCarloMode{c.evaluation.samples, &eval_rng});
        }
      }();
      detail::append_constant(out, base, res.objective.mean, res.objective.std_error, res.surrogate_value,
                              iterations, clock.elapsed_ms(), timing);
    } else if (a.name == "brute_force") {
      grl::detail::Stopwatch clock;
      const auto res = brute_force_optimum(m, *f, c.evaluation.exact_budget);
      detail::append_constant(out, base, res.value, 0.0, res.value, iterations, clock.elapsed_ms(), timing);
    } else {
      throw ConfigError("unknown algorithm '" + a.name + "'");
    }
  }
  return out;
}

struct ExperimentResult {
  std::vector<RunRecord> records;
  std::vector<SummaryRow> summary;
};

/// All runs (seeds c.seed .. c.seed + runs - 1), in parallel across seeds.
/// Records come back sorted by (run, algorithm as configured, iteration).
inline ExperimentResult run_experiment(const ExperimentConfig& c, const RunOptions& opts = {}) {
  const auto m = build_environment(c);
  std::vector<std::vector<RunRecord>> per_run(static_cast<std::size_t>(c.runs));
  parallel_for(c.runs, [&](int r) { per_run[static_cast<std::size_t>(r)] = run_single(c, m, r, opts); });
  ExperimentResult out;
  for (auto& rows : per_run) out.records.insert(out.records.end(), rows.begin(), rows.end());
  out.summary = summarize(out.records);
  return out;
}

/// records.csv, summary.csv, plot.svg and the resolved config.json under dir.
inline void write_outputs(const ExperimentConfig& c, const ExperimentResult& result, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError(dir + ": cannot create output directory: " + ec.message());
  auto open = [&](const char* name) {
    std::ofstream f(fs::path(dir) / name, std::ios::binary);
    if (!f) throw ConfigError((fs::path(dir) / name).string() + ": cannot write");
    return f;
  };
  {
    auto f = open("records.csv");
    write_csv(f, result.records);
  }
  {
    auto f = open("summary.csv");
    write_summary_csv(f, result.summary);
  }
  {
    auto f = open("plot.svg");
    PlotStyle style;
    style.title = c.reward.kind + " (" + std::to_string(c.runs) + " runs)";
    style.y_label = c.deterministic() ? "F(tau)" : "J(pi)";
    f << emit_plot(result.records, style);
  }
  {
    auto f = open("config.json");
    f << to_json(c).dump(2) << '\n';
  }
}

}  // namespace grl::harness
