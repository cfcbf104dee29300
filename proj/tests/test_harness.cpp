#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>

using namespace grl;
using namespace grl::harness;

namespace {

std::string error_of(const std::string& text, const std::string& source = "src") {
  try {
    parse_config(text, source);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

const char* kSmall = R"({
  "environment": {"width": 3, "height": 3, "horizon": 4, "initial_state": 0},
  "reward": {"kind": "coverage", "disk": {"shape": "chebyshev", "radius": 0}},
  "algorithms": [
    {"name": "gto", "max_iters": 5},
    {"name": "gto", "lower_bound": "state_dependent", "max_iters": 5},
    {"name": "mod"},
    {"name": "brute_force"}
  ],
  "runs": 4,
  "seed": 11
})";

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("grl_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

/// The y values of the first polyline in an SVG document.
std::vector<double> polyline_y(const std::string& svg, std::size_t which = 0) {
  std::size_t at = 0;
  for (std::size_t i = 0; i <= which; ++i) {
    at = svg.find("<polyline", at);
    if (at == std::string::npos) return {};
    if (i < which) ++at;
  }
  const auto start = svg.find("points=\"", at) + 8;
  const auto stop = svg.find('"', start);
  std::istringstream pts(svg.substr(start, stop - start));
  std::vector<double> ys;
  std::string pair;
  while (pts >> pair) ys.push_back(std::stod(pair.substr(pair.find(',') + 1)));
  return ys;
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(Config, EmptyObjectGivesDefaults) {
  const auto c = parse_config("{}");
  EXPECT_EQ(c.runs, 1);
  EXPECT_EQ(c.seed, 0u);
  ASSERT_EQ(c.algorithms.size(), 1u);
  EXPECT_EQ(c.algorithms[0].name, "gto");
  EXPECT_EQ(c.reward.kind, "coverage");
  EXPECT_TRUE(c.deterministic());
}

TEST(Config, UnknownKeyCarriesLineAndPointer) {
  const auto msg = error_of("{\n  \"environment\": {\n    \"widht\": 3\n  }\n}");
  EXPECT_EQ(msg, "src:3: /environment/widht: unknown key 'widht'");
  EXPECT_EQ(error_of("{\"runs\": 2, \"color\": 1}"), "src:1: /color: unknown key 'color'");
}

TEST(Config, RangeErrorsNameTheField) {
  EXPECT_EQ(error_of("{\n  \"environment\": {\"width\": 0}\n}"), "src:2: /environment/width: must lie in [1, 1000]");
  EXPECT_NE(error_of("{\"runs\": 0}").find("/runs: must lie in"), std::string::npos);
  EXPECT_NE(error_of("{\"environment\": {\"stochasticity_degree\": 1.5}}").find("/environment/stochasticity_degree"),
            std::string::npos);
  EXPECT_NE(error_of("{\"reward\": {\"kind\": \"bananas\"}}").find("unknown reward kind"), std::string::npos);
  EXPECT_NE(error_of("{\"environment\": {\"width\": \"3\"}}").find("expected an integer"), std::string::npos);
  EXPECT_NE(error_of("{\"reward\": {\"kind\": \"additive\"}}").find("needs 'weights'"), std::string::npos);
  const std::string cfg = "{\n\"environment\": {\"width\": 2, \"height\": 2},\n\"algorithms\": [\n{\"name\": \"mod\"},\n{\"name\": \"warp\"}]}";
  EXPECT_EQ(error_of(cfg).substr(0, 31), "src:5: /algorithms/1/name: unkn");
}

TEST(Config, MalformedJsonReportsLineAndColumn) {
  const auto msg = error_of("{\n  \"runs\": ,\n}");
  EXPECT_TRUE(std::regex_search(msg, std::regex("^src:2:[0-9]+: malformed JSON"))) << msg;
}

TEST(Config, CrossFieldRules) {
  EXPECT_NE(error_of(R"({"environment": {"stochasticity_degree": 0.1}, "algorithm": {"name": "gto"}})")
                .find("/algorithm/name: gto needs a deterministic environment"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"algorithms": [{"name": "mod"}, {"name": "mod"}]})").find("duplicate algorithm label 'mod'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"reward": {"kind": "entropy"}, "algorithm": {"lower_bound": "state_dependent"}})")
                .find("state-dependent bounds"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"algorithm": {"name": "mod"}, "algorithms": []})").find("either"), std::string::npos);
  EXPECT_NO_THROW(parse_config(R"({"algorithms": [{"name": "mod"}, {"name": "mod", "label": "mod2"}]})"));
}

TEST(Config, JsonRoundTrip) {
  const auto c = parse_config(kSmall);
  EXPECT_EQ(parse_config(to_json(c).dump()), c);
  for (const auto& name : preset_names()) {
    const auto p = preset(name);
    EXPECT_EQ(parse_config(to_json(p).dump(2), name), p) << name;
  }
}

TEST(Config, ExplicitSetsAreValidated) {
  EXPECT_NE(error_of(R"({"environment": {"width": 2, "height": 2, "horizon": 2},
                         "reward": {"kind": "synergy", "synergy_sets": [[0, 8]]}})")
                .find("/reward/synergy_sets/0/1: flat index out of range [0, 8)"),
            std::string::npos);
  const auto c = parse_config(R"({"environment": {"width": 2, "height": 2, "horizon": 2},
                                  "reward": {"kind": "synergy", "synergy_sets": [[0, 7], [3]]}})");
  ASSERT_TRUE(c.reward.synergy_sets);
  EXPECT_EQ(c.reward.synergy_sets->size(), 2u);
}

TEST(Presets, MatchTheirExperiments) {
  const auto design = preset("design");
  EXPECT_EQ(design.environment.width * design.environment.height, 400);
  EXPECT_EQ(design.environment.horizon, 10);
  EXPECT_EQ(reported_iterations(design), 6);
  EXPECT_EQ(design.reward.kind, "mutual_information");
  const auto safe = preset("safe_coverage");
  EXPECT_EQ(safe.reward.penalty, 500.0);
  EXPECT_TRUE(safe.deterministic());
  const auto syn = preset("synergies");
  EXPECT_EQ(syn.environment.stochasticity_degree, 0.1);
  EXPECT_EQ(syn.reward.beta, 2.0);
  const auto cov = preset("coverage");
  EXPECT_EQ(cov.environment.horizon, 31);
  EXPECT_EQ(reported_iterations(cov), 35);
  EXPECT_THROW(preset("nope"), ConfigError);
}

TEST(Experiment, RecordsAreCompleteAndConsistent) {
  const auto c = parse_config(kSmall);
  const auto m = build_environment(c);
  const auto res = run_experiment(c);
  const int iters = reported_iterations(c);
  ASSERT_EQ(iters, 5);
  ASSERT_EQ(res.records.size(), static_cast<std::size_t>(4 * 4 * (iters + 1)));
  const auto f = coverage_reward(m.ground(), grid_disks(*m.grid(), DiskShape::chebyshev(0)));
  const double best = brute_force_optimum(m, *f).value;
  const auto k = compute_curvature(*f);
  std::map<std::pair<std::uint64_t, std::string>, std::vector<RunRecord>> series;
  for (const auto& r : res.records) series[{r.seed, r.algorithm}].push_back(r);
  ASSERT_EQ(series.size(), 16u);
  for (const auto& [key, rows] : series) {
    ASSERT_EQ(rows.size(), static_cast<std::size_t>(iters + 1));
    for (int i = 0; i <= iters; ++i) {
      const auto& r = rows[static_cast<std::size_t>(i)];
      EXPECT_EQ(r.iteration, i);
      EXPECT_EQ(r.wall_ms, 0.0);
      EXPECT_NEAR(r.k_sub, k.k_sub, 1e-12);
      EXPECT_LE(r.objective, best + 1e-9);
      if (i > 0) {
        EXPECT_GE(r.objective, rows[static_cast<std::size_t>(i - 1)].objective - 1e-9);
      }
    }
    EXPECT_GE(key.first, 11u);
    EXPECT_LE(key.first, 14u);
    if (key.second == "brute_force") {
      EXPECT_EQ(rows.back().objective, best);
    } else if (key.second == "mod") {
      EXPECT_EQ(rows.front().objective, rows.back().objective);
    } else if (key.second == "gto") {
      EXPECT_EQ(rows[0].bound_value, rows[0].objective);
    }
  }
}

TEST(Experiment, VariantsShareTheirInitialIterate) {
  const auto res = run_experiment(parse_config(kSmall));
  std::map<std::uint64_t, std::vector<double>> starts;
  for (const auto& r : res.records) {
    if (r.iteration == 0 && r.algorithm.rfind("gto", 0) == 0) starts[r.seed].push_back(r.objective);
  }
  for (const auto& [seed, s] : starts) {
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0], s[1]) << seed;
  }
}

TEST(Experiment, StochasticRunWithExactEvaluation) {
  const auto c = parse_config(R"({
    "environment": {"width": 2, "height": 2, "horizon": 3, "stochasticity_degree": 0.2},
    "reward": {"kind": "bounded_coverage", "alpha": 0.5},
    "algorithms": [{"name": "gpo", "max_iters": 3, "n_traj_samples": 4}, {"name": "mod"}],
    "runs": 2
  })");
  const auto res = run_experiment(c);
  ASSERT_EQ(res.records.size(), 2u * 2u * 4u);
  for (const auto& r : res.records) {
    EXPECT_EQ(r.objective_stderr, 0.0);
    EXPECT_GT(r.objective, 0.0);
  }
}

TEST(Experiment, AdditiveRewardThroughConfig) {
  std::string weights;
  for (int i = 0; i < 12; ++i) weights += (i ? "," : "") + std::to_string(i % 5);
  const auto c = parse_config(R"({"environment": {"width": 2, "height": 2, "horizon": 3},
                                  "reward": {"kind": "additive", "weights": [)" + weights + R"(]},
                                  "algorithms": [{"name": "gto", "max_iters": 3}, {"name": "brute_force"}]})");
  const auto res = run_experiment(c);
  double gto = 0, bf = 0;
  for (const auto& r : res.records) {
    if (r.iteration != 3) continue;
    (r.algorithm == "gto" ? gto : bf) = r.objective;
    EXPECT_EQ(r.k_sub, 0.0);
    EXPECT_EQ(r.k_sup, 0.0);
  }
  EXPECT_EQ(gto, bf);
}

TEST(Experiment, ThreadCountDoesNotChangeResults) {
  const auto c = parse_config(kSmall);
  ::setenv("GRL_THREADS", "1", 1);
  EXPECT_EQ(worker_count(8), 1);
  const auto one = to_csv(run_experiment(c).records);
  ::setenv("GRL_THREADS", "3", 1);
  EXPECT_EQ(worker_count(8), 3);
  EXPECT_EQ(worker_count(2), 2);
  const auto three = to_csv(run_experiment(c).records);
  ::setenv("GRL_THREADS", "zero", 1);
  EXPECT_GE(worker_count(8), 1);
  ::unsetenv("GRL_THREADS");
  EXPECT_EQ(one, three);
}

TEST(Records, HeaderIsExact) {
  EXPECT_EQ(to_csv({}), "seed,algorithm,iteration,objective,objective_stderr,bound_value,k_sub,k_sup,wall_ms\n");
}

TEST(Records, DoublesRoundTripLosslessly) {
  Rng rng(5);
  std::vector<RunRecord> rows;
  for (int i = 0; i < 500; ++i) {
    RunRecord r;
    r.seed = rng();
    r.algorithm = "a" + std::to_string(i % 3);
    r.iteration = i;
    r.objective = (uniform01(rng) - 0.5) * std::pow(10.0, static_cast<double>(uniform_index(40, rng)) - 20.0);
    r.objective_stderr = uniform01(rng);
    r.bound_value = -r.objective / 3.0;
    r.k_sub = uniform01(rng);
    r.k_sup = i % 7 == 0 ? std::numeric_limits<double>::infinity() : uniform01(rng);
    r.wall_ms = 0.1 * i;
    rows.push_back(r);
  }
  std::istringstream in(to_csv(rows));
  EXPECT_EQ(read_csv(in), rows);
  RunRecord nan_row;
  nan_row.algorithm = "x";
  nan_row.k_sub = std::numeric_limits<double>::quiet_NaN();
  std::istringstream nin(to_csv({nan_row}));
  EXPECT_TRUE(std::isnan(read_csv(nin).at(0).k_sub));
}

TEST(Records, RejectsMalformedInput) {
  std::istringstream bad_header("seed,algo\n");
  EXPECT_THROW(read_csv(bad_header), ConfigError);
  std::istringstream short_row(std::string(kCsvHeader) + "\n1,gto,0,1.0\n");
  EXPECT_THROW(read_csv(short_row), ConfigError);
  std::istringstream bad_number(std::string(kCsvHeader) + "\n1,gto,0,1.0x,0,0,0,0,0\n");
  EXPECT_THROW(read_csv(bad_number), ConfigError);
  std::istringstream crlf(std::string(kCsvHeader) + "\r\n1,gto,0,1,0,0,0,0,0\r\n");
  EXPECT_EQ(read_csv(crlf).size(), 1u);
}

TEST(Records, SummaryMatchesDirectStatistics) {
  const auto res = run_experiment(parse_config(kSmall));
  for (const auto& row : res.summary) {
    std::vector<double> xs;
    for (const auto& r : res.records) {
      if (r.algorithm == row.algorithm && r.iteration == row.iteration) xs.push_back(r.objective);
    }
    ASSERT_EQ(xs.size(), row.runs);
    double mean = 0;
    for (double x : xs) mean += x / static_cast<double>(xs.size());
    double var = 0;
    for (double x : xs) var += (x - mean) * (x - mean) / static_cast<double>(xs.size() - 1);
    EXPECT_NEAR(row.mean, mean, 1e-9);
    EXPECT_NEAR(row.std_dev, std::sqrt(var), 1e-9);
  }
  EXPECT_EQ(res.summary.front().algorithm, "gto");
}

TEST(Records, WrittenOutputsAreByteIdenticalAcrossRuns) {
  const auto c = parse_config(kSmall);
  const auto a = scratch("det_a"), b = scratch("det_b");
  write_outputs(c, run_experiment(c), a.string());
  write_outputs(c, run_experiment(c), b.string());
  for (const char* name : {"records.csv", "summary.csv", "plot.svg", "config.json"}) {
    EXPECT_FALSE(read_file(a / name).empty()) << name;
    EXPECT_EQ(read_file(a / name), read_file(b / name)) << name;
  }
  EXPECT_EQ(parse_config(read_file(a / "config.json")), c);
}

TEST(Plot, WellFormedWithBandsPerAlgorithm) {
  const auto res = run_experiment(parse_config(kSmall));
  const auto svg = emit_plot(res.records);
  std::string why;
  EXPECT_TRUE(oracle::well_formed_xml(svg, &why)) << why;
  EXPECT_EQ(count_of(svg, "<polyline"), 4u);
  // four runs per series, so every algorithm gets a band
  EXPECT_EQ(count_of(svg, "<polygon"), 4u);
}

TEST(Plot, SingleRunHasNoBand) {
  std::vector<RunRecord> rows;
  for (int i = 0; i < 5; ++i) rows.push_back(RunRecord{0, "gto", i, 1.0 + i, 0, 0, 0, 0, 0});
  const auto svg = emit_plot(rows);
  EXPECT_TRUE(oracle::well_formed_xml(svg));
  EXPECT_EQ(count_of(svg, "<polyline"), 1u);
  EXPECT_EQ(count_of(svg, "<polygon"), 0u);
  // rising objective, falling SVG y
  const auto ys = polyline_y(svg);
  ASSERT_EQ(ys.size(), 5u);
  for (std::size_t i = 1; i < ys.size(); ++i) EXPECT_LT(ys[i], ys[i - 1]);
}

TEST(Plot, ConstantSeriesIsHorizontal) {
  std::vector<RunRecord> rows;
  for (int i = 0; i < 4; ++i) rows.push_back(RunRecord{0, "mod", i, 7.0, 0, 0, 0, 0, 0});
  const auto ys = polyline_y(emit_plot(rows));
  ASSERT_EQ(ys.size(), 4u);
  for (double y : ys) EXPECT_EQ(y, ys.front());
}

TEST(Plot, EscapesLabels) {
  std::vector<RunRecord> rows{RunRecord{0, "a<b&c", 0, 1.0, 0, 0, 0, 0, 0}};
  PlotStyle style;
  style.title = "\"quoted\" & <tagged>";
  const auto svg = emit_plot(rows, style);
  std::string why;
  EXPECT_TRUE(oracle::well_formed_xml(svg, &why)) << why;
  EXPECT_NE(svg.find("a&lt;b&amp;c"), std::string::npos);
}

TEST(SourceMapTest, LinesOfNestedPointers) {
  const std::string text = "{\n \"a\": {\n  \"b\": [1,\n   2]\n },\n \"c/d\": 3\n}";
  const SourceMap map(text);
  EXPECT_EQ(map.line_of(""), 1);
  EXPECT_EQ(map.line_of("/a"), 2);
  EXPECT_EQ(map.line_of("/a/b"), 3);
  EXPECT_EQ(map.line_of("/a/b/1"), 4);
  EXPECT_EQ(map.line_of("/c~1d"), 6);
  // unknown children fall back to their nearest parent
  EXPECT_EQ(map.line_of("/a/zzz"), 2);
}

TEST(Guarantees, HoldOnSmallBoundedCoverage) {
  const auto c = parse_config(R"({"environment": {"width": 3, "height": 3, "horizon": 4},
                                  "reward": {"kind": "bounded_coverage", "alpha": 0.5}, "runs": 5})");
  const auto rows = check_guarantees(c);
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.check.pass);
    EXPECT_FALSE(r.check.vacuous);
    EXPECT_NEAR(r.check.alpha, 0.5, 1e-12);
  }
  std::ostringstream os;
  print_guarantees(os, rows);
  EXPECT_EQ(count_of(os.str(), ",pass\n"), 5u);
}

#ifdef GRL_CLI_PATH
namespace {
int cli(const std::string& args) {
  const int status = std::system((std::string(GRL_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
}  // namespace

TEST(Cli, ExitCodes) {
  const auto dir = scratch("cli");
  const auto config = dir / "small.json";
  std::ofstream(config) << kSmall;
  std::ofstream(dir / "bad.json") << "{\"environment\": {\"width\": -1}}";
  EXPECT_EQ(cli("run " + config.string() + " --out " + (dir / "out").string()), 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "records.csv"));
  EXPECT_EQ(cli("run " + (dir / "bad.json").string()), 2);
  EXPECT_EQ(cli("run " + (dir / "missing.json").string()), 2);
  EXPECT_EQ(cli("preset nope"), 2);
  EXPECT_EQ(cli("frobnicate"), 2);
  EXPECT_EQ(cli("preset design --out " + (dir / "design.json").string()), 0);
  EXPECT_EQ(parse_config(read_file(dir / "design.json")), preset("design"));
  EXPECT_EQ(cli("plot " + (dir / "out" / "records.csv").string() + " --out " + (dir / "p.svg").string()), 0);
  EXPECT_TRUE(oracle::well_formed_xml(read_file(dir / "p.svg")));
  EXPECT_EQ(cli("check-guarantees " + config.string()), 0);
}

TEST(Cli, SeedFlagOverridesConfig) {
  const auto dir = scratch("cli_seed");
  const auto config = dir / "small.json";
  std::ofstream(config) << kSmall;
  ASSERT_EQ(cli("run " + config.string() + " --seed 40 --out " + (dir / "a").string()), 0);
  const auto rows = load_csv((dir / "a" / "records.csv").string());
  EXPECT_EQ(rows.front().seed, 40u);
  EXPECT_EQ(rows.back().seed, 43u);
}
#endif
