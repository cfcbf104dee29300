#pragma once

#include "grl/core/errors.hpp"
#include "grl/core/gmdp.hpp"
#include "grl/harness/source_map.hpp"
#include "grl/rewards/coverage.hpp"
#include "grl/semigrad/lower_bounds.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace grl::harness {

using nlohmann::json;

inline const std::vector<std::string>& reward_kinds() {
  static const std::vector<std::string> kinds{"coverage",       "bounded_coverage", "entropy",
                                              "synergy",        "diverse_synergy",  "safe_coverage",
                                              "mutual_information", "additive"};
  return kinds;
}

inline const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"gto", "gpo", "mod", "brute_force"};
  return names;
}

struct RewardConfig {
  std::string kind = "coverage";
  double alpha = 0.1;
  double beta = 2.0;
  double penalty = 500.0;
  DiskShape disk = DiskShape::chebyshev(0);
  /// Explicit synergy sets (flat indices); drawn per seed when absent.
  std::optional<std::vector<std::vector<Element>>> synergy_sets;
  int num_synergy_sets = 10;
  int synergy_set_size = 2;
  /// Explicit unsafe states; drawn per seed when absent.
  std::optional<std::vector<int>> unsafe_states;
  int num_unsafe_states = 20;
  /// Additive reward weights over S x T.
  std::optional<std::vector<double>> weights;

  bool operator==(const RewardConfig&) const = default;
};

struct GpConfig {
  double nu = 2.5;
  double lengthscale = 2.0;
  double signal_variance = 1.0;
  double noise_variance = 0.1;
  /// Per-run lengthscales (run r uses entry r mod size); empty keeps lengthscale.
  std::vector<double> lengthscale_cycle;

  bool operator==(const GpConfig&) const = default;
};

struct AlgorithmConfig {
  std::string name = "gto";
  BoundVariant lower_bound = BoundVariant::full;
  int max_iters = 35;
  /// Defaults to 1 for deterministic and 20 for stochastic environments.
  std::optional<std::size_t> n_traj_samples;
  std::size_t eval_samples = 20;
  std::string label;

  bool operator==(const AlgorithmConfig&) const = default;
};

struct EvaluationConfig {
  /// Exact expectation when the trajectory tree has at most this many leaves.
  std::size_t exact_budget = 200000;
  /// Monte Carlo samples for reporting J of baselines otherwise.
  std::size_t samples = 1000;

  bool operator==(const EvaluationConfig&) const = default;
};

struct ExperimentConfig {
  GridConfig environment;
  RewardConfig reward;
  GpConfig gp;
  std::vector<AlgorithmConfig> algorithms;
  EvaluationConfig evaluation;
  int runs = 1;
  std::uint64_t seed = 0;
  std::string output_dir = "grl_out";
  bool record_wall_time = false;

  bool deterministic() const { return environment.stochasticity_degree == 0.0; }
};

inline bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  const auto env = [](const GridConfig& g) {
    return std::tie(g.width, g.height, g.horizon, g.stochasticity_degree, g.initial_state,
                    g.initial_distribution, g.seed);
  };
  return env(a.environment) == env(b.environment) && a.reward == b.reward && a.gp == b.gp &&
         a.algorithms == b.algorithms && a.evaluation == b.evaluation && a.runs == b.runs &&
         a.seed == b.seed && a.output_dir == b.output_dir && a.record_wall_time == b.record_wall_time;
}

inline std::string default_label(const std::string& name, BoundVariant v) {
  switch (v) {
    case BoundVariant::full: return name;
    case BoundVariant::state_dependent: return name + "-s";
    case BoundVariant::greedy_state_dependent: return name + "-greedy-s";
  }
  return name;
}

inline std::size_t resolved_traj_samples(const ExperimentConfig& c, const AlgorithmConfig& a) {
  return a.n_traj_samples.value_or(c.deterministic() ? 1 : 20);
}

namespace detail {

class ConfigReader {
 public:
  ConfigReader(std::string source, const std::string& text) : source_(std::move(source)), map_(text) {}

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    std::ostringstream os;
    os << source_ << ':' << map_.line_of(pointer) << ": " << (pointer.empty() ? "/" : pointer) << ": "
       << message;
    throw ConfigError(os.str());
  }

  void only_keys(const json& obj, const std::string& ptr, std::initializer_list<const char*> allowed) const {
    if (!obj.is_object()) fail(ptr, "expected an object");
    for (const auto& [key, _] : obj.items()) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; })) {
        fail(ptr + "/" + pointer_token(key), "unknown key '" + key + "'");
      }
    }
  }

  double number(const json& obj, const std::string& ptr, const char* key, double fallback) const {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number()) fail(ptr + "/" + key, "expected a number");
    return v.get<double>();
  }

  std::int64_t integer(const json& obj, const std::string& ptr, const char* key, std::int64_t fallback) const {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) fail(ptr + "/" + key, "expected an integer");
    return v.get<std::int64_t>();
  }

  std::string string(const json& obj, const std::string& ptr, const char* key, std::string fallback) const {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_string()) fail(ptr + "/" + key, "expected a string");
    return v.get<std::string>();
  }

  bool boolean(const json& obj, const std::string& ptr, const char* key, bool fallback) const {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_boolean()) fail(ptr + "/" + key, "expected true or false");
    return v.get<bool>();
  }

  std::vector<double> numbers(const json& v, const std::string& ptr) const {
    if (!v.is_array()) fail(ptr, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) fail(ptr + "/" + std::to_string(i), "expected a number");
      out.push_back(v[i].get<double>());
    }
    return out;
  }

  std::vector<std::int64_t> integers(const json& v, const std::string& ptr) const {
    if (!v.is_array()) fail(ptr, "expected an array of integers");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number_integer()) fail(ptr + "/" + std::to_string(i), "expected an integer");
      out.push_back(v[i].get<std::int64_t>());
    }
    return out;
  }

  void require(bool ok, const std::string& ptr, const std::string& message) const {
    if (!ok) fail(ptr, message);
  }

 private:
  std::string source_;
  SourceMap map_;
};

inline void parse_environment(const ConfigReader& r, const json& e, GridConfig& g) {
  const std::string p = "/environment";
  r.only_keys(e, p, {"width", "height", "horizon", "stochasticity_degree", "initial_state",
                     "initial_distribution", "seed"});
  g.width = static_cast<int>(r.integer(e, p, "width", g.width));
  g.height = static_cast<int>(r.integer(e, p, "height", g.height));
  g.horizon = static_cast<int>(r.integer(e, p, "horizon", g.horizon));
  g.stochasticity_degree = r.number(e, p, "stochasticity_degree", g.stochasticity_degree);
  if (e.contains("initial_state")) g.initial_state = static_cast<int>(r.integer(e, p, "initial_state", 0));
  if (e.contains("initial_distribution")) {
    g.initial_distribution = r.numbers(e.at("initial_distribution"), p + "/initial_distribution");
  }
  g.seed = static_cast<std::uint64_t>(r.integer(e, p, "seed", static_cast<std::int64_t>(g.seed)));

  r.require(g.width >= 1 && g.width <= 1000, p + "/width", "must lie in [1, 1000]");
  r.require(g.height >= 1 && g.height <= 1000, p + "/height", "must lie in [1, 1000]");
  r.require(g.horizon >= 1 && g.horizon <= 10000, p + "/horizon", "must lie in [1, 10000]");
  r.require(g.stochasticity_degree >= 0.0 && g.stochasticity_degree <= 1.0, p + "/stochasticity_degree",
            "must lie in [0, 1]");
  const int n = g.width * g.height;
  if (g.initial_state) {
    r.require(*g.initial_state >= 0 && *g.initial_state < n, p + "/initial_state",
              "state index out of range [0, " + std::to_string(n) + ")");
  }
  if (g.initial_distribution) {
    const auto& mu = *g.initial_distribution;
    r.require(mu.size() == static_cast<std::size_t>(n), p + "/initial_distribution",
              "needs one entry per state (" + std::to_string(n) + ")");
    double total = 0.0;
    for (double x : mu) {
      r.require(x >= 0.0, p + "/initial_distribution", "entries must be non-negative");
      total += x;
    }
    r.require(std::abs(total - 1.0) <= 1e-9, p + "/initial_distribution", "entries must sum to 1");
    r.require(!g.initial_state, p + "/initial_state", "give either initial_state or initial_distribution");
  }
}

inline void parse_reward(const ConfigReader& r, const json& o, RewardConfig& c, const GridConfig& env) {
  const std::string p = "/reward";
  r.only_keys(o, p, {"kind", "alpha", "beta", "penalty", "disk", "synergy_sets", "num_synergy_sets",
                     "synergy_set_size", "unsafe_states", "num_unsafe_states", "weights"});
  c.kind = r.string(o, p, "kind", c.kind);
  const auto& kinds = reward_kinds();
  r.require(std::find(kinds.begin(), kinds.end(), c.kind) != kinds.end(), p + "/kind",
            "unknown reward kind '" + c.kind + "'");
  c.alpha = r.number(o, p, "alpha", c.alpha);
  c.beta = r.number(o, p, "beta", c.beta);
  c.penalty = r.number(o, p, "penalty", c.penalty);
  r.require(c.alpha >= 0.0 && c.alpha <= 1.0, p + "/alpha", "must lie in [0, 1]");
  r.require(c.beta >= 1.0, p + "/beta", "must be >= 1");
  r.require(c.penalty >= 0.0, p + "/penalty", "must be >= 0");

  if (o.contains("disk")) {
    const std::string dp = p + "/disk";
    const auto& d = o.at("disk");
    r.only_keys(d, dp, {"shape", "radius", "side"});
    const auto shape = r.string(d, dp, "shape", "chebyshev");
    if (shape == "chebyshev") {
      r.require(!d.contains("side"), dp + "/side", "chebyshev disks take 'radius'");
      const auto radius = r.integer(d, dp, "radius", 0);
      r.require(radius >= 0, dp + "/radius", "must be >= 0");
      c.disk = DiskShape::chebyshev(static_cast<int>(radius));
    } else if (shape == "corner_square") {
      r.require(!d.contains("radius"), dp + "/radius", "corner_square disks take 'side'");
      const auto side = r.integer(d, dp, "side", 2);
      r.require(side >= 1, dp + "/side", "must be >= 1");
      c.disk = DiskShape::corner_square(static_cast<int>(side));
    } else {
      r.fail(dp + "/shape", "unknown disk shape '" + shape + "' (chebyshev, corner_square)");
    }
  }

  const std::int64_t n = static_cast<std::int64_t>(env.width) * env.height;
  const std::int64_t v = n * env.horizon;
  if (o.contains("synergy_sets")) {
    const std::string sp = p + "/synergy_sets";
    const auto& sets = o.at("synergy_sets");
    r.require(sets.is_array(), sp, "expected an array of arrays of flat indices");
    std::vector<std::vector<Element>> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto ip = sp + "/" + std::to_string(i);
      std::vector<Element> set;
      std::set<std::int64_t> seen;
      const auto values = r.integers(sets[i], ip);
      for (std::size_t j = 0; j < values.size(); ++j) {
        r.require(values[j] >= 0 && values[j] < v, ip + "/" + std::to_string(j),
                  "flat index out of range [0, " + std::to_string(v) + ")");
        r.require(seen.insert(values[j]).second, ip + "/" + std::to_string(j), "duplicate element");
        set.push_back(static_cast<Element>(values[j]));
      }
      out.push_back(std::move(set));
    }
    c.synergy_sets = std::move(out);
  }
  c.num_synergy_sets = static_cast<int>(r.integer(o, p, "num_synergy_sets", c.num_synergy_sets));
  c.synergy_set_size = static_cast<int>(r.integer(o, p, "synergy_set_size", c.synergy_set_size));
  r.require(c.num_synergy_sets >= 0, p + "/num_synergy_sets", "must be >= 0");
  r.require(c.synergy_set_size >= 1, p + "/synergy_set_size", "must be >= 1");

  if (o.contains("unsafe_states")) {
    const std::string up = p + "/unsafe_states";
    const auto values = r.integers(o.at("unsafe_states"), up);
    std::vector<int> states;
    for (std::size_t j = 0; j < values.size(); ++j) {
      r.require(values[j] >= 0 && values[j] < n, up + "/" + std::to_string(j),
                "state index out of range [0, " + std::to_string(n) + ")");
      states.push_back(static_cast<int>(values[j]));
    }
    c.unsafe_states = std::move(states);
  }
  c.num_unsafe_states = static_cast<int>(r.integer(o, p, "num_unsafe_states", c.num_unsafe_states));
  r.require(c.num_unsafe_states >= 0, p + "/num_unsafe_states", "must be >= 0");
  if (c.kind == "safe_coverage" && !c.unsafe_states) {
    r.require(c.num_unsafe_states < n, p + "/num_unsafe_states", "must lie in [0, num_states)");
  }

  if (o.contains("weights")) {
    c.weights = r.numbers(o.at("weights"), p + "/weights");
    r.require(c.weights->size() == static_cast<std::size_t>(v), p + "/weights",
              "needs one entry per (state, time) pair (" + std::to_string(v) + ")");
  }
  if (c.kind == "additive") r.require(c.weights.has_value(), p + "/kind", "additive reward needs 'weights'");
}

inline void parse_gp(const ConfigReader& r, const json& o, GpConfig& c) {
  const std::string p = "/gp";
  r.only_keys(o, p, {"nu", "lengthscale", "signal_variance", "noise_variance", "lengthscale_cycle"});
  c.nu = r.number(o, p, "nu", c.nu);
  c.lengthscale = r.number(o, p, "lengthscale", c.lengthscale);
  c.signal_variance = r.number(o, p, "signal_variance", c.signal_variance);
  c.noise_variance = r.number(o, p, "noise_variance", c.noise_variance);
  r.require(c.nu == 0.5 || c.nu == 1.5 || c.nu == 2.5, p + "/nu", "must be 0.5, 1.5 or 2.5");
  r.require(c.lengthscale > 0.0, p + "/lengthscale", "must be > 0");
  r.require(c.signal_variance > 0.0, p + "/signal_variance", "must be > 0");
  r.require(c.noise_variance > 0.0, p + "/noise_variance", "must be > 0");
  if (o.contains("lengthscale_cycle")) {
    c.lengthscale_cycle = r.numbers(o.at("lengthscale_cycle"), p + "/lengthscale_cycle");
    for (std::size_t i = 0; i < c.lengthscale_cycle.size(); ++i) {
      r.require(c.lengthscale_cycle[i] > 0.0, p + "/lengthscale_cycle/" + std::to_string(i), "must be > 0");
    }
  }
}

inline AlgorithmConfig parse_algorithm(const ConfigReader& r, const json& o, const std::string& p) {
  r.only_keys(o, p, {"name", "lower_bound", "max_iters", "n_traj_samples", "eval_samples", "label"});
  AlgorithmConfig a;
  a.name = r.string(o, p, "name", a.name);
  const auto& names = algorithm_names();
  r.require(std::find(names.begin(), names.end(), a.name) != names.end(), p + "/name",
            "unknown algorithm '" + a.name + "' (gto, gpo, mod, brute_force)");
  const auto lb = r.string(o, p, "lower_bound", "full");
  try {
    a.lower_bound = parse_variant(lb);
  } catch (const std::invalid_argument&) {
    r.fail(p + "/lower_bound", "unknown lower bound '" + lb + "' (full, state_dependent, greedy_state_dependent)");
  }
  a.max_iters = static_cast<int>(r.integer(o, p, "max_iters", a.max_iters));
  r.require(a.max_iters >= 0 && a.max_iters <= 100000, p + "/max_iters", "must lie in [0, 100000]");
  if (o.contains("n_traj_samples")) {
    const auto n = r.integer(o, p, "n_traj_samples", 1);
    r.require(n >= 1, p + "/n_traj_samples", "must be >= 1");
    a.n_traj_samples = static_cast<std::size_t>(n);
  }
  const auto e = r.integer(o, p, "eval_samples", static_cast<std::int64_t>(a.eval_samples));
  r.require(e >= 1, p + "/eval_samples", "must be >= 1");
  a.eval_samples = static_cast<std::size_t>(e);
  a.label = r.string(o, p, "label", default_label(a.name, a.lower_bound));
  r.require(!a.label.empty() && a.label.find_first_of(",\"\n\r") == std::string::npos, p + "/label",
            "must be non-empty without commas, quotes or newlines");
  return a;
}

inline bool state_level_reward(const std::string& kind) {
  // time invariant and monotone: the state-dependent bounds apply to the submodular part
  return kind == "coverage" || kind == "bounded_coverage" || kind == "mutual_information" ||
         kind == "diverse_synergy" || kind == "safe_coverage" || kind == "synergy";
}

}  // namespace detail

/// Parses and validates an experiment config. Errors carry source:line and the
/// JSON pointer of the offending field.
inline ExperimentConfig parse_config(const std::string& text, const std::string& source = "<config>") {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                      ": malformed JSON: " + e.what());
  }
  const detail::ConfigReader r(source, text);
  r.only_keys(doc, "", {"environment", "reward", "gp", "algorithm", "algorithms", "evaluation", "runs",
                        "seed", "output_dir", "output"});

  ExperimentConfig c;
  if (doc.contains("environment")) detail::parse_environment(r, doc.at("environment"), c.environment);
  if (doc.contains("reward")) detail::parse_reward(r, doc.at("reward"), c.reward, c.environment);
  if (doc.contains("gp")) detail::parse_gp(r, doc.at("gp"), c.gp);

  r.require(!(doc.contains("algorithm") && doc.contains("algorithms")), "/algorithm",
            "give either 'algorithm' or 'algorithms'");
  if (doc.contains("algorithm")) {
    c.algorithms.push_back(detail::parse_algorithm(r, doc.at("algorithm"), "/algorithm"));
  } else if (doc.contains("algorithms")) {
    const auto& list = doc.at("algorithms");
    r.require(list.is_array() && !list.empty(), "/algorithms", "expected a non-empty array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      c.algorithms.push_back(detail::parse_algorithm(r, list[i], "/algorithms/" + std::to_string(i)));
    }
  } else {
    c.algorithms.push_back(AlgorithmConfig{});
    c.algorithms.back().label = "gto";
  }
  const std::string list_ptr = doc.contains("algorithm") ? "/algorithm" : "/algorithms";
  std::set<std::string> labels;
  for (std::size_t i = 0; i < c.algorithms.size(); ++i) {
    const auto& a = c.algorithms[i];
    const auto ap = doc.contains("algorithm") ? list_ptr : list_ptr + "/" + std::to_string(i);
    r.require(labels.insert(a.label).second, ap + "/label", "duplicate algorithm label '" + a.label + "'");
    if (a.name == "gto" || a.name == "brute_force") {
      r.require(c.deterministic(), ap + "/name", a.name + " needs a deterministic environment (stochasticity_degree 0)");
      r.require(!c.environment.initial_distribution, ap + "/name", a.name + " needs a single initial_state");
    }
    if (a.lower_bound != BoundVariant::full) {
      r.require(detail::state_level_reward(c.reward.kind), ap + "/lower_bound",
                "state-dependent bounds need a time-invariant monotone reward part; '" + c.reward.kind +
                    "' is not");
    }
  }

  if (doc.contains("evaluation")) {
    const auto& o = doc.at("evaluation");
    r.only_keys(o, "/evaluation", {"exact_budget", "samples"});
    const auto budget = r.integer(o, "/evaluation", "exact_budget", static_cast<std::int64_t>(c.evaluation.exact_budget));
    const auto samples = r.integer(o, "/evaluation", "samples", static_cast<std::int64_t>(c.evaluation.samples));
    r.require(budget >= 1, "/evaluation/exact_budget", "must be >= 1");
    r.require(samples >= 1, "/evaluation/samples", "must be >= 1");
    c.evaluation.exact_budget = static_cast<std::size_t>(budget);
    c.evaluation.samples = static_cast<std::size_t>(samples);
  }
  const auto runs = r.integer(doc, "", "runs", c.runs);
  r.require(runs >= 1 && runs <= 100000, "/runs", "must lie in [1, 100000]");
  c.runs = static_cast<int>(runs);
  const auto seed = r.integer(doc, "", "seed", 0);
  r.require(seed >= 0, "/seed", "must be >= 0");
  c.seed = static_cast<std::uint64_t>(seed);
  c.output_dir = r.string(doc, "", "output_dir", c.output_dir);
  if (doc.contains("output")) {
    const auto& o = doc.at("output");
    r.only_keys(o, "/output", {"dir", "record_wall_time"});
    r.require(!doc.contains("output_dir") || !o.contains("dir"), "/output/dir", "give either output_dir or output.dir");
    c.output_dir = r.string(o, "/output", "dir", c.output_dir);
    c.record_wall_time = r.boolean(o, "/output", "record_wall_time", c.record_wall_time);
  }
  return c;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path);
}

inline json to_json(const ExperimentConfig& c) {
  json env{{"width", c.environment.width},
           {"height", c.environment.height},
           {"horizon", c.environment.horizon},
           {"stochasticity_degree", c.environment.stochasticity_degree},
           {"seed", c.environment.seed}};
  if (c.environment.initial_state) env["initial_state"] = *c.environment.initial_state;
  if (c.environment.initial_distribution) env["initial_distribution"] = *c.environment.initial_distribution;

  const auto& rc = c.reward;
  json disk = rc.disk.kind == DiskShape::Kind::chebyshev
                  ? json{{"shape", "chebyshev"}, {"radius", rc.disk.size}}
                  : json{{"shape", "corner_square"}, {"side", rc.disk.size}};
  json reward{{"kind", rc.kind},
              {"alpha", rc.alpha},
              {"beta", rc.beta},
              {"penalty", rc.penalty},
              {"disk", disk},
              {"num_synergy_sets", rc.num_synergy_sets},
              {"synergy_set_size", rc.synergy_set_size},
              {"num_unsafe_states", rc.num_unsafe_states}};
  if (rc.synergy_sets) reward["synergy_sets"] = *rc.synergy_sets;
  if (rc.unsafe_states) reward["unsafe_states"] = *rc.unsafe_states;
  if (rc.weights) reward["weights"] = *rc.weights;

  json gp{{"nu", c.gp.nu},
          {"lengthscale", c.gp.lengthscale},
          {"signal_variance", c.gp.signal_variance},
          {"noise_variance", c.gp.noise_variance}};
  if (!c.gp.lengthscale_cycle.empty()) gp["lengthscale_cycle"] = c.gp.lengthscale_cycle;

  json algos = json::array();
  for (const auto& a : c.algorithms) {
    json j{{"name", a.name},
           {"lower_bound", std::string(variant_name(a.lower_bound))},
           {"max_iters", a.max_iters},
           {"eval_samples", a.eval_samples},
           {"label", a.label}};
    if (a.n_traj_samples) j["n_traj_samples"] = *a.n_traj_samples;
    algos.push_back(std::move(j));
  }
  return json{{"environment", env},
              {"reward", reward},
              {"gp", gp},
              {"algorithms", algos},
              {"evaluation", {{"exact_budget", c.evaluation.exact_budget}, {"samples", c.evaluation.samples}}},
              {"runs", c.runs},
              {"seed", c.seed},
              {"output", {{"dir", c.output_dir}, {"record_wall_time", c.record_wall_time}}}};
}

}  // namespace grl::harness
