// grl: run GMDP experiments, emit presets, plot records, check guarantees.
//
// Exit codes: 0 success, 1 a guarantee check failed (check-guarantees) or an
// unexpected error, 2 configuration or usage error, 3 numerical failure.

#include "grl/grl.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace grl;
using namespace grl::harness;

int cmd_run(const std::string& path, std::optional<std::uint64_t> seed, std::optional<std::string> out,
            std::optional<int> runs, bool timing) {
  auto config = load_config(path);
  if (seed) config.seed = *seed;
  if (runs) {
    if (*runs < 1) throw ConfigError("--runs must be >= 1");
    config.runs = *runs;
  }
  if (out) config.output_dir = *out;
  RunOptions opts;
  opts.record_wall_time = timing;
  const auto result = run_experiment(config, opts);
  write_outputs(config, result, config.output_dir);

  const int last = reported_iterations(config);
  std::cout << "wrote " << result.records.size() << " records to " << config.output_dir << "/records.csv\n";
  for (const auto& row : result.summary) {
    if (row.iteration != last) continue;
    std::cout << "  " << row.algorithm << ": mean " << format_double(row.mean) << " std "
              << format_double(row.std_dev) << " over " << row.runs << " runs\n";
  }
  return 0;
}

int cmd_preset(const std::string& name, std::optional<std::string> out) {
  const auto text = to_json(preset(name)).dump(2) + "\n";
  if (!out) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(*out, std::ios::binary);
  if (!f) throw ConfigError(*out + ": cannot write");
  f << text;
  return 0;
}

int cmd_plot(const std::string& path, std::optional<std::string> out) {
  const auto records = load_csv(path);
  if (records.empty()) throw ConfigError(path + ": no records to plot");
  const auto target = out.value_or(std::filesystem::path(path).replace_extension(".svg").string());
  std::ofstream f(target, std::ios::binary);
  if (!f) throw ConfigError(target + ": cannot write");
  f << emit_plot(records);
  std::cout << "wrote " << target << "\n";
  return 0;
}

int cmd_check(const std::string& path) {
  const auto config = load_config(path);
  const auto rows = check_guarantees(config);
  print_guarantees(std::cout, rows);
  std::size_t pass = 0, vacuous = 0;
  for (const auto& r : rows) {
    pass += r.check.pass ? 1 : 0;
    vacuous += r.check.vacuous ? 1 : 0;
  }
  std::cout << pass << "/" << rows.size() << " hold (" << vacuous << " vacuous)\n";
  return pass == rows.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global-reward MDP solvers: semi-gradient trajectory and policy optimization"};
  app.require_subcommand(1);

  std::string config_path, name, records_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> runs;
  bool timing = false;

  auto* run = app.add_subcommand("run", "run an experiment config; writes records.csv, summary.csv, plot.svg");
  run->add_option("config", config_path, "experiment config (JSON)")->required();
  run->add_option("--seed", seed, "base seed (overrides the config)");
  run->add_option("--out", out, "output directory (overrides the config)");
  run->add_option("--runs", runs, "number of seeds (overrides the config)");
  run->add_flag("--timing", timing, "record wall-clock times (CSV no longer byte-reproducible)");

  auto* pre = app.add_subcommand("preset", "print a preset config: design, synergies, safe_coverage, coverage, bounded_coverage, entropy");
  pre->add_option("name", name, "preset name")->required();
  pre->add_option("--out", out, "write to FILE instead of stdout");

  auto* plot = app.add_subcommand("plot", "render records.csv as an SVG with 95% bands");
  plot->add_option("records", records_path, "records CSV")->required();
  plot->add_option("--out", out, "SVG path (default: records path with .svg)");

  auto* check = app.add_subcommand("check-guarantees", "check the one-iteration curvature guarantee per seed");
  check->add_option("config", config_path, "experiment config (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return cmd_run(config_path, seed, out, runs, timing);
    if (*pre) return cmd_preset(name, out);
    if (*plot) return cmd_plot(records_path, out);
    if (*check) return cmd_check(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "config error: instance too large: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
