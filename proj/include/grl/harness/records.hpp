#pragma once

#include "grl/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace grl::harness {

inline constexpr const char* kCsvHeader =
    "seed,algorithm,iteration,objective,objective_stderr,bound_value,k_sub,k_sup,wall_ms";

struct RunRecord {
  std::uint64_t seed = 0;
  std::string algorithm;
  int iteration = 0;
  double objective = 0.0;
  double objective_stderr = 0.0;
  double bound_value = 0.0;
  double k_sub = 0.0;
  double k_sup = 0.0;
  double wall_ms = 0.0;

  bool operator==(const RunRecord&) const = default;
};

/// Shortest text that parses back to the same double; nan and inf spelled out.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

inline void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.seed << ',' << r.algorithm << ',' << r.iteration << ',' << format_double(r.objective) << ','
        << format_double(r.objective_stderr) << ',' << format_double(r.bound_value) << ','
        << format_double(r.k_sub) << ',' << format_double(r.k_sup) << ',' << format_double(r.wall_ms)
        << '\n';
  }
}

inline std::string to_csv(const std::vector<RunRecord>& records) {
  std::ostringstream os;
  write_csv(os, records);
  return os.str();
}

namespace detail {
inline double parse_double(const std::string& field, int line) {
  char* end = nullptr;
  const double x = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size()) {
    throw ConfigError("records line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return x;
}
}  // namespace detail

inline std::vector<RunRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("records: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ConfigError("records line 1: unexpected header '" + line + "'");
  std::vector<RunRecord> out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 9) {
      throw ConfigError("records line " + std::to_string(lineno) + ": expected 9 fields, got " +
                        std::to_string(f.size()));
    }
    RunRecord r;
    try {
      r.seed = std::stoull(f[0]);
      r.iteration = std::stoi(f[2]);
    } catch (const std::exception&) {
      throw ConfigError("records line " + std::to_string(lineno) + ": bad seed or iteration");
    }
    r.algorithm = f[1];
    r.objective = detail::parse_double(f[3], lineno);
    r.objective_stderr = detail::parse_double(f[4], lineno);
    r.bound_value = detail::parse_double(f[5], lineno);
    r.k_sub = detail::parse_double(f[6], lineno);
    r.k_sup = detail::parse_double(f[7], lineno);
    r.wall_ms = detail::parse_double(f[8], lineno);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<RunRecord> load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open records file");
  return read_csv(in);
}

struct SummaryRow {
  std::string algorithm;
  int iteration = 0;
  std::size_t runs = 0;
  double mean = 0.0;
  /// Sample standard deviation across seeds (0 for a single run).
  double std_dev = 0.0;
};

/// Order of algorithms by first appearance.
inline std::vector<std::string> algorithm_order(const std::vector<RunRecord>& records) {
  std::vector<std::string> order;
  for (const auto& r : records) {
    if (std::find(order.begin(), order.end(), r.algorithm) == order.end()) order.push_back(r.algorithm);
  }
  return order;
}

/// Mean and sample std of the objective over seeds, per (algorithm, iteration).
inline std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
  std::map<std::pair<std::string, int>, std::vector<double>> groups;
  for (const auto& r : records) groups[{r.algorithm, r.iteration}].push_back(r.objective);
  std::vector<SummaryRow> out;
  for (const auto& alg : algorithm_order(records)) {
    for (auto it = groups.lower_bound({alg, INT32_MIN}); it != groups.end() && it->first.first == alg; ++it) {
      const auto& xs = it->second;
      SummaryRow row{alg, it->first.second, xs.size(), 0.0, 0.0};
      for (double x : xs) row.mean += x;
      row.mean /= static_cast<double>(xs.size());
      if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - row.mean) * (x - row.mean);
        row.std_dev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

inline void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "algorithm,iteration,runs,mean,std\n";
  for (const auto& r : rows) {
    out << r.algorithm << ',' << r.iteration << ',' << r.runs << ',' << format_double(r.mean) << ','
        << format_double(r.std_dev) << '\n';
  }
}

}  // namespace grl::harness
