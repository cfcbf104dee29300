#pragma once

#include "grl/harness/records.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace grl::harness {

struct PlotStyle {
  std::string title = "objective per iteration";
  std::string x_label = "iteration";
  std::string y_label = "J(pi)";
  int width = 800;
  int height = 500;
};

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace detail {
/// Round tick step (1, 2 or 5 times a power of ten) giving about n ticks.
inline double nice_step(double span, int n) {
  const double raw = span / std::max(n, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

inline std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}
}  // namespace detail

/// Self-contained SVG: per algorithm, the mean objective over seeds against
/// iteration with a shaded normal-approximation 95% band (1.96 std / sqrt(runs)).
inline std::string emit_plot(const std::vector<RunRecord>& records, const PlotStyle& style = {}) {
  const auto rows = summarize(records);
  const auto algos = algorithm_order(records);
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#e377c2", "#17becf"};

  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  bool first = true;
  for (const auto& r : rows) {
    const double half = r.runs > 1 ? 1.96 * r.std_dev / std::sqrt(static_cast<double>(r.runs)) : 0.0;
    if (!std::isfinite(r.mean)) continue;
    if (first) {
      x_min = x_max = r.iteration;
      y_min = r.mean - half;
      y_max = r.mean + half;
      first = false;
    }
    x_min = std::min<double>(x_min, r.iteration);
    x_max = std::max<double>(x_max, r.iteration);
    y_min = std::min(y_min, r.mean - half);
    y_max = std::max(y_max, r.mean + half);
  }
  if (x_max <= x_min) x_max = x_min + 1;
  if (y_max - y_min < 1e-12) {
    const double pad = std::max(1.0, std::abs(y_max) * 0.1);
    y_min -= pad;
    y_max += pad;
  } else {
    const double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;
  }

  const double left = 80, right = 170, top = 40, bottom = 60;
  const double pw = style.width - left - right, ph = style.height - top - bottom;
  auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * pw; };
  auto sy = [&](double y) { return top + (1.0 - (y - y_min) / (y_max - y_min)) * ph; };
  using detail::num;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << num(left + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << xml_escape(style.title) << "</text>\n";

  // axes and ticks
  svg << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
      << "<line x1=\"" << num(left) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(left + pw) << "\" y2=\""
      << num(top + ph) << "\"/>\n"
      << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left) << "\" y2=\""
      << num(top + ph) << "\"/>\n</g>\n";
  svg << "<g font-size=\"11\" fill=\"black\">\n";
  const double xs = std::max(1.0, detail::nice_step(x_max - x_min, 10));
  for (double x = std::ceil(x_min / xs) * xs; x <= x_max + 1e-9; x += xs) {
    svg << "<line x1=\"" << num(sx(x)) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(sx(x)) << "\" y2=\""
        << num(top + ph + 5) << "\" stroke=\"black\"/>"
        << "<text x=\"" << num(sx(x)) << "\" y=\"" << num(top + ph + 18) << "\" text-anchor=\"middle\">"
        << num(x) << "</text>\n";
  }
  const double ys = detail::nice_step(y_max - y_min, 6);
  for (double y = std::ceil(y_min / ys) * ys; y <= y_max + 1e-12; y += ys) {
    svg << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(sy(y)) << "\" x2=\"" << num(left) << "\" y2=\""
        << num(sy(y)) << "\" stroke=\"black\"/>"
        << "<text x=\"" << num(left - 8) << "\" y=\"" << num(sy(y) + 4) << "\" text-anchor=\"end\">"
        << num(std::abs(y) < ys * 1e-9 ? 0.0 : y) << "</text>\n";
  }
  svg << "</g>\n"
      << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(style.height - 15)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << xml_escape(style.x_label) << "</text>\n"
      << "<text x=\"20\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 20 "
      << num(top + ph / 2) << ")\">" << xml_escape(style.y_label) << "</text>\n";

  for (std::size_t a = 0; a < algos.size(); ++a) {
    const char* color = palette[a % (sizeof palette / sizeof *palette)];
    std::vector<const SummaryRow*> series;
    for (const auto& r : rows) {
      if (r.algorithm == algos[a] && std::isfinite(r.mean)) series.push_back(&r);
    }
    if (series.empty()) continue;
    const bool band = std::any_of(series.begin(), series.end(), [](const SummaryRow* r) { return r->runs > 1; });
    if (band) {
      svg << "<polygon fill=\"" << color << "\" fill-opacity=\"0.2\" stroke=\"none\" points=\"";
      auto half = [](const SummaryRow* r) {
        return r->runs > 1 ? 1.96 * r->std_dev / std::sqrt(static_cast<double>(r->runs)) : 0.0;
      };
      for (const auto* r : series) svg << num(sx(r->iteration)) << ',' << num(sy(r->mean + half(r))) << ' ';
      for (auto it = series.rbegin(); it != series.rend(); ++it) {
        svg << num(sx((*it)->iteration)) << ',' << num(sy((*it)->mean - half(*it))) << ' ';
      }
      svg << "\"/>\n";
    }
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto* r : series) svg << num(sx(r->iteration)) << ',' << num(sy(r->mean)) << ' ';
    svg << "\"/>\n";
    const double ly = top + 10 + 20.0 * static_cast<double>(a);
    svg << "<line x1=\"" << num(left + pw + 15) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(left + pw + 40)
        << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>"
        << "<text x=\"" << num(left + pw + 46) << "\" y=\"" << num(ly + 4) << "\" font-size=\"12\">"
        << xml_escape(algos[a]) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace grl::harness
