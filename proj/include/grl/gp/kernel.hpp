#pragma once

#include "grl/core/gmdp.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace grl::gp {

using Location = std::array<double, 2>;

enum class MaternNu { half, three_halves, five_halves };

inline MaternNu parse_nu(double nu) {
  if (nu == 0.5) return MaternNu::half;
  if (nu == 1.5) return MaternNu::three_halves;
  if (nu == 2.5) return MaternNu::five_halves;
  throw std::invalid_argument("Matern smoothness must be one of 0.5, 1.5, 2.5 (got " +
                              std::to_string(nu) + ")");
}

inline double nu_value(MaternNu nu) {
  switch (nu) {
    case MaternNu::half: return 0.5;
    case MaternNu::three_halves: return 1.5;
    case MaternNu::five_halves: return 2.5;
  }
  return 2.5;
}

struct MaternKernel {
  MaternNu nu = MaternNu::five_halves;
  double lengthscale = 2.0;
  double signal_variance = 1.0;

  double operator()(double distance) const {
    const double r = distance / lengthscale;
    switch (nu) {
      case MaternNu::half:
        return signal_variance * std::exp(-r);
      case MaternNu::three_halves: {
        const double a = std::sqrt(3.0) * r;
        return signal_variance * (1.0 + a) * std::exp(-a);
      }
      case MaternNu::five_halves: {
        const double a = std::sqrt(5.0) * r;
        return signal_variance * (1.0 + a + a * a / 3.0) * std::exp(-a);
      }
    }
    return 0.0;
  }
};

struct GpModel {
  std::vector<Location> locations;
  MaternKernel kernel;
  double noise_variance = 0.1;

  void validate() const {
    if (!(kernel.lengthscale > 0.0)) throw std::invalid_argument("gp: lengthscale must be > 0");
    if (!(kernel.signal_variance > 0.0)) throw std::invalid_argument("gp: signal_variance must be > 0");
    if (!(noise_variance > 0.0)) throw std::invalid_argument("gp: noise_variance must be > 0");
    if (locations.empty()) throw std::invalid_argument("gp: no locations");
  }
};

inline double distance(const Location& a, const Location& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

inline double matern_kernel(const GpModel& model, const Location& a, const Location& b) {
  return model.kernel(distance(a, b));
}

/// Cell centers with unit spacing.
inline std::vector<Location> grid_locations(const GridGeometry& geo) {
  std::vector<Location> out(static_cast<std::size_t>(geo.num_states()));
  for (int s = 0; s < geo.num_states(); ++s) {
    out[static_cast<std::size_t>(s)] = {geo.x(s) + 0.5, geo.y(s) + 0.5};
  }
  return out;
}

}  // namespace grl::gp
