#ifndef KGAMMA_GRID_HPP
#define KGAMMA_GRID_HPP

#include <cmath>
#include <string>
#include <vector>

#include "kgamma/precision.hpp"

namespace kgamma {

enum class GridSpacing { Log, Linear };

// Deterministic sampling plan over x (or t), with optional parameter
// sweeps.  Points are generated in binary64 so every precision tier sees
// the identical abscissae.
struct GridSpec {
  double x_min = 1e-3;
  double x_max = 1e3;
  int points = 200;
  GridSpacing spacing = GridSpacing::Log;
  std::vector<double> k_list;
  std::vector<int> m_list;
  std::vector<int> r_list;

  void validate() const {
    if (!(x_min > 0) || !(x_min < x_max))
      throw domain_error("GridSpec: require 0 < x_min < x_max");
    if (points < 2) throw domain_error("GridSpec: points must be >= 2");
  }
};

inline std::vector<double> grid_points(const GridSpec& g) {
  g.validate();
  std::vector<double> xs(g.points);
  if (g.spacing == GridSpacing::Log) {
    const double la = std::log(g.x_min), lb = std::log(g.x_max);
    for (int i = 0; i < g.points; ++i)
      xs[i] = std::exp(la + (lb - la) * i / (g.points - 1));
  } else {
    for (int i = 0; i < g.points; ++i)
      xs[i] = g.x_min + (g.x_max - g.x_min) * i / (g.points - 1);
  }
  return xs;
}

// Sweep defaults used by the certifier.
inline GridSpec default_certify_grid() {
  GridSpec g;
  g.k_list = {0.5, 1, 2, 3};
  g.m_list = {2, 3, 4, 5};
  g.r_list = {1, 2, 3, 4, 5, 6};
  return g;
}

// Identity-suite default: x log-spaced 1e-2..1e2 with 50 points.
inline GridSpec default_identity_grid() {
  GridSpec g;
  g.x_min = 1e-2;
  g.x_max = 1e2;
  g.points = 50;
  g.k_list = {0.5, 1, 2, 3};
  g.m_list = {2, 3, 4, 5};
  g.r_list = {1, 2, 3};
  return g;
}

// Lemma 3 default: t log-spaced 1e-3..1e2 with 100 points, n in 1..8.
inline GridSpec default_lemma3_grid() {
  GridSpec g;
  g.x_min = 1e-3;
  g.x_max = 1e2;
  g.points = 100;
  return g;
}

}  // namespace kgamma

#endif  // KGAMMA_GRID_HPP
