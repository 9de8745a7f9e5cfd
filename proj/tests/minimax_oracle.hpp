#pragma once

// Brute-force game tree over a distance matrix, for checking the solver.
// Every cop tuple is enumerated as an ordered list; nothing is cached.

#include <algorithm>
#include <limits>
#include <vector>

namespace oracle {

struct Game {
  std::vector<std::vector<double>> d;
  std::vector<double> tau;  // tau[0] is the first step
  bool intermediate = false;

  int n() const { return static_cast<int>(d.size()); }
  bool reach(int a, int b, double t) const { return d[a][b] <= t + 1e-12; }

  double gap(int r, const std::vector<int>& cops) const {
    double g = std::numeric_limits<double>::infinity();
    for (int c : cops) g = std::min(g, d[r][c]);
    return g;
  }

  // Minimum over cop tuples reachable slot by slot.
  double cops_min(int step, int r, const std::vector<int>& from, std::vector<int>& to, std::size_t slot) const {
    if (slot == from.size()) return value(step + 1, r, to);
    double best = std::numeric_limits<double>::infinity();
    for (int c = 0; c < n(); ++c) {
      if (!reach(from[slot], c, tau[step])) continue;
      to[slot] = c;
      best = std::min(best, cops_min(step, r, from, to, slot + 1));
    }
    return best;
  }

  // Value with steps tau[step..] still to play.
  double value(std::size_t step, int r, const std::vector<int>& cops) const {
    if (step == tau.size()) return gap(r, cops);
    double best = -std::numeric_limits<double>::infinity();
    for (int r2 = 0; r2 < n(); ++r2) {
      if (!reach(r, r2, tau[step])) continue;
      std::vector<int> to(cops.size());
      best = std::max(best, cops_min(static_cast<int>(step), r2, cops, to, 0));
    }
    return intermediate ? std::min(best, gap(r, cops)) : best;
  }
};

}  // namespace oracle
